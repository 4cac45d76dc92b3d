#include <cstdint>
#include <random>
#include <string>

#include "doctest.h"
#include "orbitmat/bigint.hpp"
#include "orbitmat/errors.hpp"
#include "orbitmat/function_spec.hpp"
#include "orbitmat/local_function.hpp"
#include "orbitmat/matrix.hpp"
#include "orbitmat/oracle.hpp"
#include "orbitmat/orbit.hpp"
#include "support/random_specs.hpp"

using namespace orbitmat;

namespace {

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string out;
  while (mag > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  return negative ? "-" + out : out;
}

LocalFunction local(const char* text, index_t n) {
  return localize(parse_spec(text), n);
}

}  // namespace

TEST_CASE("BigInt arithmetic matches 128-bit reference") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 4000; ++round) {
    // Stay within +-2^62 so sums fit 128 bits comfortably while products
    // still overflow 64 bits and exercise the limb paths.
    const auto a = static_cast<std::int64_t>(rng() >> 2) - (1LL << 61);
    const auto b = static_cast<std::int64_t>(rng() >> 2) - (1LL << 61);
    const BigInt ba(a), bb(b);

    CHECK((ba + bb).to_string() == int128_to_string(static_cast<__int128>(a) + b));
    CHECK((ba - bb).to_string() == int128_to_string(static_cast<__int128>(a) - b));
    CHECK((ba * bb).to_string() == int128_to_string(static_cast<__int128>(a) * b));
    CHECK((BigInt::compare(ba, bb) < 0) == (a < b));

    if (b != 0) {
      BigInt q, r;
      BigInt::divmod(ba * bb, bb, q, r);
      CHECK(r.is_zero());
      CHECK(q == ba);
      CHECK((ba * bb).div_exact(ba.is_zero() ? bb : ba) == (ba.is_zero() ? ba : bb));
    }
  }
}

TEST_CASE("BigInt divmod identity on large operands") {
  std::mt19937_64 rng(9001);
  for (int round = 0; round < 1500; ++round) {
    // Build multi-limb values as products, then check u = q*v + r, |r| < |v|.
    BigInt u = BigInt(static_cast<std::int64_t>(rng()) >> 1);
    for (int i = 0; i < 3; ++i) u *= BigInt(static_cast<std::int64_t>(rng() >> 20) - (1LL << 42));
    BigInt v = BigInt(static_cast<std::int64_t>(rng() >> 16) - (1LL << 46));
    v *= BigInt(static_cast<std::int64_t>(rng() >> 40) + 3);
    if (v.is_zero()) continue;

    BigInt q, r;
    BigInt::divmod(u, v, q, r);
    CHECK(q * v + r == u);
    const BigInt abs_r = r.sign() < 0 ? -r : r;
    const BigInt abs_v = v.sign() < 0 ? -v : v;
    CHECK(abs_r < abs_v);
    if (!r.is_zero() && !u.is_zero()) CHECK(r.sign() == u.sign());
  }
}

TEST_CASE("BigInt to_string over several limbs") {
  BigInt v(1);
  for (int i = 0; i < 5; ++i) v *= BigInt(1000000007LL);
  CHECK(v.to_string() == "1000000035000000490000003430000012005000016807");
  CHECK((-v).to_string() == "-1000000035000000490000003430000012005000016807");
  CHECK(BigInt(0).to_string() == "0");
  CHECK_FALSE(v.fits_int64());
  CHECK(BigInt(-17).to_int64() == -17);
}

TEST_CASE("bareiss agrees with cofactor expansion on small random matrices") {
  std::mt19937 rng(1717);
  for (int round = 0; round < 300; ++round) {
    const index_t n = 1 + rng() % 6;
    DenseIntMatrix a(n);
    for (index_t i = 1; i <= n; ++i) {
      for (index_t j = 1; j <= n; ++j) {
        a.at(i, j) = BigInt(static_cast<std::int64_t>(rng() % 7) - 3);
      }
    }
    REQUIRE(bareiss_det(a) == cofactor_det(a));
  }
  CHECK_THROWS_AS(cofactor_det(DenseIntMatrix(7)), Error);
}

TEST_CASE("determinants multiply over triangular factors") {
  std::mt19937 rng(2024);
  for (int round = 0; round < 50; ++round) {
    const index_t n = 2 + rng() % 7;
    DenseIntMatrix lower(n), upper(n);
    BigInt expected(1);
    for (index_t i = 1; i <= n; ++i) {
      for (index_t j = 1; j <= i; ++j) {
        lower.at(i, j) = BigInt(static_cast<std::int64_t>(rng() % 9) - 4);
        upper.at(j, i) = BigInt(static_cast<std::int64_t>(rng() % 9) - 4);
      }
      if (lower.at(i, i).is_zero()) lower.at(i, i) = BigInt(2);
      if (upper.at(i, i).is_zero()) upper.at(i, i) = BigInt(-3);
      expected *= lower.at(i, i) * upper.at(i, i);
    }
    REQUIRE(bareiss_det(dense_mul(lower, upper)) == expected);
  }
}

TEST_CASE("determinant indicator on known instances") {
  CHECK(bareiss_det(DenseIntMatrix::identity(3)) == BigInt(1));
  CHECK(bareiss_det(dense_from_sparse(build_ihat(local("table:1>2,2>1", 2)))) == BigInt(0));
  CHECK(bareiss_det(dense_from_sparse(build_ihat(local("collatz", 50)))) == BigInt(1));
}

TEST_CASE("dense helpers") {
  const auto m = build_m(local("shift:t=1", 3));
  const auto dense = dense_from_sparse(m);
  CHECK(dense.at(2, 1) == BigInt(1));
  CHECK(dense.at(3, 2) == BigInt(1));
  CHECK(dense.at(1, 1) == BigInt(0));
  CHECK(dense.at(1, 3) == BigInt(0));

  CHECK(dense_mul(DenseIntMatrix::identity(3), dense) == dense);
  CHECK(dense_mul(dense, dense) == dense_from_sparse(power(m, 2)));
  CHECK_THROWS_AS(dense_mul(dense, DenseIntMatrix::identity(4)), Error);
}

TEST_CASE("unit matrix products collapse by the matching index") {
  auto e13 = DenseIntMatrix(3);
  e13.at(1, 3) = BigInt(1);
  CHECK(en_product(3, 1, 2, 2, 3) == e13);
  CHECK(en_product(3, 1, 2, 3, 1) == DenseIntMatrix(3));  // b != c
  auto e11 = DenseIntMatrix(2);
  e11.at(1, 1) = BigInt(1);
  CHECK(en_product(2, 1, 1, 1, 1) == e11);
  CHECK_THROWS_AS(en_product(3, 0, 1, 1, 1), Error);
  CHECK_THROWS_AS(en_product(3, 1, 4, 1, 1), Error);
}

TEST_CASE("verify_inverse") {
  const auto chain = local("shift:t=1", 10);
  CHECK(verify_inverse(build_ihat(chain), inverse_via_orbits(chain, heights(chain))));

  const auto tiny = local("shift:t=1", 2);
  SparseSignMatrix identity2;
  identity2.n = 2;
  identity2.columns = {{{1, +1}}, {{2, +1}}};
  CHECK_FALSE(verify_inverse(build_ihat(tiny), identity2));

  const auto three = local("rcwa:mod=3;0:1,0;1:2,1;2:5,-1;cut=1", 50);
  CHECK(verify_inverse(build_ihat(three), inverse_via_orbits(three, heights(three))));

  CHECK_THROWS_AS(verify_inverse(build_ihat(chain), identity2), Error);  // dimension mismatch
  CHECK_THROWS_AS(verify_inverse(build_ihat(chain), inverse_via_orbits(chain, heights(chain)), 4),
                  Error);  // size cap
}

TEST_CASE("sparse powers equal dense powers") {
  for (const auto& instance : testsupport::make_random_instances(0xbeefu, 25)) {
    CAPTURE(instance.spec_text);
    const auto lf = localize(parse_spec(instance.spec_text), std::min<index_t>(instance.n, 32));
    const auto m = build_m(lf);
    const auto dense_m = dense_from_sparse(m);
    DenseIntMatrix dense_power = dense_m;
    for (index_t k = 1; k <= lf.n(); ++k) {
      const auto sparse_power = power(m, k);
      REQUIRE(dense_power == dense_from_sparse(sparse_power));
      if (nnz(sparse_power) == 0) break;  // stays zero from here on
      dense_power = dense_mul(dense_m, dense_power);
    }
  }
}

TEST_CASE("indicator equivalence on random instances") {
  for (const auto& instance : testsupport::make_random_instances(0x5eedu, 30)) {
    CAPTURE(instance.spec_text);
    const auto lf = localize(parse_spec(instance.spec_text), std::min<index_t>(instance.n, 32));
    const auto det = bareiss_det(dense_from_sparse(build_ihat(lf)));
    const bool has_cycle = detect_cycle(lf).found;
    REQUIRE(det == BigInt(has_cycle ? 0 : 1));
  }
}
