#include "orbitmat/bigint.hpp"

#include <algorithm>
#include <limits>

#include "orbitmat/errors.hpp"

namespace orbitmat {

namespace {

using Mag = std::vector<std::uint32_t>;
constexpr std::uint64_t kBase = 1ull << 32;

void trim(Mag& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Mag mag_from_u64(std::uint64_t v) {
  Mag m;
  if (v) m.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) m.push_back(static_cast<std::uint32_t>(v >> 32));
  return m;
}

int mag_cmp(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Mag mag_add(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  trim(out);
  return out;
}

// Requires |a| >= |b|.
Mag mag_sub(const Mag& a, const Mag& b) {
  Mag out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
    borrow = diff < 0 ? 1 : 0;
    out[i] = static_cast<std::uint32_t>(diff);
  }
  trim(out);
  return out;
}

Mag mag_mul(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + b.size()] += static_cast<std::uint32_t>(carry);
  }
  trim(out);
  return out;
}

// Knuth Algorithm D with 32-bit digits (after Hacker's Delight divmnu).
void mag_divmod(const Mag& u_in, const Mag& v_in, Mag& q_out, Mag& r_out) {
  const std::size_t vn = v_in.size();
  if (mag_cmp(u_in, v_in) < 0) {
    q_out.clear();
    r_out = u_in;
    return;
  }
  if (vn == 1) {
    const std::uint32_t d = v_in[0];
    q_out.assign(u_in.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = u_in.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | u_in[i];
      q_out[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim(q_out);
    r_out = mag_from_u64(rem);
    return;
  }

  const std::size_t un = u_in.size();
  const int s = __builtin_clz(v_in[vn - 1]);  // normalize so the top divisor digit has its high bit set
  Mag v(vn), u(un + 1);
  for (std::size_t i = vn; i-- > 1;) {
    v[i] = (v_in[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_in[i - 1]) >> (32 - s)) : 0u);
  }
  v[0] = v_in[0] << s;
  u[un] = s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u_in[un - 1]) >> (32 - s)) : 0u;
  for (std::size_t i = un; i-- > 1;) {
    u[i] = (u_in[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u_in[i - 1]) >> (32 - s)) : 0u);
  }
  u[0] = u_in[0] << s;

  q_out.assign(un - vn + 1, 0);
  for (std::size_t j = un - vn + 1; j-- > 0;) {
    std::uint64_t top = (static_cast<std::uint64_t>(u[j + vn]) << 32) | u[j + vn - 1];
    std::uint64_t qhat = top / v[vn - 1];
    std::uint64_t rhat = top % v[vn - 1];
    while (qhat >= kBase ||
           qhat * v[vn - 2] > (rhat << 32 | u[j + vn - 2])) {
      --qhat;
      rhat += v[vn - 1];
      if (rhat >= kBase) break;
    }

    // Multiply and subtract qhat * v from u[j .. j+vn].
    std::uint64_t carry = 0;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < vn; ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
      u[i + j] = static_cast<std::uint32_t>(t);
      borrow = t < 0 ? 1 : 0;
    }
    std::int64_t t = static_cast<std::int64_t>(u[j + vn]) - static_cast<std::int64_t>(carry) - borrow;
    u[j + vn] = static_cast<std::uint32_t>(t);

    if (t < 0) {  // qhat was one too large; add one divisor back
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < vn; ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
        u[i + j] = static_cast<std::uint32_t>(sum);
        c = sum >> 32;
      }
      u[j + vn] += static_cast<std::uint32_t>(c);
    }
    q_out[j] = static_cast<std::uint32_t>(qhat);
  }
  trim(q_out);

  r_out.assign(vn, 0);
  for (std::size_t i = 0; i < vn; ++i) {
    std::uint32_t high = (i + 1 < vn && s) ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i + 1]) << (32 - s)) : 0u;
    r_out[i] = (u[i] >> s) | high;
  }
  trim(r_out);
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

int BigInt::sign() const {
  if (is_big_) return sign_;
  return small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
}

void BigInt::promote() {
  if (is_big_) return;
  sign_ = small_ == 0 ? 0 : (small_ < 0 ? -1 : 1);
  mag_ = mag_from_u64(abs_u64(small_));
  is_big_ = true;
  small_ = 0;
}

void BigInt::normalize() {
  if (!is_big_) return;
  trim(mag_);
  if (mag_.empty()) sign_ = 0;
  if (mag_.size() <= 2) {
    std::uint64_t v = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
      is_big_ = false;
      mag_.clear();
      sign_ = 0;
    }
  }
}

bool BigInt::fits_int64() const {
  return !is_big_;  // normalize() demotes anything that fits
}

std::int64_t BigInt::to_int64() const {
  if (is_big_) throw Error(ErrorCode::Overflow, "value exceeds 64 bits");
  return small_;
}

BigInt BigInt::operator-() const {
  if (!is_big_) {
    if (small_ != std::numeric_limits<std::int64_t>::min()) return BigInt(-small_);
  }
  BigInt out = *this;
  out.promote();
  out.sign_ = -out.sign_;
  out.normalize();
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (!a.is_big_ && !b.is_big_) {
    std::int64_t sum = 0;
    if (!__builtin_add_overflow(a.small_, b.small_, &sum)) return BigInt(sum);
  }
  BigInt x = a, y = b;
  x.promote();
  y.promote();
  BigInt out;
  out.is_big_ = true;
  if (x.sign_ == 0) return b;
  if (y.sign_ == 0) return a;
  if (x.sign_ == y.sign_) {
    out.sign_ = x.sign_;
    out.mag_ = mag_add(x.mag_, y.mag_);
  } else {
    const int cmp = mag_cmp(x.mag_, y.mag_);
    if (cmp == 0) return BigInt(0);
    if (cmp > 0) {
      out.sign_ = x.sign_;
      out.mag_ = mag_sub(x.mag_, y.mag_);
    } else {
      out.sign_ = y.sign_;
      out.mag_ = mag_sub(y.mag_, x.mag_);
    }
  }
  out.normalize();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
  return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (!a.is_big_ && !b.is_big_) {
    std::int64_t prod = 0;
    if (!__builtin_mul_overflow(a.small_, b.small_, &prod)) return BigInt(prod);
  }
  BigInt x = a, y = b;
  x.promote();
  y.promote();
  BigInt out;
  out.is_big_ = true;
  out.sign_ = x.sign_ * y.sign_;
  out.mag_ = mag_mul(x.mag_, y.mag_);
  out.normalize();
  return out;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  const int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (!a.is_big_ && !b.is_big_) {
    return a.small_ == b.small_ ? 0 : (a.small_ < b.small_ ? -1 : 1);
  }
  BigInt x = a, y = b;
  x.promote();
  y.promote();
  const int cmp = mag_cmp(x.mag_, y.mag_);
  return sa >= 0 ? cmp : -cmp;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quotient, BigInt& remainder) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (!num.is_big_ && !den.is_big_ &&
      !(num.small_ == std::numeric_limits<std::int64_t>::min() && den.small_ == -1)) {
    quotient = BigInt(num.small_ / den.small_);
    remainder = BigInt(num.small_ % den.small_);
    return;
  }
  BigInt x = num, y = den;
  x.promote();
  y.promote();
  Mag q, r;
  mag_divmod(x.mag_, y.mag_, q, r);
  BigInt qo, ro;
  qo.is_big_ = true;
  qo.mag_ = std::move(q);
  qo.sign_ = qo.mag_.empty() ? 0 : x.sign_ * y.sign_;
  qo.normalize();
  ro.is_big_ = true;
  ro.mag_ = std::move(r);
  ro.sign_ = ro.mag_.empty() ? 0 : x.sign_;
  ro.normalize();
  quotient = std::move(qo);
  remainder = std::move(ro);
}

BigInt BigInt::div_exact(const BigInt& den) const {
  BigInt q, r;
  divmod(*this, den, q, r);
  if (!r.is_zero()) {
    throw Error(ErrorCode::Internal, "division expected to be exact left a remainder");
  }
  return q;
}

std::string BigInt::to_string() const {
  if (!is_big_) return std::to_string(small_);
  // Peel 9 decimal digits at a time.
  Mag mag = mag_;
  std::string out;
  Mag divisor = {1000000000u};
  while (!mag.empty()) {
    Mag q, r;
    mag_divmod(mag, divisor, q, r);
    std::uint32_t digits = r.empty() ? 0 : r[0];
    std::string part = std::to_string(digits);
    mag = std::move(q);
    if (!mag.empty()) part.insert(0, 9 - part.size(), '0');
    out.insert(0, part);
  }
  if (out.empty()) out = "0";
  if (sign_ < 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace orbitmat
