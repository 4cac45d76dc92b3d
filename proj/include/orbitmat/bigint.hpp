#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitmat {

// Signed arbitrary-precision integer. Values that fit in 64 bits stay in a
// single word (no allocation); anything larger promotes to sign-magnitude
// base-2^32 limbs. Only what fraction-free elimination needs: ring ops,
// comparisons, and exact truncating division.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v) : small_(v) {}  // NOLINT: implicit by design

  bool is_zero() const { return is_big_ ? mag_.empty() : small_ == 0; }
  int sign() const;

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws Overflow when it does not fit

  BigInt operator-() const;
  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  // Truncating division: quotient rounds toward zero, remainder keeps the
  // numerator's sign. Throws on division by zero.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quotient, BigInt& remainder);

  // Division known to be exact; a nonzero remainder is an internal error.
  BigInt div_exact(const BigInt& den) const;

  std::string to_string() const;  // decimal

  static int compare(const BigInt& a, const BigInt& b);

 private:
  void promote();      // small -> limbs
  void normalize();    // trim limbs, demote when small again

  std::int64_t small_ = 0;
  bool is_big_ = false;
  int sign_ = 0;                    // -1/0/+1, meaningful when is_big_
  std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros
};

}  // namespace orbitmat
