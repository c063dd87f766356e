#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lsq {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// The matrix kernels run on machine integers whenever the values allow it
// and promote to BigInt otherwise, so this class only has to be correct,
// not fast.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const noexcept { return sign_ == 0; }
  int sign() const noexcept { return sign_; }

  bool fits_int64() const noexcept;
  long long to_int64() const;  // valid only when fits_int64()

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

  // Quotient and remainder, truncated toward zero; |r| < |d|, sign(r) = sign(a).
  static void divmod(const BigInt& a, const BigInt& d, BigInt& q, BigInt& r);

  // Quotient of an exact division; throws std::logic_error on a remainder.
  BigInt exact_div(const BigInt& d) const;

  static BigInt gcd(BigInt a, BigInt b);

  std::string to_string() const;

 private:
  int sign_ = 0;                   // -1, 0, +1
  std::vector<uint32_t> mag_;      // little-endian magnitude; empty iff sign_ == 0

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
};

}  // namespace lsq
