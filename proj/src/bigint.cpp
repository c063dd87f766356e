#include "lsq/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsq {

namespace {

constexpr uint64_t kBase = uint64_t{1} << 32;

int bit_length(const std::vector<uint32_t>& mag) {
  if (mag.empty()) return 0;
  uint32_t top = mag.back();
  int bits = 0;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return static_cast<int>(mag.size() - 1) * 32 + bits;
}

bool get_bit(const std::vector<uint32_t>& mag, int i) {
  return (mag[static_cast<size_t>(i) / 32] >> (i % 32)) & 1u;
}

}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
  if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_int64() const noexcept {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return u <= static_cast<uint64_t>(INT64_MAX);
  return u <= static_cast<uint64_t>(INT64_MAX) + 1;
}

long long BigInt::to_int64() const {
  uint64_t u = 0;
  if (!mag_.empty()) u = mag_[0];
  if (mag_.size() > 1) u |= static_cast<uint64_t>(mag_[1]) << 32;
  if (sign_ < 0) return static_cast<long long>(~u + 1);
  return static_cast<long long>(u);
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(big.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
    out[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[big.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry != 0) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    mag_ = add_mag(mag_, rhs.mag_);
    return *this;
  }
  int c = cmp_mag(mag_, rhs.mag_);
  if (c == 0) {
    sign_ = 0;
    mag_.clear();
  } else if (c > 0) {
    mag_ = sub_mag(mag_, rhs.mag_);
  } else {
    mag_ = sub_mag(rhs.mag_, mag_);
    sign_ = rhs.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  mag_ = mul_mag(mag_, rhs.mag_);
  sign_ *= rhs.sign_;
  return *this;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

void BigInt::divmod(const BigInt& a, const BigInt& d, BigInt& q, BigInt& r) {
  if (d.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  // binary long division on magnitudes
  std::vector<uint32_t> quot((a.mag_.size()) + 1, 0);
  BigInt rem;  // nonnegative magnitude accumulator
  int bits = bit_length(a.mag_);
  for (int i = bits - 1; i >= 0; --i) {
    // rem = rem * 2 + bit
    uint32_t carry = get_bit(a.mag_, i) ? 1u : 0u;
    for (size_t k = 0; k < rem.mag_.size(); ++k) {
      uint32_t next = rem.mag_[k] >> 31;
      rem.mag_[k] = (rem.mag_[k] << 1) | carry;
      carry = next;
    }
    if (carry) rem.mag_.push_back(carry);
    if (cmp_mag(rem.mag_, d.mag_) >= 0) {
      rem.mag_ = sub_mag(rem.mag_, d.mag_);
      quot[static_cast<size_t>(i) / 32] |= uint32_t{1} << (i % 32);
    }
  }
  q.mag_ = std::move(quot);
  q.sign_ = a.sign_ * d.sign_;
  q.trim();
  r.mag_ = std::move(rem.mag_);
  r.sign_ = a.sign_;
  r.trim();
}

BigInt BigInt::exact_div(const BigInt& d) const {
  BigInt q, r;
  divmod(*this, d, q, r);
  if (!r.is_zero()) throw std::logic_error("BigInt: exact_div with nonzero remainder");
  return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // binary gcd: factor out common powers of two, then subtract
  auto shift_right_one = [](std::vector<uint32_t>& m) {
    for (size_t k = 0; k < m.size(); ++k) {
      m[k] >>= 1;
      if (k + 1 < m.size()) m[k] |= (m[k + 1] & 1u) << 31;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
  };
  auto is_even = [](const std::vector<uint32_t>& m) { return (m[0] & 1u) == 0; };
  int shift = 0;
  while (is_even(a.mag_) && is_even(b.mag_)) {
    shift_right_one(a.mag_);
    shift_right_one(b.mag_);
    ++shift;
  }
  while (is_even(a.mag_)) shift_right_one(a.mag_);
  while (!b.mag_.empty()) {
    while (is_even(b.mag_)) shift_right_one(b.mag_);
    if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a.mag_, b.mag_);
    b.mag_ = sub_mag(b.mag_, a.mag_);
  }
  // restore the common power of two
  for (int i = 0; i < shift; ++i) {
    uint32_t carry = 0;
    for (size_t k = 0; k < a.mag_.size(); ++k) {
      uint32_t next = a.mag_[k] >> 31;
      a.mag_[k] = (a.mag_[k] << 1) | carry;
      carry = next;
    }
    if (carry) a.mag_.push_back(carry);
  }
  a.sign_ = 1;
  return a;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string digits;
  std::vector<uint32_t> m = mag_;
  // peel 9 decimal digits at a time via single-limb division
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (m.empty() && rem == 0) break;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace lsq
