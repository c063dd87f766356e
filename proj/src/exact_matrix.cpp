#include "lsq/exact_matrix.hpp"

#include <climits>

#include "lsq/error.hpp"

namespace lsq {

namespace {

unsigned long long abs_ull(long long v) {
  return v < 0 ? ~static_cast<unsigned long long>(v) + 1 : static_cast<unsigned long long>(v);
}

unsigned long long max_abs(const std::vector<long long>& values) {
  unsigned long long m = 0;
  for (long long v : values) m = std::max(m, abs_ull(v));
  return m;
}

// dense int64 kernel; caller guarantees no overflow
void mul_kernel_small(const std::vector<long long>& a, const std::vector<long long>& b,
                      int n, std::vector<long long>& out) {
  out.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      long long aik = a[static_cast<size_t>(i) * n + k];
      if (aik == 0) continue;
      const long long* brow = &b[static_cast<size_t>(k) * n];
      long long* orow = &out[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  }
}

}  // namespace

ExactMatrix ExactMatrix::identity_matrix(int size) {
  ExactMatrix m(size);
  for (int i = 0; i < size; ++i) m.small_[static_cast<size_t>(i) * size + i] = 1;
  return m;
}

void ExactMatrix::promote() {
  if (big_) return;
  big_vals_.reserve(small_.size());
  for (long long v : small_) big_vals_.emplace_back(v);
  small_.clear();
  small_.shrink_to_fit();
  big_ = true;
}

BigInt ExactMatrix::at(int r, int c) const {
  size_t idx = static_cast<size_t>(r) * n_ + c;
  return big_ ? big_vals_[idx] : BigInt(small_[idx]);
}

long long ExactMatrix::at_small(int r, int c) const {
  return small_[static_cast<size_t>(r) * n_ + c];
}

void ExactMatrix::set(int r, int c, long long v) {
  size_t idx = static_cast<size_t>(r) * n_ + c;
  if (big_)
    big_vals_[idx] = BigInt(v);
  else
    small_[idx] = v;
}

void ExactMatrix::set(int r, int c, const BigInt& v) {
  size_t idx = static_cast<size_t>(r) * n_ + c;
  if (!big_) {
    if (v.fits_int64() && v.to_int64() != LLONG_MIN) {
      small_[idx] = v.to_int64();
      return;
    }
    promote();
  }
  big_vals_[idx] = v;
}

BigInt ExactMatrix::trace() const {
  BigInt total;
  for (int i = 0; i < n_; ++i) total += at(i, i);
  return total;
}

bool ExactMatrix::is_zero() const {
  if (!big_) {
    for (long long v : small_)
      if (v != 0) return false;
    return true;
  }
  for (const BigInt& v : big_vals_)
    if (!v.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_zero_one() const {
  if (!big_) {
    for (long long v : small_)
      if (v != 0 && v != 1) return false;
    return true;
  }
  for (const BigInt& v : big_vals_)
    if (!v.is_zero() && v != BigInt(1)) return false;
  return true;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (n_ != rhs.n_) throw Error(errc::size_mismatch, "matrix sizes differ");
  if (!big_ && !rhs.big_) {
    std::vector<long long> diff(small_.size());
    bool overflow = false;
    for (size_t i = 0; i < small_.size(); ++i) {
      long long r;
      if (__builtin_sub_overflow(small_[i], rhs.small_[i], &r) || r == LLONG_MIN) {
        overflow = true;
        break;
      }
      diff[i] = r;
    }
    if (!overflow) {
      small_ = std::move(diff);
      return *this;
    }
  }
  std::vector<BigInt> out(static_cast<size_t>(n_) * n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      out[static_cast<size_t>(r) * n_ + c] = at(r, c) - rhs.at(r, c);
  big_ = true;
  big_vals_ = std::move(out);
  small_.clear();
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw Error(errc::size_mismatch, "matrix sizes differ");
  const int n = a.n_;
  if (!a.big_ && !b.big_ && n > 0) {
    unsigned long long ma = max_abs(a.small_);
    unsigned long long mb = max_abs(b.small_);
    // n * ma * mb must stay below 2^63 for the raw kernel to be exact
    bool safe = ma == 0 || mb == 0 ||
                (unsigned __int128)ma * mb <=
                    static_cast<unsigned __int128>(LLONG_MAX) / static_cast<unsigned>(n);
    if (safe) {
      ExactMatrix out(n);
      mul_kernel_small(a.small_, b.small_, n, out.small_);
      return out;
    }
  }
  ExactMatrix out(n);
  out.promote();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      BigInt aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        BigInt t = aik;
        t *= b.at(k, j);
        out.big_vals_[static_cast<size_t>(i) * n + j] += t;
      }
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) return false;
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  for (int r = 0; r < a.n_; ++r)
    for (int c = 0; c < a.n_; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

ExactMatrix ExactMatrix::from_flat_small(int size, std::vector<long long> flat) {
  ExactMatrix m(size);
  m.small_ = std::move(flat);
  return m;
}

ExactMatrix ExactMatrix::from_flat_big(int size, std::vector<BigInt> flat) {
  ExactMatrix m(size);
  m.big_ = true;
  m.small_.clear();
  m.big_vals_ = std::move(flat);
  return m;
}

std::array<ExactMatrix, 5> relation_matrices(const LatinSquare& square) {
  const auto points = orthogonal_array(square);
  const int count = static_cast<int>(points.size());
  std::array<ExactMatrix, 5> mats{ExactMatrix(count), ExactMatrix(count), ExactMatrix(count),
                                  ExactMatrix(count), ExactMatrix(count)};
  for (int x = 0; x < count; ++x)
    for (int y = 0; y < count; ++y)
      mats[static_cast<size_t>(relation_of(points[static_cast<size_t>(x)],
                                           points[static_cast<size_t>(y)]))]
          .set(x, y, 1);
  return mats;
}

std::array<ExactMatrix, 5> dual_idempotent_matrices(const LatinSquare& square,
                                                    const Point& p) {
  check_point(square, p);
  const auto points = orthogonal_array(square);
  const int count = static_cast<int>(points.size());
  std::array<ExactMatrix, 5> mats{ExactMatrix(count), ExactMatrix(count), ExactMatrix(count),
                                  ExactMatrix(count), ExactMatrix(count)};
  for (int x = 0; x < count; ++x)
    mats[static_cast<size_t>(relation_of(p, points[static_cast<size_t>(x)]))].set(x, x, 1);
  return mats;
}

bool verify_intersection_identity(const LatinSquare& square) {
  const auto tensor = intersection_numbers(square);
  const auto points = orthogonal_array(square);
  const auto mats = relation_matrices(square);
  const int count = static_cast<int>(points.size());
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      ExactMatrix product = mats[static_cast<size_t>(i)] * mats[static_cast<size_t>(j)];
      for (int x = 0; x < count; ++x) {
        for (int y = 0; y < count; ++y) {
          int h = relation_of(points[static_cast<size_t>(x)], points[static_cast<size_t>(y)]);
          if (product.at(x, y) !=
              BigInt(tensor.p[static_cast<size_t>(h)][static_cast<size_t>(i)][static_cast<size_t>(j)]))
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lsq
