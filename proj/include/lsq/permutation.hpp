#pragma once

#include <string>
#include <vector>

#include "lsq/error.hpp"

namespace lsq {

// A bijection of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  // images[i-1] is the image of i; must be a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  int operator()(int x) const {
    if (x < 1 || x > degree())
      throw Error(errc::bad_permutation, "point " + std::to_string(x) + " out of range");
    return images_[static_cast<size_t>(x - 1)];
  }

  Permutation inverse() const;

  // (a.then(b))(x) = b(a(x))
  Permutation then(const Permutation& next) const;

  const std::vector<int>& images() const noexcept { return images_; }

  // One-line notation: space-separated images of 1..n.
  static Permutation parse(const std::string& text, int degree);
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
};

}  // namespace lsq
