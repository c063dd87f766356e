#include "lsq/permutation.hpp"

#include <sstream>

namespace lsq {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n)
      throw Error(errc::bad_permutation, "image " + std::to_string(v) + " out of range");
    if (seen[static_cast<size_t>(v)])
      throw Error(errc::bad_permutation, "image " + std::to_string(v) + " repeated");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<size_t>(i - 1)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i - 1)] - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree())
    throw Error(errc::bad_permutation, "composing permutations of different degrees");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= degree(); ++i) out[static_cast<size_t>(i - 1)] = next(images_[static_cast<size_t>(i - 1)]);
  return Permutation(std::move(out));
}

Permutation Permutation::parse(const std::string& text, int degree) {
  std::istringstream in(text);
  std::vector<int> images;
  int v;
  while (in >> v) images.push_back(v);
  if (static_cast<int>(images.size()) != degree)
    throw Error(errc::bad_permutation, "expected " + std::to_string(degree) + " images, got " +
                                           std::to_string(images.size()));
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::string out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(images_[i]);
  }
  return out;
}

}  // namespace lsq
