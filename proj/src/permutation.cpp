#include "tropical/permutation.hpp"

#include <numeric>
#include <sstream>

namespace tropical {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw PreconditionError("not a permutation: " + one_line());
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view one_line) {
  std::istringstream in{std::string(one_line)};
  std::vector<std::size_t> images;
  std::string tok;
  while (in >> tok) {
    std::size_t v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("invalid permutation entry '" + tok + "'");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    if (v == 0) throw ParseError("permutation entries are 1-based");
    images.push_back(v - 1);
  }
  if (images.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(images));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("compose: permutations of different degree");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[images_[i]] = i;
  return Permutation(std::move(out));
}

ExtMatrix Permutation::matrix() const {
  MatrixBuilder<ExtScalar> b(size(), size());
  for (std::size_t i = 0; i < size(); ++i) b(images_[i], i) = Scalar(0);
  return std::move(b).build();
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += "(";
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
      i = images_[i];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

std::string Permutation::one_line() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

}  // namespace tropical
