#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// A bijection of {0, …, n−1}. Text forms use 1-based indices.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// One-line 1-based images, e.g. "1 3 2".
  static Permutation parse(std::string_view one_line);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  bool is_identity() const;

  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  /// Tropical permutation matrix P with P(σ(i), i) = 0 and −∞ elsewhere, so
  /// that P_σ ⊗ P_τ = P_{σ∘τ}.
  ExtMatrix matrix() const;

  /// Disjoint-cycle notation, "id" for the identity, e.g. "(2 3)".
  std::string cycles() const;
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace tropical
