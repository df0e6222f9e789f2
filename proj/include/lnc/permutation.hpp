#ifndef LNC_PERMUTATION_HPP
#define LNC_PERMUTATION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lnc {

/// A bijection of {1..m} in one-line form. Positions and values are 1-based
/// at the interface. Immutable after construction.
class Permutation {
public:
  /// Construct from one-line images, images[i-1] = sigma(i).
  /// Throws std::invalid_argument if the list is not a bijection of {1..m}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// The i-reverse permutation tau_i: reverses 1..i, fixes i+1..m.
  static Permutation reverse(int degree, int i);

  /// The cycle (j, j-1, ..., 1): maps 1 -> j and k -> k-1 for 2 <= k <= j,
  /// fixes everything above j. Cycle notation (a1 a2 ... ak) maps a1 -> a2.
  static Permutation descending_cycle(int degree, int j);

  int degree() const { return static_cast<int>(images_.size()); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }

  /// sigma^{-1}(v), 1-based.
  int preimage(int v) const;

  /// this o inner: inner applies first, result(i) = (*this)(inner(i)).
  Permutation compose(const Permutation& inner) const;

  Permutation inverse() const;

  bool is_identity() const;

  /// View as an element of a larger symmetric group, fixing all symbols
  /// above the current degree.
  Permutation embed(int degree) const;

  const std::vector<int>& images() const { return images_; }

  /// "v1,v2,...,vm"
  std::string one_line() const;

  /// Two-row display for humans.
  std::string two_row() const;

  static Permutation parse_one_line(std::string_view text);

  // Lexicographic on one-line form; degrees compare by prefix.
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// outer o inner with inner applied first.
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  return outer.compose(inner);
}

inline Permutation operator*(const Permutation& outer, const Permutation& inner) {
  return outer.compose(inner);
}

/// All m! permutations of degree m in lexicographic order. Intended for
/// exhaustive sweeps at small m.
std::vector<Permutation> all_permutations(int m);

} // namespace lnc

#endif
