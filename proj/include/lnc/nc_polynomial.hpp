#ifndef LNC_NC_POLYNOMIAL_HPP
#define LNC_NC_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lnc {

using Integer = boost::multiprecision::cpp_int;

/// A word in the free monoid on variables x_1, x_2, ...; the empty word is
/// the unit monomial.
using Word = std::vector<int>;

/// Integer-coefficient formal sum of noncommutative words. Terms with zero
/// coefficient are never stored; term order is lexicographic on the word.
class NCPolynomial {
public:
  NCPolynomial() = default;

  static NCPolynomial zero() { return {}; }
  static NCPolynomial one() { return monomial({}, 1); }
  static NCPolynomial variable(int index);
  static NCPolynomial monomial(Word word, Integer coefficient);

  NCPolynomial operator+(const NCPolynomial& other) const;
  NCPolynomial operator-(const NCPolynomial& other) const;
  NCPolynomial operator*(const NCPolynomial& other) const;

  bool operator==(const NCPolynomial& other) const = default;

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Integer>& terms() const { return terms_; }

  /// Signed monomial listing, e.g. "+ x1 x2 - x2 x1"; "0" when empty.
  std::string str() const;

private:
  std::map<Word, Integer> terms_;
};

/// Left-normed bracket [x_1,...,x_m] expanded by the recursion
/// [x_1,...,x_m] = [[x_1,...,x_{m-1}], x_m] with [x_1,x_2] = x1x2 - x2x1.
NCPolynomial commutator_recursive(int m);

/// The same bracket assembled directly as the signed sum of the words
/// x_{sigma(1)}...x_{sigma(m)} over the members of T_m.
NCPolynomial commutator_via_tm(int m);

} // namespace lnc

#endif
