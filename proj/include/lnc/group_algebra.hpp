#ifndef LNC_GROUP_ALGEBRA_HPP
#define LNC_GROUP_ALGEBRA_HPP

#include <map>
#include <string>

#include "lnc/nc_polynomial.hpp"
#include "lnc/permutation.hpp"

namespace lnc {

/// Integer-coefficient formal sum of permutations of one fixed degree, an
/// element of the group ring Z S_m. Multiplication extends composition
/// bilinearly (inner factor applied first, as everywhere in this library).
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int degree);

  static GroupAlgebraElement zero(int degree) { return GroupAlgebraElement(degree); }
  static GroupAlgebraElement one(int degree);
  static GroupAlgebraElement term(Permutation sigma, Integer coefficient);

  GroupAlgebraElement operator+(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& other) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& other) const;

  bool operator==(const GroupAlgebraElement& other) const = default;

  int degree() const { return degree_; }
  size_t support_size() const { return terms_.size(); }
  const std::map<Permutation, Integer>& terms() const { return terms_; }

  /// Signed listing, e.g. "+ (1,2,3) - (2,1,3)".
  std::string str() const;

private:
  int degree_;
  std::map<Permutation, Integer> terms_;
};

/// v_m as defined: the signed sum of all members of T_m.
GroupAlgebraElement vm_definition(int m);

/// v_m as the binomial product over the descending cycles (j ... 1),
/// j = 2..m, smallest cycle outermost.
GroupAlgebraElement vm_cycles(int m);

/// v_m as the binomial product (1 - tau_2)(1 + tau_3)...(1 - (-1)^m tau_m).
GroupAlgebraElement vm_tau(int m);

/// Linear extension of sigma -> x_{sigma(1)} ... x_{sigma(m)}.
NCPolynomial apply_to_words(const GroupAlgebraElement& element);

} // namespace lnc

#endif
