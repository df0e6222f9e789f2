#include "lnc/group_algebra.hpp"

#include <stdexcept>

#include "lnc/tm_set.hpp"

namespace lnc {

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
  if (degree < 1) {
    throw std::invalid_argument("invalid degree " + std::to_string(degree));
  }
}

GroupAlgebraElement GroupAlgebraElement::one(int degree) {
  return term(Permutation::identity(degree), 1);
}

GroupAlgebraElement GroupAlgebraElement::term(Permutation sigma, Integer coefficient) {
  GroupAlgebraElement e(sigma.degree());
  if (coefficient != 0) {
    e.terms_.emplace(std::move(sigma), std::move(coefficient));
  }
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
  if (degree_ != other.degree_) {
    throw std::invalid_argument("degree mismatch in group algebra sum");
  }
  GroupAlgebraElement result = *this;
  for (const auto& [sigma, coeff] : other.terms_) {
    auto it = result.terms_.find(sigma);
    if (it == result.terms_.end()) {
      result.terms_.emplace(sigma, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) {
        result.terms_.erase(it);
      }
    }
  }
  return result;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& other) const {
  GroupAlgebraElement negated(other.degree_);
  for (const auto& [sigma, coeff] : other.terms_) {
    negated.terms_.emplace(sigma, -coeff);
  }
  return *this + negated;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& other) const {
  if (degree_ != other.degree_) {
    throw std::invalid_argument("degree mismatch in group algebra product");
  }
  GroupAlgebraElement result(degree_);
  for (const auto& [sa, ca] : terms_) {
    for (const auto& [sb, cb] : other.terms_) {
      result = result + term(sa.compose(sb), ca * cb);
    }
  }
  return result;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [sigma, coeff] : terms_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += coeff > 0 ? "+" : "-";
    Integer magnitude = coeff > 0 ? coeff : Integer(-coeff);
    if (magnitude != 1) {
      out += ' ';
      out += magnitude.str();
    }
    out += " (" + sigma.one_line() + ")";
  }
  return out;
}

GroupAlgebraElement vm_definition(int m) {
  if (m < 2) {
    throw std::invalid_argument("v_m needs degree at least 2");
  }
  GroupAlgebraElement result(m);
  for (const Permutation& sigma : enumerate_tm(m)) {
    result = result + GroupAlgebraElement::term(sigma, sign(sigma));
  }
  return result;
}

GroupAlgebraElement vm_cycles(int m) {
  if (m < 2) {
    throw std::invalid_argument("v_m needs degree at least 2");
  }
  // Factors ascending, (1 - (2 1)) leftmost: the expansion then produces
  // each member's descending-cycle factorization with the largest cycle
  // innermost, matching the membership witness.
  GroupAlgebraElement result = GroupAlgebraElement::one(m);
  for (int j = 2; j <= m; ++j) {
    const GroupAlgebraElement factor =
        GroupAlgebraElement::one(m) -
        GroupAlgebraElement::term(Permutation::descending_cycle(m, j), 1);
    result = result * factor;
  }
  return result;
}

GroupAlgebraElement vm_tau(int m) {
  if (m < 2) {
    throw std::invalid_argument("v_m needs degree at least 2");
  }
  GroupAlgebraElement result = GroupAlgebraElement::one(m);
  for (int i = 2; i <= m; ++i) {
    const int coefficient = i % 2 == 0 ? -1 : 1;
    const GroupAlgebraElement factor =
        GroupAlgebraElement::one(m) +
        GroupAlgebraElement::term(Permutation::reverse(m, i), coefficient);
    result = result * factor;
  }
  return result;
}

NCPolynomial apply_to_words(const GroupAlgebraElement& element) {
  NCPolynomial result;
  for (const auto& [sigma, coeff] : element.terms()) {
    Word word;
    word.reserve(static_cast<size_t>(element.degree()));
    for (int i = 1; i <= element.degree(); ++i) {
      word.push_back(sigma(i));
    }
    result = result + NCPolynomial::monomial(std::move(word), coeff);
  }
  return result;
}

} // namespace lnc
