#include "lnc/nc_polynomial.hpp"

#include <stdexcept>

#include "lnc/tm_set.hpp"

namespace lnc {

NCPolynomial NCPolynomial::variable(int index) {
  if (index < 1) {
    throw std::invalid_argument("variable index must be positive");
  }
  return monomial({index}, 1);
}

NCPolynomial NCPolynomial::monomial(Word word, Integer coefficient) {
  NCPolynomial p;
  if (coefficient != 0) {
    p.terms_.emplace(std::move(word), std::move(coefficient));
  }
  return p;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& other) const {
  NCPolynomial result = *this;
  for (const auto& [word, coeff] : other.terms_) {
    auto it = result.terms_.find(word);
    if (it == result.terms_.end()) {
      result.terms_.emplace(word, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) {
        result.terms_.erase(it);
      }
    }
  }
  return result;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& other) const {
  NCPolynomial negated;
  for (const auto& [word, coeff] : other.terms_) {
    negated.terms_.emplace(word, -coeff);
  }
  return *this + negated;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& other) const {
  NCPolynomial result;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : other.terms_) {
      Word word = wa;
      word.insert(word.end(), wb.begin(), wb.end());
      auto it = result.terms_.find(word);
      if (it == result.terms_.end()) {
        Integer c = ca * cb;
        if (c != 0) {
          result.terms_.emplace(std::move(word), std::move(c));
        }
      } else {
        it->second += ca * cb;
        if (it->second == 0) {
          result.terms_.erase(it);
        }
      }
    }
  }
  return result;
}

std::string NCPolynomial::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [word, coeff] : terms_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += coeff > 0 ? "+" : "-";
    Integer magnitude = coeff > 0 ? coeff : Integer(-coeff);
    if (magnitude != 1 || word.empty()) {
      out += ' ';
      out += magnitude.str();
    }
    for (int v : word) {
      out += " x" + std::to_string(v);
    }
  }
  return out;
}

NCPolynomial commutator_recursive(int m) {
  if (m < 1) {
    throw std::invalid_argument("bracket length must be at least 1");
  }
  NCPolynomial result = NCPolynomial::variable(1);
  for (int k = 2; k <= m; ++k) {
    const NCPolynomial xk = NCPolynomial::variable(k);
    result = result * xk - xk * result;
  }
  return result;
}

NCPolynomial commutator_via_tm(int m) {
  if (m < 2) {
    throw std::invalid_argument("bracket length must be at least 2");
  }
  NCPolynomial result;
  for (const Permutation& sigma : enumerate_tm(m)) {
    Word word;
    word.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
      word.push_back(sigma(i));
    }
    result = result + NCPolynomial::monomial(std::move(word), sign(sigma));
  }
  return result;
}

} // namespace lnc
