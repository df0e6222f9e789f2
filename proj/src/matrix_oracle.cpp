#include "lnc/matrix_oracle.hpp"

#include <stdexcept>

#include "lnc/sequence_action.hpp"

namespace lnc {

SparseIntMatrix::SparseIntMatrix(int dimension) : dimension_(dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("invalid matrix dimension");
  }
}

SparseIntMatrix SparseIntMatrix::unit(int dimension, int row, int col) {
  SparseIntMatrix m(dimension);
  if (row < 1 || row > dimension || col < 1 || col > dimension) {
    throw std::invalid_argument("matrix unit index out of range");
  }
  m.entries_.emplace(std::make_pair(row, col), 1);
  return m;
}

void SparseIntMatrix::set(int row, int col, Integer value) {
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(value);
  }
}

SparseIntMatrix SparseIntMatrix::operator+(const SparseIntMatrix& other) const {
  if (dimension_ != other.dimension_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  SparseIntMatrix result = *this;
  for (const auto& [pos, value] : other.entries_) {
    auto it = result.entries_.find(pos);
    Integer sum = it == result.entries_.end() ? value : it->second + value;
    result.set(pos.first, pos.second, std::move(sum));
  }
  return result;
}

SparseIntMatrix SparseIntMatrix::operator-(const SparseIntMatrix& other) const {
  SparseIntMatrix negated(other.dimension_);
  for (const auto& [pos, value] : other.entries_) {
    negated.entries_.emplace(pos, -value);
  }
  return *this + negated;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const {
  if (dimension_ != other.dimension_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  SparseIntMatrix result(dimension_);
  for (const auto& [pa, va] : entries_) {
    for (const auto& [pb, vb] : other.entries_) {
      if (pa.second != pb.first) {
        continue;
      }
      auto it = result.entries_.find({pa.first, pb.second});
      Integer sum = it == result.entries_.end() ? Integer(va * vb)
                                                : Integer(it->second + va * vb);
      result.set(pa.first, pb.second, std::move(sum));
    }
  }
  return result;
}

SparseIntMatrix SparseIntMatrix::scaled(const Integer& factor) const {
  SparseIntMatrix result(dimension_);
  if (factor == 0) {
    return result;
  }
  for (const auto& [pos, value] : entries_) {
    result.entries_.emplace(pos, value * factor);
  }
  return result;
}

std::vector<SparseIntMatrix> unit_chain(int m) {
  if (m < 1) {
    throw std::invalid_argument("chain length must be at least 1");
  }
  std::vector<SparseIntMatrix> units;
  units.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    units.push_back(SparseIntMatrix::unit(m + 1, i, i + 1));
  }
  return units;
}

bool permuted_product_is_nonzero(const std::vector<SparseIntMatrix>& units,
                                 const Permutation& sigma) {
  if (static_cast<int>(units.size()) != sigma.degree()) {
    throw std::invalid_argument("unit count does not match the degree");
  }
  const std::vector<SparseIntMatrix> ordered = act(sigma, units);
  SparseIntMatrix product = ordered.front();
  for (size_t k = 1; k < ordered.size(); ++k) {
    product = product * ordered[k];
  }
  return !product.is_zero();
}

SparseIntMatrix permuted_commutator(const std::vector<SparseIntMatrix>& units,
                                    const Permutation& sigma) {
  if (static_cast<int>(units.size()) != sigma.degree()) {
    throw std::invalid_argument("unit count does not match the degree");
  }
  if (units.size() < 2) {
    throw std::invalid_argument("commutator needs at least 2 factors");
  }
  const std::vector<SparseIntMatrix> ordered = act(sigma, units);
  SparseIntMatrix bracket = ordered.front();
  for (size_t k = 1; k < ordered.size(); ++k) {
    bracket = bracket * ordered[k] - ordered[k] * bracket;
  }
  return bracket;
}

SparseIntMatrix evaluate(const NCPolynomial& polynomial,
                         const std::vector<SparseIntMatrix>& values) {
  if (values.empty()) {
    throw std::invalid_argument("no matrices to substitute");
  }
  const int dim = values.front().dimension();
  SparseIntMatrix result(dim);
  for (const auto& [word, coeff] : polynomial.terms()) {
    SparseIntMatrix term(dim);
    bool first = true;
    for (int v : word) {
      if (v < 1 || v > static_cast<int>(values.size())) {
        throw std::invalid_argument("variable x" + std::to_string(v) +
                                    " has no substitution");
      }
      const SparseIntMatrix& factor = values[static_cast<size_t>(v) - 1];
      term = first ? factor : term * factor;
      first = false;
    }
    if (first) {
      throw std::invalid_argument("cannot substitute into a constant term");
    }
    result = result + term.scaled(coeff);
  }
  return result;
}

} // namespace lnc
