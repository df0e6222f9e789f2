#ifndef LNC_MATRIX_ORACLE_HPP
#define LNC_MATRIX_ORACLE_HPP

#include <map>
#include <utility>
#include <vector>

#include "lnc/nc_polynomial.hpp"
#include "lnc/permutation.hpp"

namespace lnc {

/// Exact sparse integer matrix; only nonzero entries are stored, 1-based.
class SparseIntMatrix {
public:
  explicit SparseIntMatrix(int dimension);

  /// The matrix unit e_{row,col}.
  static SparseIntMatrix unit(int dimension, int row, int col);

  SparseIntMatrix operator+(const SparseIntMatrix& other) const;
  SparseIntMatrix operator-(const SparseIntMatrix& other) const;
  SparseIntMatrix operator*(const SparseIntMatrix& other) const;
  SparseIntMatrix scaled(const Integer& factor) const;

  bool operator==(const SparseIntMatrix& other) const = default;

  int dimension() const { return dimension_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, Integer>& entries() const { return entries_; }

private:
  void set(int row, int col, Integer value);

  int dimension_;
  std::map<std::pair<int, int>, Integer> entries_;
};

/// The canonical chain e_{1,2}, e_{2,3}, ..., e_{m,m+1} in dimension m+1;
/// its plain product telescopes to e_{1,m+1}.
std::vector<SparseIntMatrix> unit_chain(int m);

/// Whether the product of the units reordered by sigma (position i takes
/// unit sigma^{-1}(i)) is nonzero. For a chain with nonzero plain product
/// this singles out the identity.
bool permuted_product_is_nonzero(const std::vector<SparseIntMatrix>& units,
                                 const Permutation& sigma);

/// The left-normed commutator of the reordered units; nonzero exactly on
/// the members of T_m.
SparseIntMatrix permuted_commutator(const std::vector<SparseIntMatrix>& units,
                                    const Permutation& sigma);

/// Evaluate a polynomial in x_1..x_m on concrete matrices.
SparseIntMatrix evaluate(const NCPolynomial& polynomial,
                         const std::vector<SparseIntMatrix>& values);

} // namespace lnc

#endif
