#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace splitalg {

// Sparse row-major matrix over rationals. Zero entries are never stored.
class ExactMatrix {
public:
  ExactMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Adds `value` to entry (r, c); drops the entry if it becomes zero.
  void add(int r, int c, const mpq_class& value);

  const std::vector<std::pair<int, mpq_class>>& row(int r) const {
    return rows_data_[static_cast<size_t>(r)];
  }

  // Appends the rows of `other` below this matrix (column counts must match).
  void stack(const ExactMatrix& other);

private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, mpq_class>>> rows_data_;
};

enum class EliminationMode {
  Rational,  // exact rational Gaussian elimination (default)
  Modular,   // rank mod two word-sized primes; falls back to rational on
             // disagreement
};

// Rank via Gaussian elimination.
int rank(const ExactMatrix& m,
         EliminationMode mode = EliminationMode::Rational);

// Nullity = cols - rank.
int kernel_dim(const ExactMatrix& m,
               EliminationMode mode = EliminationMode::Rational);

// Basis of the right kernel, as dense coefficient vectors of length cols().
std::vector<std::vector<mpq_class>> kernel_basis(const ExactMatrix& m);

// Rank of a set of dense vectors (rows of an implicit matrix).
int rank_of_vectors(const std::vector<std::vector<mpq_class>>& vectors,
                    int dim);

}  // namespace splitalg
