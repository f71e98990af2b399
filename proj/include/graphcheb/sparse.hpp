#pragma once

#include <span>
#include <vector>

#include "graphcheb/types.hpp"

namespace gcheb {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Square sparse matrix in CSR layout with column indices sorted ascending
// within each row. The recurrence kernels rely on that ordering: summing a
// row in ascending-column order is the accumulation contract shared with the
// per-node computations in the network simulator, which is what makes the
// distributed and centralized results bit-identical.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  static SparseMatrix from_triplets(Index n, std::vector<Triplet> entries);
  static SparseMatrix from_dense(const Matrix& dense, double drop_tol = 0.0);
  static SparseMatrix identity(Index n);

  Index size() const { return n_; }
  Index nonzeros() const { return static_cast<Index>(values_.size()); }

  std::span<const int> row_cols(Index row) const {
    return {cols_.data() + row_ptr_[row],
            static_cast<std::size_t>(row_ptr_[row + 1] - row_ptr_[row])};
  }
  std::span<const double> row_values(Index row) const {
    return {values_.data() + row_ptr_[row],
            static_cast<std::size_t>(row_ptr_[row + 1] - row_ptr_[row])};
  }

  double diagonal_entry(Index row) const;
  Vector diagonal() const;
  Vector row_sums() const;

  // y = A x, rows accumulated in ascending-column order.
  void multiply(const Vector& x, Vector& y) const;
  Vector multiply(const Vector& x) const;

  // Row dot product in ascending-column order.
  double row_dot(Index row, const Vector& x) const;

  // max_{i,j} |a_ij - a_ji| / max_ij |a_ij| (0 for the zero matrix).
  double symmetry_error() const;
  bool is_symmetric(double rel_tol = 1e-12) const {
    return symmetry_error() <= rel_tol;
  }

  // Gershgorin bound on the spectral radius: max_i sum_j |a_ij|.
  double gershgorin_bound() const;

  Matrix to_dense() const;
  SparseMatrix transpose() const;

  // this * other, result rows sorted. Used for small Laplacian powers.
  SparseMatrix multiply(const SparseMatrix& other) const;

  // a*this + b*I.
  SparseMatrix scaled_plus_identity(double a, double b) const;

 private:
  Index n_ = 0;
  std::vector<int> row_ptr_ = {0};
  std::vector<int> cols_;
  std::vector<double> values_;
};

}  // namespace gcheb
