#include "graphcheb/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace gcheb {

Index oracle_cap() {
  static const Index cap = [] {
    if (const char* env = std::getenv("GRAPHCHEB_ORACLE_CAP")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<Index>(v);
    }
    return static_cast<Index>(2000);
  }();
  return cap;
}

SparseMatrix SparseMatrix::from_triplets(Index n, std::vector<Triplet> entries) {
  if (n < 0) throw std::invalid_argument("negative matrix dimension");
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
      throw std::invalid_argument("triplet index out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m;
  m.n_ = n;
  m.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  m.cols_.reserve(entries.size());
  m.values_.reserve(entries.size());
  std::size_t i = 0;
  for (Index row = 0; row < n; ++row) {
    while (i < entries.size() && entries[i].row == row) {
      // Coalesce duplicates.
      double v = entries[i].value;
      const int col = entries[i].col;
      ++i;
      while (i < entries.size() && entries[i].row == row && entries[i].col == col) {
        v += entries[i].value;
        ++i;
      }
      m.cols_.push_back(col);
      m.values_.push_back(v);
    }
    m.row_ptr_[static_cast<std::size_t>(row) + 1] = static_cast<int>(m.cols_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& dense, double drop_tol) {
  if (dense.rows() != dense.cols()) {
    throw std::invalid_argument("matrix not square");
  }
  std::vector<Triplet> entries;
  for (Index r = 0; r < dense.rows(); ++r) {
    for (Index c = 0; c < dense.cols(); ++c) {
      if (std::abs(dense(r, c)) > drop_tol) {
        entries.push_back({static_cast<int>(r), static_cast<int>(c), dense(r, c)});
      }
    }
  }
  return from_triplets(dense.rows(), std::move(entries));
}

SparseMatrix SparseMatrix::identity(Index n) {
  std::vector<Triplet> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    entries.push_back({static_cast<int>(i), static_cast<int>(i), 1.0});
  }
  return from_triplets(n, std::move(entries));
}

double SparseMatrix::diagonal_entry(Index row) const {
  const auto cols = row_cols(row);
  const auto vals = row_values(row);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == row) return vals[i];
  }
  return 0.0;
}

Vector SparseMatrix::diagonal() const {
  Vector d(n_);
  for (Index i = 0; i < n_; ++i) d[i] = diagonal_entry(i);
  return d;
}

Vector SparseMatrix::row_sums() const {
  Vector s = Vector::Zero(n_);
  for (Index r = 0; r < n_; ++r) {
    for (double v : row_values(r)) s[r] += v;
  }
  return s;
}

double SparseMatrix::row_dot(Index row, const Vector& x) const {
  const auto cols = row_cols(row);
  const auto vals = row_values(row);
  double acc = 0.0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    acc += vals[i] * x[cols[i]];
  }
  return acc;
}

void SparseMatrix::multiply(const Vector& x, Vector& y) const {
  if (x.size() != n_) throw std::invalid_argument("size mismatch in multiply");
  y.resize(n_);
  for (Index r = 0; r < n_; ++r) y[r] = row_dot(r, x);
}

Vector SparseMatrix::multiply(const Vector& x) const {
  Vector y;
  multiply(x, y);
  return y;
}

double SparseMatrix::symmetry_error() const {
  double max_abs = 0.0;
  for (double v : values_) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0.0) return 0.0;

  double worst = 0.0;
  for (Index r = 0; r < n_; ++r) {
    const auto cols = row_cols(r);
    const auto vals = row_values(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const Index c = cols[i];
      // Binary search the transposed entry.
      const auto tc = row_cols(c);
      const auto tv = row_values(c);
      const auto it = std::lower_bound(tc.begin(), tc.end(), static_cast<int>(r));
      const double mirrored =
          (it != tc.end() && *it == r) ? tv[static_cast<std::size_t>(it - tc.begin())] : 0.0;
      worst = std::max(worst, std::abs(vals[i] - mirrored));
    }
  }
  return worst / max_abs;
}

double SparseMatrix::gershgorin_bound() const {
  double bound = 0.0;
  for (Index r = 0; r < n_; ++r) {
    double s = 0.0;
    for (double v : row_values(r)) s += std::abs(v);
    bound = std::max(bound, s);
  }
  return bound;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d = Matrix::Zero(n_, n_);
  for (Index r = 0; r < n_; ++r) {
    const auto cols = row_cols(r);
    const auto vals = row_values(r);
    for (std::size_t i = 0; i < cols.size(); ++i) d(r, cols[i]) = vals[i];
  }
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> entries;
  entries.reserve(values_.size());
  for (Index r = 0; r < n_; ++r) {
    const auto cols = row_cols(r);
    const auto vals = row_values(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      entries.push_back({cols[i], static_cast<int>(r), vals[i]});
    }
  }
  return from_triplets(n_, std::move(entries));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("size mismatch in sparse product");
  std::vector<Triplet> entries;
  std::map<int, double> row_acc;
  for (Index r = 0; r < n_; ++r) {
    row_acc.clear();
    const auto cols = row_cols(r);
    const auto vals = row_values(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const Index mid = cols[i];
      const auto ocols = other.row_cols(mid);
      const auto ovals = other.row_values(mid);
      for (std::size_t j = 0; j < ocols.size(); ++j) {
        row_acc[ocols[j]] += vals[i] * ovals[j];
      }
    }
    for (const auto& [c, v] : row_acc) {
      entries.push_back({static_cast<int>(r), c, v});
    }
  }
  return from_triplets(n_, std::move(entries));
}

SparseMatrix SparseMatrix::scaled_plus_identity(double a, double b) const {
  std::vector<Triplet> entries;
  entries.reserve(values_.size() + static_cast<std::size_t>(n_));
  for (Index r = 0; r < n_; ++r) {
    const auto cols = row_cols(r);
    const auto vals = row_values(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      entries.push_back({static_cast<int>(r), cols[i], a * vals[i]});
    }
    entries.push_back({static_cast<int>(r), static_cast<int>(r), b});
  }
  return from_triplets(n_, std::move(entries));
}

}  // namespace gcheb
