#ifndef EXGEO_MATRIX_HPP
#define EXGEO_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "exgeo/field.hpp"

namespace exgeo {

using FvVec = std::vector<Fv>;

/// Dense exact matrix over a runtime field. Entries are always canonical.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(const Field& f, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Mat identity(const Field& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fv& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Fv& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  FvVec row(std::size_t i) const;
  FvVec col(std::size_t j) const;

  FvVec apply(const Field& f, const FvVec& v) const;  // matrix * column
  Mat multiply(const Field& f, const Mat& other) const;
  Mat transposed() const;

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_, cols_;
  FvVec a_;
};

/// Toggle for re-verifying kernel/solve results by multiplication.
void set_linalg_self_check(bool on);
bool linalg_self_check();

/// Reduced row echelon form. Pivot rule: first nonzero entry in row-major
/// order (deterministic across runs and platforms).
Mat rref(const Field& f, Mat m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Field& f, const Mat& m);

/// Columns form a basis of the null space: m * k == 0, count == cols - rank.
Mat kernel(const Field& f, const Mat& m);

struct SolveResult {
  bool consistent = false;
  bool unique = false;
  FvVec x;  // valid when consistent
};

/// Solve m x = b; inconsistency is a return state, not an error.
SolveResult solve(const Field& f, const Mat& m, const FvVec& b);

/// A subspace of F^n held as a reduced echelon basis. The representation is
/// canonical: equal subspaces have identical rows.
class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient) : f_(f), n_(ambient) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<FvVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v against the basis; result is zero iff v is contained.
  FvVec reduce(FvVec v) const;
  bool contains(const FvVec& v) const;

  /// Insert v, keeping reduced echelon form. Returns true if dim grew.
  bool insert(FvVec v);

  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  Field f_;
  std::size_t n_;
  std::vector<FvVec> rows_;         // ordered by pivot column
  std::vector<std::size_t> pivots_;
};

FvVec scaled(const Field& f, const FvVec& v, const Fv& c);
void add_scaled_inplace(const Field& f, FvVec& v, const FvVec& w, const Fv& c);
bool is_zero_vec(const Field& f, const FvVec& v);

}  // namespace exgeo

#endif
