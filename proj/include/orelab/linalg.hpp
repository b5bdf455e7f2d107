#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orelab/scalar.hpp"

namespace orelab {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
struct Mat {
  std::size_t rows = 0, cols = 0;
  BaseRing ring;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(BaseRing r, std::size_t nr, std::size_t nc)
      : rows(nr), cols(nc), ring(r), a(nr * nc, zero_of(r)) {}

  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  void append_row(const Vec& v);
};

Vec zero_vec(BaseRing ring, std::size_t n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& u, const Vec& v);
Vec vec_sub(const Vec& u, const Vec& v);
Vec vec_scale(const Scalar& c, const Vec& v);

/// Incrementally maintained reduced row echelon span over a field base.
/// Rows are fully reduced, pivot-normalized to 1 and ordered by pivot
/// column, so the basis is canonical for the subspace.
class RowSpan {
 public:
  RowSpan(BaseRing ring, std::size_t dim);

  /// Reduces v against the span; inserts the remainder when nonzero.
  /// Returns true if the span grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  Vec reduce(Vec v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  bool is_full() const { return rows_.size() == dim_; }

 private:
  BaseRing ring_;
  std::size_t dim_;
  std::vector<Vec> rows_;            // ordered by pivot column
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

/// Basis of { x : A x = 0 } over a field base (unsupported_base for Zn).
std::vector<Vec> kernel_basis(const Mat& m);

/// One solution of A x = b over a field base, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Generating set of the solution module { x in Zn^d : A x = 0 } computed
/// by gcd-based row elimination (Smith/Howell style) on [A^T | I].
std::vector<Vec> zn_kernel_generators(const Mat& m);

/// Dispatches on the base: kernel basis over fields, generating set over Zn.
std::vector<Vec> solution_space(const Mat& m);

}  // namespace orelab
