#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linalg.hpp"

namespace scherk {

/// Linear subspace of Qⁿ stored by its reduced row echelon basis.
///
/// The RREF (unit pivots, zero rows dropped) is unique for a subspace, so
/// equality of subspaces is equality of the stored matrices.
class LinearSubspace {
public:
  LinearSubspace() = default;

  static LinearSubspace zero(std::size_t n) { return LinearSubspace(n); }
  static LinearSubspace full(std::size_t n) {
    return LinearSubspace(Matrix::identity(n), n, all_columns(n));
  }

  /// Span of the rows of `m`.
  static LinearSubspace row_space(Matrix m) {
    auto pivots = rref_in_place(m);
    Matrix basis(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = m(i, j);
    return LinearSubspace(std::move(basis), m.cols(), std::move(pivots));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t codim() const { return ambient_ - dim(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix &basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  std::span<const std::size_t> pivots() const { return pivots_; }

  /// Remainder of `v` after eliminating the pivot coordinates; zero iff
  /// `v` lies in the subspace.
  Vector reduce(Vector v) const {
    require_same_dim(v.size(), ambient_, "subspace reduce");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Scalar f = v[pivots_[r]];
      if (scherk::is_zero(f)) continue;
      for (std::size_t j = pivots_[r]; j < ambient_; ++j)
        v[j] -= f * basis_(r, j);
    }
    return v;
  }

  bool contains(const Vector &v) const { return reduce(v).is_zero(); }

  bool is_subspace_of(const LinearSubspace &other) const {
    require_same_dim(ambient_, other.ambient_, "subspace inclusion");
    if (dim() > other.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!other.contains(basis_.row(i))) return false;
    return true;
  }

  friend bool operator==(const LinearSubspace &a, const LinearSubspace &b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  explicit LinearSubspace(std::size_t n) : ambient_(n), basis_(0, n) {}
  LinearSubspace(Matrix basis, std::size_t n, std::vector<std::size_t> piv)
      : ambient_(n), basis_(std::move(basis)), pivots_(std::move(piv)) {}

  static std::vector<std::size_t> all_columns(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// span{rows of the RREF basis}, or "0".
inline std::ostream &operator<<(std::ostream &os, const LinearSubspace &u) {
  if (u.is_zero()) return os << '0';
  os << "span{";
  for (std::size_t i = 0; i < u.dim(); ++i) os << (i ? "," : "") << u.basis_vector(i);
  return os << '}';
}

/// Smallest subspace of Qⁿ containing every vector in the list.
inline LinearSubspace span(std::span<const Vector> vectors, std::size_t n) {
  return LinearSubspace::row_space(Matrix::from_rows(vectors, n));
}
inline LinearSubspace span(std::initializer_list<Vector> vectors,
                           std::size_t n) {
  return span(std::span<const Vector>(vectors.begin(), vectors.size()), n);
}

inline LinearSubspace orthogonal_complement(const LinearSubspace &u) {
  auto kernel = null_space_basis(u.basis());
  return span(kernel, u.ambient_dim());
}

inline LinearSubspace subspace_sum(const LinearSubspace &a,
                                   const LinearSubspace &b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace_sum");
  auto rows = a.basis_vectors();
  for (auto &v : b.basis_vectors()) rows.push_back(std::move(v));
  return span(rows, a.ambient_dim());
}

/// U₁ ∩ U₂ as the common null space of both complements' bases.
inline LinearSubspace intersect(const LinearSubspace &a,
                                const LinearSubspace &b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "intersect");
  auto constraints = orthogonal_complement(a).basis_vectors();
  for (auto &v : orthogonal_complement(b).basis_vectors())
    constraints.push_back(std::move(v));
  auto kernel =
      null_space_basis(Matrix::from_rows(constraints, a.ambient_dim()));
  return span(kernel, a.ambient_dim());
}

/// Orthogonal projection of `v` onto `u`, from the normal equations
/// (B Bᵀ) c = B v over the stored basis B.
inline Vector project(const Vector &v, const LinearSubspace &u) {
  require_same_dim(v.size(), u.ambient_dim(), "project");
  const std::size_t k = u.dim(), n = u.ambient_dim();
  if (k == 0) return Vector(n);
  if (k == n) return v;
  const Matrix &b = u.basis();
  Matrix aug(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < n; ++t) aug(i, j) += b(i, t) * b(j, t);
    for (std::size_t t = 0; t < n; ++t) aug(i, k) += b(i, t) * v[t];
  }
  rref_in_place(aug); // Gram matrix is nonsingular
  Vector out(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < n; ++t) out[t] += aug(i, k) * b(i, t);
  return out;
}

/// Solution set particular + kernel of A·x = b.
struct AffineSolution {
  Vector particular;
  LinearSubspace kernel;
};

/// Solves A·x = b exactly; std::nullopt when the system is inconsistent.
/// The particular solution sets every free variable to zero.
inline std::optional<AffineSolution> solve_affine(const Matrix &a,
                                                  const Vector &b) {
  require_same_dim(a.rows(), b.size(), "solve_affine");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return AffineSolution{std::move(x), span(null_space_basis(a), n)};
}

} // namespace scherk
