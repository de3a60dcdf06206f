#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "subspace.hpp"

namespace scherk {

/// Point of E. Coordinates are taken relative to one fixed basepoint, but
/// the arithmetic is that of an affine space: point − point is a vector,
/// point + vector is a point, and points cannot be added.
class Point {
public:
  Point() = default;
  explicit Point(Vector from_origin) : v_(std::move(from_origin)) {}
  Point(std::initializer_list<Scalar> coords) : v_(coords) {}

  static Point origin(std::size_t n) { return Point(Vector(n)); }

  std::size_t size() const { return v_.size(); }
  const Scalar &operator[](std::size_t i) const { return v_[i]; }
  /// Displacement from the global basepoint.
  const Vector &from_origin() const { return v_; }

  friend Vector operator-(const Point &a, const Point &b) {
    return a.v_ - b.v_;
  }
  friend Point operator+(const Point &p, const Vector &v) {
    return Point(p.v_ + v);
  }
  friend Point operator-(const Point &p, const Vector &v) {
    return Point(p.v_ - v);
  }
  friend bool operator==(const Point &, const Point &) = default;
  friend std::ostream &operator<<(std::ostream &os, const Point &p) {
    return os << p.v_;
  }

private:
  Vector v_;
};

inline Point midpoint(const Point &x, const Point &y) {
  return x + Scalar(1, 2) * (y - x);
}

namespace detail {

/// offset + dir with offset ∈ dir⊥ (the unique shortest representative).
inline Vector normal_offset(const Vector &shift, const LinearSubspace &dir) {
  return shift - project(shift, dir);
}

} // namespace detail

/// Affine subspace U + μ of V in standard form (μ ∈ U⊥).
class AffineSubspaceV {
public:
  AffineSubspaceV() = default;

  const LinearSubspace &direction() const { return u_; }
  const Vector &mu() const { return mu_; }
  std::size_t ambient_dim() const { return u_.ambient_dim(); }
  std::size_t dim() const { return u_.dim(); }
  bool is_linear() const { return mu_.is_zero(); }

  bool contains(const Vector &v) const { return u_.contains(v - mu_); }
  bool is_subset_of(const AffineSubspaceV &o) const {
    return u_.is_subspace_of(o.u_) && o.contains(mu_);
  }
  /// Linear span U ⊕ Qμ.
  LinearSubspace linear_span() const {
    auto rows = u_.basis_vectors();
    rows.push_back(mu_);
    return span(rows, ambient_dim());
  }

  friend bool operator==(const AffineSubspaceV &, const AffineSubspaceV &) =
      default;

  friend inline AffineSubspaceV standard_form(const LinearSubspace &u,
                                       const Vector &shift);

private:
  AffineSubspaceV(LinearSubspace u, Vector mu)
      : u_(std::move(u)), mu_(std::move(mu)) {}

  LinearSubspace u_;
  Vector mu_;
};

/// U + shift rewritten as U + μ with μ = shift − proj_U(shift).
inline AffineSubspaceV standard_form(const LinearSubspace &u,
                                     const Vector &shift) {
  require_same_dim(u.ambient_dim(), shift.size(), "standard_form");
  return AffineSubspaceV(u, detail::normal_offset(shift, u));
}

/// Nonempty affine subspace p₀ + D of E. The stored p₀ is the point whose
/// coordinate vector lies in D⊥, so equality is componentwise.
class AffineSubspaceE {
public:
  AffineSubspaceE() = default;
  AffineSubspaceE(const Point &p, LinearSubspace dir)
      : dir_(std::move(dir)) {
    require_same_dim(p.size(), dir_.ambient_dim(), "affine subspace");
    p0_ = Point(detail::normal_offset(p.from_origin(), dir_));
  }

  static AffineSubspaceE whole(std::size_t n) {
    return {Point::origin(n), LinearSubspace::full(n)};
  }
  static AffineSubspaceE singleton(const Point &p) {
    return {p, LinearSubspace::zero(p.size())};
  }

  const Point &point() const { return p0_; }
  const LinearSubspace &direction() const { return dir_; }
  std::size_t ambient_dim() const { return dir_.ambient_dim(); }
  std::size_t dim() const { return dir_.dim(); }
  std::size_t codim() const { return dir_.codim(); }

  bool contains(const Point &x) const {
    require_same_dim(x.size(), ambient_dim(), "contains_point");
    return dir_.contains(x - p0_);
  }
  bool is_subset_of(const AffineSubspaceE &o) const {
    return dir_.is_subspace_of(o.dir_) && o.contains(p0_);
  }

  friend bool operator==(const AffineSubspaceE &, const AffineSubspaceE &) =
      default;

private:
  Point p0_;
  LinearSubspace dir_;
};

inline std::ostream &operator<<(std::ostream &os, const AffineSubspaceV &m) {
  return os << m.direction() << " + " << m.mu();
}
inline std::ostream &operator<<(std::ostream &os, const AffineSubspaceE &b) {
  return os << b.point() << " + " << b.direction();
}

inline bool contains_point(const AffineSubspaceE &b, const Point &x) {
  return b.contains(x);
}

/// Smallest affine subspace of E containing the points.
inline AffineSubspaceE affine_hull(std::span<const Point> points) {
  if (points.empty()) throw InvalidArgument("affine_hull of no points");
  const std::size_t n = points.front().size();
  std::vector<Vector> diffs;
  for (const auto &p : points.subspan(1)) {
    require_same_dim(p.size(), n, "affine_hull");
    diffs.push_back(p - points.front());
  }
  return {points.front(), span(diffs, n)};
}
inline AffineSubspaceE affine_hull(std::initializer_list<Point> points) {
  return affine_hull(std::span<const Point>(points.begin(), points.size()));
}

/// B with its direction space enlarged by `extra`.
inline AffineSubspaceE extend(const AffineSubspaceE &b,
                              const LinearSubspace &extra) {
  return {b.point(), subspace_sum(b.direction(), extra)};
}

/// Smallest affine subspace containing both.
inline AffineSubspaceE affine_join(const AffineSubspaceE &a,
                                   const AffineSubspaceE &b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "affine_join");
  auto d = subspace_sum(a.direction(), b.direction());
  d = subspace_sum(d, span({b.point() - a.point()}, a.ambient_dim()));
  return {a.point(), std::move(d)};
}

namespace detail {

/// Rows N with N·x = N·p describing p + D.
inline void append_constraints(const LinearSubspace &dir, const Vector &p,
                               std::vector<Vector> &rows,
                               std::vector<Scalar> &rhs) {
  for (auto &nrm : orthogonal_complement(dir).basis_vectors()) {
    rhs.push_back(dot(nrm, p));
    rows.push_back(std::move(nrm));
  }
}

inline std::optional<AffineSolution>
intersect_flats(const LinearSubspace &d1, const Vector &p1,
                const LinearSubspace &d2, const Vector &p2) {
  require_same_dim(d1.ambient_dim(), d2.ambient_dim(), "intersect_affine");
  std::vector<Vector> rows;
  std::vector<Scalar> rhs;
  append_constraints(d1, p1, rows, rhs);
  append_constraints(d2, p2, rows, rhs);
  return solve_affine(Matrix::from_rows(rows, d1.ambient_dim()),
                      Vector(std::move(rhs)));
}

} // namespace detail

/// B₁ ∩ B₂, or std::nullopt when they are disjoint.
inline std::optional<AffineSubspaceE>
intersect_affine(const AffineSubspaceE &a, const AffineSubspaceE &b) {
  auto sol = detail::intersect_flats(a.direction(), a.point().from_origin(),
                                     b.direction(), b.point().from_origin());
  if (!sol) return std::nullopt;
  return AffineSubspaceE(Point(sol->particular), sol->kernel);
}

/// M₁ ∩ M₂ in V, or std::nullopt when they are disjoint.
inline std::optional<AffineSubspaceV>
intersect_affine(const AffineSubspaceV &a, const AffineSubspaceV &b) {
  auto sol =
      detail::intersect_flats(a.direction(), a.mu(), b.direction(), b.mu());
  if (!sol) return std::nullopt;
  return standard_form(sol->kernel, sol->particular);
}

/// Smallest affine subspace of V containing the given points and parallel
/// to every given direction; std::nullopt when `points` is empty.
inline std::optional<AffineSubspaceV>
affine_span(std::span<const Vector> points,
            std::span<const LinearSubspace> directions, std::size_t n) {
  if (points.empty()) return std::nullopt;
  std::vector<Vector> rows;
  for (const auto &p : points.subspan(1)) rows.push_back(p - points.front());
  for (const auto &d : directions)
    for (auto &v : d.basis_vectors()) rows.push_back(std::move(v));
  return standard_form(span(rows, n), points.front());
}

} // namespace scherk
