#pragma once

#include <optional>
#include <ostream>

#include "affine.hpp"

namespace scherk {

/// x ↦ A·x + b with AᵀA = I, in coordinates relative to the global
/// basepoint. Composition follows function notation: (f * g)(x) = f(g(x)),
/// so the product rw applies w first.
class Isometry {
public:
  Isometry() = default;
  /// Throws InvalidIsometry unless AᵀA = I exactly.
  Isometry(Matrix linear, Vector translation)
      : a_(std::move(linear)), b_(std::move(translation)) {
    if (a_.rows() != a_.cols() || a_.rows() != b_.size())
      throw InvalidIsometry("linear part must be n×n with an n-vector shift");
    if (!(a_.transpose() * a_ == Matrix::identity(a_.rows())))
      throw InvalidIsometry("linear part is not orthogonal");
  }

  static Isometry identity(std::size_t n) {
    return Isometry(Matrix::identity(n), Vector(n), Trusted{});
  }
  static Isometry translation(const Vector &lambda) {
    return Isometry(Matrix::identity(lambda.size()), lambda, Trusted{});
  }

  std::size_t dim() const { return b_.size(); }
  const Matrix &linear() const { return a_; }
  const Vector &translation_part() const { return b_; }

  Point operator()(const Point &x) const {
    return Point(a_ * x.from_origin() + b_);
  }
  /// Image of a direction vector under the linear part.
  Vector linear_image(const Vector &v) const { return a_ * v; }
  /// Motion vector w(x) − x.
  Vector motion(const Point &x) const { return (*this)(x) - x; }

  Isometry inverse() const {
    Matrix at = a_.transpose();
    Vector nb = -(at * b_);
    return Isometry(std::move(at), std::move(nb), Trusted{});
  }
  bool is_identity() const {
    return b_.is_zero() && a_ == Matrix::identity(dim());
  }

  friend Isometry operator*(const Isometry &f, const Isometry &g) {
    require_same_dim(f.dim(), g.dim(), "compose");
    return Isometry(f.a_ * g.a_, f.a_ * g.b_ + f.b_, Trusted{});
  }
  friend bool operator==(const Isometry &, const Isometry &) = default;

  /// Construction from parts already known to be orthogonal.
  struct Trusted {};
  Isometry(Matrix linear, Vector translation, Trusted)
      : a_(std::move(linear)), b_(std::move(translation)) {}

private:
  Matrix a_;
  Vector b_;
};

inline Isometry compose(const Isometry &f, const Isometry &g) { return f * g; }

/// Reflection across an affine hyperplane H of E. The root is kept as a
/// primitive integer normal of H (first nonzero entry positive), so two
/// reflections are equal iff their mirrors are.
class Reflection {
public:
  Reflection() = default;
  explicit Reflection(AffineSubspaceE mirror) : mirror_(std::move(mirror)) {
    if (mirror_.codim() != 1)
      throw InvalidArgument("reflection mirror must be a hyperplane");
    root_ = primitive_direction(
        orthogonal_complement(mirror_.direction()).basis_vector(0));
  }
  /// Mirror through `point` orthogonal to `root`.
  Reflection(const Vector &root, const Point &point) {
    require_same_dim(root.size(), point.size(), "reflection");
    if (root.is_zero()) throw InvalidArgument("reflection root is zero");
    root_ = primitive_direction(root);
    mirror_ = AffineSubspaceE(
        point, orthogonal_complement(span({root_}, root_.size())));
  }

  const AffineSubspaceE &mirror() const { return mirror_; }
  const Vector &root() const { return root_; }
  std::size_t dim() const { return root_.size(); }

  /// x ↦ x − 2(⟨x − p₀, α⟩ / ⟨α, α⟩) α.
  Isometry isometry() const {
    const std::size_t n = dim();
    const Scalar aa = dot(root_, root_);
    Matrix a = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) -= 2 * root_[i] * root_[j] / aa;
    Scalar c = 2 * dot(mirror_.point().from_origin(), root_) / aa;
    return Isometry(std::move(a), c * root_, Isometry::Trusted{});
  }

  Point operator()(const Point &x) const {
    Scalar c = 2 * dot(x - mirror_.point(), root_) / dot(root_, root_);
    return x - c * root_;
  }

  friend bool operator==(const Reflection &a, const Reflection &b) {
    return a.mirror_ == b.mirror_;
  }

private:
  AffineSubspaceE mirror_;
  Vector root_;
};

inline Reflection make_reflection(const AffineSubspaceE &h) {
  return Reflection(h);
}
inline Isometry translation(const Vector &lambda) {
  return Isometry::translation(lambda);
}

/// The reflection swapping x and y: its mirror is the perpendicular
/// bisector of the segment xy.
inline Reflection reflection_bisecting(const Point &x, const Point &y) {
  require_same_dim(x.size(), y.size(), "reflection_bisecting");
  if (x == y) throw InvalidArgument("reflection_bisecting: x == y");
  return Reflection(y - x, midpoint(x, y));
}

/// r s r, the reflection across r(mirror of s).
inline Reflection conjugate(const Reflection &r, const Reflection &s) {
  auto w = r.isometry();
  return Reflection(w.linear_image(s.root()), r(s.mirror().point()));
}

inline Isometry operator*(const Reflection &r, const Isometry &w) {
  return r.isometry() * w;
}
inline Isometry operator*(const Isometry &w, const Reflection &r) {
  return w * r.isometry();
}

enum class IsometryKind { Elliptic, Hyperbolic };

inline const char *to_string(IsometryKind k) {
  return k == IsometryKind::Elliptic ? "elliptic" : "hyperbolic";
}

/// Mov(w) = {w(x) − x} = im(A − I) + b, in standard form.
inline AffineSubspaceV move_set(const Isometry &w) {
  const std::size_t n = w.dim();
  Matrix a_minus = w.linear() - Matrix::identity(n);
  return standard_form(LinearSubspace::row_space(a_minus.transpose()),
                       w.translation_part());
}

namespace detail {
inline AffineSubspaceE min_set_from(const Isometry &w,
                                    const AffineSubspaceV &mov) {
  Matrix a_minus = w.linear() - Matrix::identity(w.dim());
  auto sol = solve_affine(a_minus, mov.mu() - w.translation_part());
  // μ ∈ Mov(w), so the system is consistent.
  return {Point(sol->particular), sol->kernel};
}
} // namespace detail

/// Points moved by μ, i.e. the solutions of (A − I)x = μ − b.
inline AffineSubspaceE min_set(const Isometry &w) {
  return detail::min_set_from(w, move_set(w));
}

/// Basic invariants together with type and reflection length.
struct IsometryClass {
  IsometryKind kind;
  AffineSubspaceV move_set;
  AffineSubspaceE min_set;
  std::size_t length;

  bool elliptic() const { return kind == IsometryKind::Elliptic; }
  bool hyperbolic() const { return kind == IsometryKind::Hyperbolic; }
};

/// dim Mov(w) when elliptic, dim Mov(w) + 2 when hyperbolic.
inline std::size_t scherk_length(const AffineSubspaceV &mov) {
  return mov.dim() + (mov.is_linear() ? 0 : 2);
}

inline IsometryClass classify(const Isometry &w) {
  auto mov = move_set(w);
  auto min = detail::min_set_from(w, mov);
  auto kind = mov.is_linear() ? IsometryKind::Elliptic
                              : IsometryKind::Hyperbolic;
  auto len = scherk_length(mov);
  return {kind, std::move(mov), std::move(min), len};
}

inline std::size_t reflection_length(const Isometry &w) {
  return scherk_length(move_set(w));
}
inline bool is_elliptic(const Isometry &w) { return move_set(w).is_linear(); }

struct StandardSplitting {
  Vector mu;
  Isometry elliptic_part;
};

/// w = t_μ ∘ u with u elliptic; μ = 0 and u = w for elliptic w.
inline StandardSplitting standard_splitting(const Isometry &w) {
  auto mu = move_set(w).mu();
  auto u = Isometry::translation(-mu) * w;
  return {std::move(mu), std::move(u)};
}

/// The six ways multiplying by a reflection can change an isometry.
enum class ProductCase {
  HyperbolicRootInside,   // α ∈ U: hyperbolic, length − 1
  HyperbolicToElliptic,   // α ∉ U, μ ∈ U_α: elliptic, length − 1
  HyperbolicRootOutside,  // α ∉ U, μ ∉ U_α: hyperbolic, length + 1
  EllipticRootOutside,    // α ∉ U: elliptic, length + 1
  EllipticMirrorContains, // α ∈ U, Fix(w) ⊆ H: elliptic, length − 1
  EllipticMirrorDisjoint, // α ∈ U, Fix(w) ∩ H = ∅: hyperbolic, length + 1
};

struct ProductPrediction {
  ProductCase which;
  IsometryKind kind;
  std::size_t length;
  /// true: Mov(rw) is a codimension-1 affine subspace of Mov(w).
  /// false: Mov(rw) = Span(U ∪ {α}) + μ, stored in `move_set`.
  bool shrinks;
  std::optional<AffineSubspaceV> move_set;
};

/// Type, length and move-set of rw read off from the invariants of w and
/// the root and mirror of r, without forming rw.
inline ProductPrediction predict_product(const Reflection &r,
                                         const IsometryClass &w) {
  require_same_dim(r.dim(), w.move_set.ambient_dim(), "predict_product");
  const auto &u = w.move_set.direction();
  const auto &alpha = r.root();
  const std::size_t k = w.length;
  if (u.contains(alpha)) {
    if (w.hyperbolic())
      return {ProductCase::HyperbolicRootInside, IsometryKind::Hyperbolic,
              k - 1, true, std::nullopt};
    if (w.min_set.is_subset_of(r.mirror()))
      return {ProductCase::EllipticMirrorContains, IsometryKind::Elliptic,
              k - 1, true, std::nullopt};
    return {ProductCase::EllipticMirrorDisjoint, IsometryKind::Hyperbolic,
            k + 1, true, std::nullopt};
  }
  auto u_alpha = subspace_sum(u, span({alpha}, alpha.size()));
  auto grown = standard_form(u_alpha, w.move_set.mu());
  if (w.elliptic())
    return {ProductCase::EllipticRootOutside, IsometryKind::Elliptic, k + 1,
            false, std::move(grown)};
  if (grown.is_linear())
    return {ProductCase::HyperbolicToElliptic, IsometryKind::Elliptic, k - 1,
            false, std::move(grown)};
  return {ProductCase::HyperbolicRootOutside, IsometryKind::Hyperbolic, k + 1,
          false, std::move(grown)};
}
inline ProductPrediction predict_product(const Reflection &r,
                                         const Isometry &w) {
  return predict_product(r, classify(w));
}

/// ℓ(rw) < ℓ(w).
inline bool is_reflection_below(const Reflection &r, const Isometry &w) {
  auto c = classify(w);
  return predict_product(r, c).length < c.length;
}

/// The reflection sending x to w(x); always a reflection below w.
inline Reflection motion_reflection(const Isometry &w, const Point &x) {
  auto y = w(x);
  if (y == x) throw InvalidArgument("motion_reflection: x is fixed by w");
  return reflection_bisecting(x, y);
}

/// u ∈ [1, w] ⇔ ℓ(u) + ℓ(u⁻¹w) = ℓ(w).
inline bool interval_contains(const Isometry &w, const Isometry &u) {
  return reflection_length(u) + reflection_length(u.inverse() * w) ==
         reflection_length(w);
}

/// u ≤ u' in [1, w] ⇔ ℓ(u) + ℓ(u⁻¹u') + ℓ(u'⁻¹w) = ℓ(w).
inline bool interval_leq(const Isometry &w, const Isometry &u,
                         const Isometry &u2) {
  return reflection_length(u) + reflection_length(u.inverse() * u2) +
             reflection_length(u2.inverse() * w) ==
         reflection_length(w);
}

inline std::ostream &operator<<(std::ostream &os, const Isometry &w) {
  os << "Isometry{A=[";
  for (std::size_t i = 0; i < w.dim(); ++i)
    os << (i ? "," : "") << w.linear().row(i);
  return os << "], b=" << w.translation_part() << '}';
}

} // namespace scherk
