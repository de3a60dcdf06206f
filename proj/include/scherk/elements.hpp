#pragma once

#include <ostream>
#include <variant>

#include "isometry.hpp"

namespace scherk {

enum class ElementKind { Elliptic, Hyperbolic, New };

/// Element of the global poset: e^B for an affine subspace B of E, h^M for
/// a nonlinear affine subspace M of V, or (augmented contexts only) n^U for
/// a proper nontrivial linear subspace U of the top's direction space.
class PosetElement {
public:
  PosetElement() = default;

  static PosetElement elliptic(AffineSubspaceE b) {
    return PosetElement(std::move(b));
  }
  static PosetElement hyperbolic(AffineSubspaceV m) {
    if (m.is_linear())
      throw InvalidPoset("hyperbolic elements need a nonlinear move-set");
    return PosetElement(std::move(m));
  }
  static PosetElement added(LinearSubspace u) {
    if (u.is_zero()) throw InvalidPoset("n^U needs a nontrivial U");
    return PosetElement(std::move(u));
  }
  /// e^E, the bottom of every model poset.
  static PosetElement bottom(std::size_t n) {
    return elliptic(AffineSubspaceE::whole(n));
  }

  ElementKind kind() const { return static_cast<ElementKind>(v_.index()); }
  bool is_elliptic() const { return kind() == ElementKind::Elliptic; }
  bool is_hyperbolic() const { return kind() == ElementKind::Hyperbolic; }
  bool is_new() const { return kind() == ElementKind::New; }

  const AffineSubspaceE &fix() const { return std::get<AffineSubspaceE>(v_); }
  const AffineSubspaceV &move() const { return std::get<AffineSubspaceV>(v_); }
  const LinearSubspace &subspace() const {
    return std::get<LinearSubspace>(v_);
  }

  std::size_t ambient_dim() const {
    return std::visit([](const auto &s) { return s.ambient_dim(); }, v_);
  }
  /// dim B, dim M or dim U.
  std::size_t dim() const {
    return std::visit([](const auto &s) { return s.dim(); }, v_);
  }

  friend bool operator==(const PosetElement &, const PosetElement &) = default;

private:
  explicit PosetElement(AffineSubspaceE b) : v_(std::move(b)) {}
  explicit PosetElement(AffineSubspaceV m) : v_(std::move(m)) {}
  explicit PosetElement(LinearSubspace u) : v_(std::move(u)) {}

  std::variant<AffineSubspaceE, AffineSubspaceV, LinearSubspace> v_;
};

inline char kind_letter(ElementKind k) {
  switch (k) {
  case ElementKind::Elliptic: return 'e';
  case ElementKind::Hyperbolic: return 'h';
  case ElementKind::New: return 'n';
  }
  return '?';
}

inline std::ostream &operator<<(std::ostream &os, const PosetElement &p) {
  os << kind_letter(p.kind()) << '^';
  switch (p.kind()) {
  case ElementKind::Elliptic:
    return os << '{' << p.fix().point() << "+dim" << p.dim() << '}';
  case ElementKind::Hyperbolic:
    return os << '{' << p.move().mu() << "+dim" << p.dim() << '}';
  case ElementKind::New:
    return os << "{dim" << p.dim() << '}';
  }
  return os;
}

/// e^{Fix(w)} for elliptic w, h^{Mov(w)} for hyperbolic w.
inline PosetElement inv_map(const IsometryClass &c) {
  if (c.elliptic()) return PosetElement::elliptic(c.min_set);
  return PosetElement::hyperbolic(c.move_set);
}
inline PosetElement inv_map(const Isometry &w) { return inv_map(classify(w)); }

/// Order of the global poset and its augmentation.
///   e^B ≤ e^B'  iff B ⊇ B'
///   h^M ≤ h^M'  iff M ⊆ M'
///   e^B < h^M   iff Span(M)⊥ ⊆ Dir(B)
///   n^U ≤ n^U'  iff U ⊆ U'
///   n^U < h^M   iff U ⊆ Dir(M)
///   e^B < n^U   iff Dir(B)⊥ ⊆ U
/// No hyperbolic or new element lies below an elliptic one, and no
/// hyperbolic element lies below a new one.
inline bool leq(const PosetElement &p, const PosetElement &q) {
  require_same_dim(p.ambient_dim(), q.ambient_dim(), "poset order");
  using K = ElementKind;
  switch (p.kind()) {
  case K::Elliptic:
    switch (q.kind()) {
    case K::Elliptic: return q.fix().is_subset_of(p.fix());
    case K::Hyperbolic:
      // Span(M)⊥ ⊆ Dir(B)  ⇔  Dir(B)⊥ ⊆ Span(M)
      return orthogonal_complement(p.fix().direction())
          .is_subspace_of(q.move().linear_span());
    case K::New:
      return orthogonal_complement(p.fix().direction())
          .is_subspace_of(q.subspace());
    }
    break;
  case K::Hyperbolic:
    return q.is_hyperbolic() && p.move().is_subset_of(q.move());
  case K::New:
    if (q.is_new()) return p.subspace().is_subspace_of(q.subspace());
    if (q.is_hyperbolic())
      return p.subspace().is_subspace_of(q.move().direction());
    return false;
  }
  return false;
}

inline bool less(const PosetElement &p, const PosetElement &q) {
  return p != q && leq(p, q);
}
inline bool comparable(const PosetElement &p, const PosetElement &q) {
  return leq(p, q) || leq(q, p);
}

/// codim B for e^B, dim M + 2 for h^M, dim U + 1 for n^U.
inline std::size_t rank(const PosetElement &p) {
  switch (p.kind()) {
  case ElementKind::Elliptic: return p.fix().codim();
  case ElementKind::Hyperbolic: return p.dim() + 2;
  case ElementKind::New: return p.dim() + 1;
  }
  return 0;
}

/// The model poset below `top`, optionally augmented with the n^U elements.
class PosetContext {
public:
  PosetContext() = default;
  explicit PosetContext(PosetElement top, bool augmented = false)
      : top_(std::move(top)), augmented_(augmented) {
    if (top_.is_new()) throw InvalidPoset("context top must be e^B or h^M");
    if (augmented_ && !top_.is_hyperbolic())
      throw InvalidPoset("only hyperbolic posets are augmented");
  }
  static PosetContext of(const Isometry &w, bool augmented = false) {
    return PosetContext(inv_map(w), augmented);
  }

  const PosetElement &top() const { return top_; }
  bool augmented() const { return augmented_; }
  bool hyperbolic() const { return top_.is_hyperbolic(); }
  std::size_t ambient_dim() const { return top_.ambient_dim(); }

  bool contains(const PosetElement &p) const {
    if (p.ambient_dim() != ambient_dim()) return false;
    if (p.is_new())
      return augmented_ &&
             p.subspace().is_subspace_of(top_.move().direction()) &&
             p.subspace() != top_.move().direction();
    return leq(p, top_);
  }
  void require(const PosetElement &p) const {
    if (!contains(p)) throw InvalidPoset("element is not in this model poset");
  }

private:
  PosetElement top_;
  bool augmented_ = false;
};

inline std::size_t rank(const PosetElement &p, const PosetContext &ctx) {
  ctx.require(p);
  return rank(p);
}

} // namespace scherk
