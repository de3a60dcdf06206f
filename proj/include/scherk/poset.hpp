#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "elements.hpp"

namespace scherk {

/// Every e^B with Dir(B)⊥ equal to `orth`: the maximal lower bounds of two
/// hyperbolic elements with disjoint move-sets.
struct MeetFamily {
  LinearSubspace orth;
  friend bool operator==(const MeetFamily &, const MeetFamily &) = default;
};

/// Every h^{M'} with M' ⊆ top and Dir(M') equal to `dir`: the minimal upper
/// bounds of two elliptic elements with disjoint fix-sets, when they are
/// not unique.
struct JoinFamily {
  LinearSubspace dir;
  friend bool operator==(const JoinFamily &, const JoinFamily &) = default;
};

struct NoUpperBound {
  friend bool operator==(NoUpperBound, NoUpperBound) { return true; }
};

using MeetResult = std::variant<PosetElement, MeetFamily>;
using JoinResult = std::variant<PosetElement, JoinFamily, NoUpperBound>;

inline bool in_family(const MeetFamily &f, const PosetElement &p) {
  return p.is_elliptic() &&
         orthogonal_complement(p.fix().direction()) == f.orth;
}
inline bool in_family(const JoinFamily &f, const PosetElement &p,
                      const PosetContext &ctx) {
  return p.is_hyperbolic() && p.move().direction() == f.dir &&
         ctx.contains(p);
}

/// True when `x` is one of the bounds described by `r`.
inline bool describes(const MeetResult &r, const PosetElement &x) {
  if (auto *p = std::get_if<PosetElement>(&r)) return *p == x;
  return in_family(std::get<MeetFamily>(r), x);
}
inline bool describes(const JoinResult &r, const PosetElement &x,
                      const PosetContext &ctx) {
  if (auto *p = std::get_if<PosetElement>(&r)) return *p == x;
  if (auto *f = std::get_if<JoinFamily>(&r)) return in_family(*f, x, ctx);
  return false;
}

namespace detail {

struct Split {
  std::vector<AffineSubspaceE> es;
  std::vector<AffineSubspaceV> hs;
  std::vector<LinearSubspace> ns;
};

inline Split split(std::span<const PosetElement> q, const PosetContext &ctx) {
  Split s;
  for (const auto &p : q) {
    ctx.require(p);
    switch (p.kind()) {
    case ElementKind::Elliptic: s.es.push_back(p.fix()); break;
    case ElementKind::Hyperbolic: s.hs.push_back(p.move()); break;
    case ElementKind::New: s.ns.push_back(p.subspace()); break;
    }
  }
  return s;
}

inline std::optional<AffineSubspaceE>
intersect_all(std::span<const AffineSubspaceE> bs) {
  std::optional<AffineSubspaceE> acc = bs.front();
  for (const auto &b : bs.subspan(1)) {
    acc = intersect_affine(*acc, b);
    if (!acc) break;
  }
  return acc;
}

inline std::optional<AffineSubspaceV>
intersect_all(std::span<const AffineSubspaceV> ms) {
  std::optional<AffineSubspaceV> acc = ms.front();
  for (const auto &m : ms.subspan(1)) {
    acc = intersect_affine(*acc, m);
    if (!acc) break;
  }
  return acc;
}

/// Σ Dir(B)⊥ over the elliptic elements.
inline LinearSubspace orth_sum(std::span<const AffineSubspaceE> bs,
                               std::size_t n) {
  auto k = LinearSubspace::zero(n);
  for (const auto &b : bs)
    k = subspace_sum(k, orthogonal_complement(b.direction()));
  return k;
}

/// Least M' ⊆ top with M' ⊇ every M_i, Dir(M') ⊇ every U_j and
/// Span(M') ⊇ K. Any such M' contains K ∩ top when K ⊄ Dir(top), and has
/// Dir(M') ⊇ K ∩ Dir(top); those two facts pin it down. std::nullopt when
/// nothing anchors M' to a point (no M_i and K ⊆ Dir(top)).
inline std::optional<AffineSubspaceV>
least_hyperbolic_above(std::span<const AffineSubspaceV> ms,
                       const LinearSubspace &k,
                       std::span<const LinearSubspace> us,
                       const AffineSubspaceV &top) {
  const std::size_t n = top.ambient_dim();
  const auto &u = top.direction();
  std::vector<Vector> points;
  std::vector<LinearSubspace> dirs;
  for (const auto &m : ms) {
    points.push_back(m.mu());
    dirs.push_back(m.direction());
  }
  for (const auto &uj : us) dirs.push_back(uj);
  dirs.push_back(intersect(k, u));
  if (!k.is_subspace_of(u)) {
    auto anchor = intersect_affine(standard_form(k, Vector(n)), top);
    if (!anchor) throw InvalidPoset("elliptic element is not below the top");
    points.push_back(anchor->mu());
  }
  return affine_span(points, dirs, n);
}

} // namespace detail

/// Greatest lower bound of a finite nonempty set in the augmented poset
/// below h^M (or in an elliptic poset, where it is e^{hull}).
///   - some e^{B_k}: e^C, C the hull of the B_k with Dir(C) enlarged by
///     every Span(M_i)⊥ and every U_j⊥;
///   - only h^{M_i} with a common point: h^{∩ M_i};
///   - otherwise n^{U*} with U* = ∩ U_j ∩ ∩ Dir(M_i), or e^E if U* = 0.
inline PosetElement dm_meet(std::span<const PosetElement> q,
                            const PosetContext &ctx) {
  if (q.empty()) throw InvalidArgument("meet of an empty set");
  const std::size_t n = ctx.ambient_dim();
  auto s = detail::split(q, ctx);
  if (!s.es.empty()) {
    auto c = s.es.front();
    for (const auto &b : std::span(s.es).subspan(1)) c = affine_join(c, b);
    for (const auto &m : s.hs)
      c = extend(c, orthogonal_complement(m.linear_span()));
    for (const auto &u : s.ns) c = extend(c, orthogonal_complement(u));
    return PosetElement::elliptic(std::move(c));
  }
  if (s.ns.empty())
    if (auto common = detail::intersect_all(s.hs))
      return PosetElement::hyperbolic(std::move(*common));
  auto u_star = LinearSubspace::full(n);
  for (const auto &m : s.hs) u_star = intersect(u_star, m.direction());
  for (const auto &u : s.ns) u_star = intersect(u_star, u);
  if (u_star.is_zero()) return PosetElement::bottom(n);
  return PosetElement::added(std::move(u_star));
}

/// Least upper bound of a finite nonempty set in the augmented poset below
/// h^M (or in an elliptic poset, where it is e^{∩ B_k}). With K = Σ
/// Dir(B_k)⊥ and S = K + Σ U_j:
///   - only e^{B_k} meeting in a point: e^{∩ B_k};
///   - no hyperbolics and S ⊊ Dir(M): n^S;
///   - otherwise the least h^{M'} whose Span contains K, whose Dir contains
///     every U_j and which contains every M_i.
inline PosetElement dm_join(std::span<const PosetElement> q,
                            const PosetContext &ctx) {
  if (q.empty()) throw InvalidArgument("join of an empty set");
  const std::size_t n = ctx.ambient_dim();
  auto s = detail::split(q, ctx);
  if (s.hs.empty() && s.ns.empty()) {
    if (auto common = detail::intersect_all(s.es))
      return PosetElement::elliptic(std::move(*common));
    if (!ctx.hyperbolic())
      throw InvalidPoset("elliptic context with disjoint elements");
  }
  const auto &top = ctx.top().move();
  auto k = detail::orth_sum(s.es, n);
  if (s.hs.empty()) {
    auto sum = k;
    for (const auto &u : s.ns) sum = subspace_sum(sum, u);
    if (sum.is_subspace_of(top.direction())) {
      if (sum == top.direction()) return ctx.top();
      return PosetElement::added(std::move(sum));
    }
  }
  auto m = detail::least_hyperbolic_above(s.hs, k, s.ns, top);
  return PosetElement::hyperbolic(std::move(*m));
}

/// Maximal lower bound(s) of two elements of a model poset.
inline MeetResult meet(const PosetElement &p, const PosetElement &q,
                       const PosetContext &ctx) {
  std::array<PosetElement, 2> pq{p, q};
  if (ctx.augmented()) return dm_meet(pq, ctx);
  ctx.require(p);
  ctx.require(q);
  if (p.is_hyperbolic() && q.is_hyperbolic()) {
    if (auto m = intersect_affine(p.move(), q.move()))
      return PosetElement::hyperbolic(std::move(*m));
    // Lower bounds are the e^B with Dir(B)⊥ ⊆ Span(M₁) ∩ Span(M₂).
    auto d = intersect(p.move().linear_span(), q.move().linear_span());
    if (d.is_zero()) return PosetElement::bottom(ctx.ambient_dim());
    return MeetFamily{std::move(d)};
  }
  return dm_meet(pq, ctx);
}

/// Minimal upper bound(s) of two elements of a model poset.
inline JoinResult join(const PosetElement &p, const PosetElement &q,
                       const PosetContext &ctx) {
  std::array<PosetElement, 2> pq{p, q};
  if (ctx.augmented()) return dm_join(pq, ctx);
  ctx.require(p);
  ctx.require(q);
  if (p.is_elliptic() && q.is_elliptic()) {
    if (auto b = intersect_affine(p.fix(), q.fix()))
      return PosetElement::elliptic(std::move(*b));
    if (!ctx.hyperbolic()) return NoUpperBound{};
    const auto &top = ctx.top().move();
    std::array<AffineSubspaceE, 2> bs{p.fix(), q.fix()};
    auto k = detail::orth_sum(bs, ctx.ambient_dim());
    if (k == top.direction()) return ctx.top();
    if (k.is_subspace_of(top.direction())) return JoinFamily{std::move(k)};
  }
  return dm_join(pq, ctx);
}

/// Elliptic posets and augmented posets are lattices; P^M is one iff
/// dim M ≤ 1.
inline bool is_lattice(const PosetContext &ctx) {
  if (ctx.augmented() || !ctx.hyperbolic()) return true;
  return ctx.top().dim() <= 1;
}

struct Bowtie {
  PosetElement a, b; // upper pair
  PosetElement c, d; // lower pair
};

/// h^{U+μ}, h^{U+μ+w}, e^{U⊥}, e^{u+U⊥} for a proper nontrivial
/// U ⊂ Dir(M) (default: the line through the first basis vector of
/// Dir(M)), w ∈ Dir(M) ∩ U⊥ and u ∈ U nonzero.
inline Bowtie find_bowtie(const PosetContext &ctx,
                          std::optional<LinearSubspace> u = {}) {
  if (!ctx.hyperbolic() || ctx.augmented())
    throw InvalidPoset("bowties live in non-augmented hyperbolic posets");
  const auto &m = ctx.top().move();
  const std::size_t n = ctx.ambient_dim();
  if (m.dim() < 2) throw InvalidPoset("P^M has no bowtie when dim M < 2");
  auto uu = u ? *u : span({m.direction().basis_vector(0)}, n);
  if (uu.is_zero() || uu == m.direction() ||
      !uu.is_subspace_of(m.direction()))
    throw InvalidPoset("U must be a proper nontrivial subspace of Dir(M)");
  auto perp = orthogonal_complement(uu);
  auto w = intersect(m.direction(), perp).basis_vector(0);
  auto step = uu.basis_vector(0);
  return {PosetElement::hyperbolic(standard_form(uu, m.mu())),
          PosetElement::hyperbolic(standard_form(uu, m.mu() + w)),
          PosetElement::elliptic(AffineSubspaceE(Point::origin(n), perp)),
          PosetElement::elliptic(AffineSubspaceE(Point(step), perp))};
}

/// (a, b : c, d) with four distinct elements, c and d below both a and b,
/// a ∥ b, c ∥ d, a and b minimal upper bounds of {c, d} and c and d
/// maximal lower bounds of {a, b}. Minimality and maximality are decided by
/// the closed-form bound computations above rather than by search.
inline bool is_bowtie(const Bowtie &t, const PosetContext &ctx) {
  const std::array<const PosetElement *, 4> all{&t.a, &t.b, &t.c, &t.d};
  for (auto *p : all)
    if (!ctx.contains(*p)) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*all[i] == *all[j]) return false;
  for (auto *lo : {&t.c, &t.d})
    for (auto *hi : {&t.a, &t.b})
      if (!leq(*lo, *hi)) return false;
  if (comparable(t.a, t.b) || comparable(t.c, t.d)) return false;
  auto up = join(t.c, t.d, ctx);
  auto down = meet(t.a, t.b, ctx);
  return describes(up, t.a, ctx) && describes(up, t.b, ctx) &&
         describes(down, t.c) && describes(down, t.d);
}

/// P^B ≅ Lin(Dir(B)⊥): e^C ↦ Dir(C)⊥.
inline LinearSubspace elliptic_to_subspace(const PosetElement &p,
                                           const PosetContext &ctx) {
  if (ctx.hyperbolic()) throw InvalidPoset("context is not elliptic");
  ctx.require(p);
  return orthogonal_complement(p.fix().direction());
}

/// Inverse of elliptic_to_subspace: W ⊆ Dir(B)⊥ ↦ e^{B + W⊥}.
inline PosetElement subspace_to_elliptic(const LinearSubspace &w,
                                         const PosetContext &ctx) {
  if (ctx.hyperbolic()) throw InvalidPoset("context is not elliptic");
  const auto &b = ctx.top().fix();
  if (!w.is_subspace_of(orthogonal_complement(b.direction())))
    throw InvalidPoset("subspace is not inside Dir(B)⊥");
  return PosetElement::elliptic(
      AffineSubspaceE(b.point(), orthogonal_complement(w)));
}

} // namespace scherk
