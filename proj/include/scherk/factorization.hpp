#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "elements.hpp"

namespace scherk {

/// target = factors[0] * factors[1] * ... * factors[k-1]; the last factor
/// acts first.
struct Factorization {
  Isometry target;
  std::vector<Reflection> factors;

  std::size_t length() const { return factors.size(); }

  /// Product of factors[first, last).
  Isometry product(std::size_t first, std::size_t last) const {
    auto p = Isometry::identity(target.dim());
    for (std::size_t i = first; i < last; ++i) p = p * factors[i];
    return p;
  }
  Isometry product() const { return product(0, factors.size()); }
};

namespace detail {

/// A point of `outer` that is not in `inner` (inner ⊊ outer).
inline Point point_outside(const AffineSubspaceE &outer,
                           const AffineSubspaceE &inner) {
  if (!inner.contains(outer.point())) return outer.point();
  for (const auto &d : outer.direction().basis_vectors())
    if (!inner.direction().contains(d)) return outer.point() + d;
  throw InvalidChain("subspace is not strictly larger");
}

/// First point of {0,1}ⁿ, in lexicographic order, outside B. These points
/// affinely span E, so one exists whenever B ≠ E.
inline Point first_lattice_point_outside(const AffineSubspaceE &b) {
  const std::size_t n = b.ambient_dim();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> (n - 1 - i) & 1) v[i] = 1;
    Point x(std::move(v));
    if (!b.contains(x)) return x;
  }
  throw InvalidArgument("no lattice point outside the whole space");
}

} // namespace detail

/// Chain Fix(w) = B_k ⊂ ... ⊂ B_0 = E built by adjoining, at each step, the
/// first {0,1}-lattice point not already in the hull. Indexed by
/// codimension: result[i] = B_i.
inline std::vector<AffineSubspaceE> default_elliptic_chain(const Isometry &w) {
  auto fix = min_set(w);
  std::vector<AffineSubspaceE> up{fix};
  while (up.back().codim() > 0) {
    auto x = detail::first_lattice_point_outside(up.back());
    up.push_back(affine_join(up.back(), AffineSubspaceE::singleton(x)));
  }
  std::reverse(up.begin(), up.end());
  return up;
}

/// Minimal factorization of an elliptic isometry along the chain
/// chain[i] = B_i (codimension i, nested, chain[k] = Fix(w)). At each step
/// the unique reflection r with Fix(r·w_i) = B_{i-1} is split off.
inline Factorization
factor_elliptic(const Isometry &w,
                std::optional<std::vector<AffineSubspaceE>> chain = {}) {
  auto c = classify(w);
  if (!c.elliptic()) throw InvalidArgument("factor_elliptic: w is hyperbolic");
  const std::size_t k = c.length;
  auto bs = chain ? std::move(*chain) : default_elliptic_chain(w);
  if (bs.size() != k + 1) throw InvalidChain("chain must have length ℓ(w)+1");
  for (std::size_t i = 0; i <= k; ++i) {
    if (bs[i].ambient_dim() != w.dim() || bs[i].codim() != i)
      throw InvalidChain("chain entry " + std::to_string(i) +
                         " has the wrong codimension");
    if (i > 0 && !bs[i].is_subset_of(bs[i - 1]))
      throw InvalidChain("chain is not nested");
  }
  if (bs[k] != c.min_set) throw InvalidChain("chain does not end at Fix(w)");

  Factorization f{w, {}};
  auto current = w;
  for (std::size_t i = k; i >= 1; --i) {
    auto x = detail::point_outside(bs[i - 1], bs[i]);
    auto r = reflection_bisecting(x, current(x));
    current = r * current;
    f.factors.push_back(std::move(r));
  }
  return f;
}

/// w = t_μ u: t_μ as two reflections with mirrors normal to μ through the
/// canonical point p of Min(w) and through p + μ/2, then u by
/// factor_elliptic.
inline Factorization factor_hyperbolic(const Isometry &w) {
  auto c = classify(w);
  if (!c.hyperbolic())
    throw InvalidArgument("factor_hyperbolic: w is elliptic");
  const auto &mu = c.move_set.mu();
  const auto &p = c.min_set.point();
  auto rest = factor_elliptic(Isometry::translation(-mu) * w);
  Factorization f{w, {}};
  f.factors.emplace_back(mu, p + Scalar(1, 2) * mu);
  f.factors.emplace_back(mu, p);
  for (auto &r : rest.factors) f.factors.push_back(std::move(r));
  return f;
}

inline Factorization factor(const Isometry &w) {
  return is_elliptic(w) ? factor_elliptic(w) : factor_hyperbolic(w);
}

namespace detail {

/// The reflection r with inv(r·w) = `next`, where `next` is covered by
/// inv(w) = `cur`.
inline Reflection covering_step(const Isometry &w, const PosetElement &cur,
                                const PosetElement &next) {
  if (cur.is_elliptic() && next.is_elliptic()) {
    const auto &b = cur.fix();
    const auto &c = next.fix();
    if (!b.is_subset_of(c) || c.dim() != b.dim() + 1)
      throw InvalidChain("e^B -> e^C needs B ⊂ C of codimension 1");
    auto x = point_outside(c, b);
    return reflection_bisecting(x, w(x));
  }
  if (cur.is_hyperbolic() && next.is_elliptic()) {
    const auto &b = next.fix();
    if (b.direction() != orthogonal_complement(cur.move().linear_span()))
      throw InvalidChain("h^M -> e^B needs Dir(B) = Span(M)⊥");
    return reflection_bisecting(b.point(), w(b.point()));
  }
  if (cur.is_hyperbolic() && next.is_hyperbolic()) {
    const auto &m = cur.move();
    const auto &m2 = next.move();
    if (!m2.is_subset_of(m) || m2.dim() + 1 != m.dim())
      throw InvalidChain("h^M -> h^M' needs M' ⊂ M of codimension 1");
    // B = points moved into M': N·((A − I)x + b) = N·μ' for N spanning
    // Dir(M')⊥. The mirror is w(B): then r fixes w(x) for x ∈ B, so
    // rw(x) − x = w(x) − x ∈ M'.
    const std::size_t n = w.dim();
    auto normals = orthogonal_complement(m2.direction()).basis_vectors();
    Matrix nm = Matrix::from_rows(normals, n);
    Matrix lhs = nm * (w.linear() - Matrix::identity(n));
    auto rhs = nm * (m2.mu() - w.translation_part());
    auto sol = solve_affine(lhs, rhs);
    if (!sol || sol->kernel.codim() != 1)
      throw InvalidChain("points moved into M' do not form a hyperplane");
    std::vector<Vector> image;
    for (const auto &d : sol->kernel.basis_vectors()) image.push_back(w.linear_image(d));
    return Reflection(AffineSubspaceE(w(Point(sol->particular)), span(image, n)));
  }
  throw InvalidChain("chain steps down from an elliptic to a hyperbolic");
}

} // namespace detail

/// Factorization w = r_1 ⋯ r_k whose suffixes r_{i+1} ⋯ r_k have
/// invariants chain[i]. The chain is maximal in P(w) and listed downward:
/// chain.front() = inv(w), chain.back() = e^E.
inline Factorization chain_to_factorization(std::span<const PosetElement> chain,
                                            const Isometry &w) {
  const std::size_t n = w.dim();
  if (chain.empty()) throw InvalidChain("empty chain");
  if (chain.front() != inv_map(w))
    throw InvalidChain("chain does not start at inv(w)");
  if (chain.back() != PosetElement::bottom(n))
    throw InvalidChain("chain does not end at e^E");
  if (chain.size() != reflection_length(w) + 1)
    throw InvalidChain("chain is not maximal");
  Factorization f{w, {}};
  auto current = w;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto r = detail::covering_step(current, chain[i], chain[i + 1]);
    current = r * current;
    if (inv_map(current) != chain[i + 1])
      throw InvalidChain("chain step " + std::to_string(i) + " is not a cover");
    f.factors.push_back(std::move(r));
  }
  return f;
}

/// inv of every suffix, longest first: result[i] = inv(r_{i+1} ⋯ r_k).
/// Throws InvalidChain when f is not a minimal factorization of its target.
inline std::vector<PosetElement> factorization_to_chain(const Factorization &f) {
  const std::size_t k = f.length();
  if (f.product() != f.target)
    throw InvalidChain("factors do not multiply to the target");
  std::vector<PosetElement> chain(k + 1);
  auto suffix = Isometry::identity(f.target.dim());
  for (std::size_t i = k + 1; i-- > 0;) {
    if (i < k) suffix = f.factors[i] * suffix;
    auto c = classify(suffix);
    if (c.length != k - i)
      throw InvalidChain("factorization is not minimal (suffix rank " +
                         std::to_string(c.length) + " at position " +
                         std::to_string(i) + ")");
    chain[i] = inv_map(c);
  }
  return chain;
}

/// Moves the reflections at `positions` (0-based) to the front (or back),
/// keeping their relative order. Every swap is r' r = r (r r' r), so the
/// product and the length are unchanged.
inline Factorization rewrite_shift(const Factorization &f,
                                   std::vector<std::size_t> positions,
                                   bool to_front) {
  const std::size_t k = f.length();
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) !=
      positions.end())
    throw InvalidArgument("rewrite_shift: repeated position");
  if (!positions.empty() && positions.back() >= k)
    throw InvalidArgument("rewrite_shift: position out of range");
  auto out = f;
  auto &fs = out.factors;
  if (to_front) {
    std::size_t slot = 0;
    for (auto p : positions) {
      for (std::size_t j = p; j > slot; --j) {
        auto moved = fs[j];
        fs[j] = conjugate(moved, fs[j - 1]);
        fs[j - 1] = std::move(moved);
      }
      ++slot;
    }
  } else {
    std::size_t slot = k;
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
      --slot;
      for (std::size_t j = *it; j < slot; ++j) {
        auto moved = fs[j];
        fs[j] = conjugate(moved, fs[j + 1]);
        fs[j + 1] = std::move(moved);
      }
    }
  }
  return out;
}

/// Product equals the target, length equals ℓ(target), and for an
/// elliptic target the roots are linearly independent.
inline bool verify_minimal(const Factorization &f) {
  if (f.product() != f.target) return false;
  auto c = classify(f.target);
  if (f.length() != c.length) return false;
  if (c.elliptic()) {
    std::vector<Vector> roots;
    for (const auto &r : f.factors) roots.push_back(r.root());
    if (span(roots, f.target.dim()).dim() != f.length()) return false;
  }
  return true;
}

} // namespace scherk
