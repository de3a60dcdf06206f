#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "factorization.hpp"

namespace scherk {

/// Deterministic generator. std::mt19937_64 output is fixed by the
/// standard; range reduction is done here so results do not depend on the
/// standard library's distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }
  bool coin() { return next() & 1; }
  /// Independent stream derived from this one.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

private:
  std::mt19937_64 engine_;
};

inline Vector random_int_vector(Rng &rng, std::size_t n, long bound) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform(-bound, bound);
  return v;
}

inline Point random_int_point(Rng &rng, std::size_t n, long bound) {
  return Point(random_int_vector(rng, n, bound));
}

/// Root with entries in [-2, 2], mirror through a point of [-3, 3]ⁿ.
inline Reflection random_reflection(Rng &rng, std::size_t n) {
  Vector root;
  do root = random_int_vector(rng, n, 2);
  while (root.is_zero());
  return Reflection(root, random_int_point(rng, n, 3));
}

/// Product of `reflections` random reflections, followed (when requested)
/// by a random translation with entries in [-2, 2].
inline Isometry random_isometry(std::size_t n, Rng &rng,
                                std::size_t reflections,
                                bool with_translation = true) {
  auto w = Isometry::identity(n);
  for (std::size_t i = 0; i < reflections; ++i)
    w = random_reflection(rng, n) * w;
  if (with_translation)
    w = Isometry::translation(random_int_vector(rng, n, 2)) * w;
  return w;
}

inline Isometry random_isometry(std::size_t n, std::uint64_t seed,
                                std::size_t reflections,
                                bool with_translation = true) {
  Rng rng(seed);
  return random_isometry(n, rng, reflections, with_translation);
}

/// Random isometry as used by the property suites: 0..n+2 reflections and
/// a translation.
inline Isometry random_corpus_isometry(std::size_t n, Rng &rng) {
  auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) + 2));
  return random_isometry(n, rng, k, true);
}

/// Reflection to multiply onto w, drawn three ways so that every product
/// case comes up: arbitrary, below w (bisecting a motion), or with root in
/// Dir(Mov(w)) through a point of Min(w) or a translate of it.
inline Reflection random_probe_reflection(const Isometry &w,
                                          const IsometryClass &c, Rng &rng) {
  const std::size_t n = w.dim();
  switch (rng.uniform(0, 2)) {
  case 1: {
    auto x = random_int_point(rng, n, 2);
    if (w(x) != x) return motion_reflection(w, x);
    break;
  }
  case 2: {
    const auto &u = c.move_set.direction();
    if (u.is_zero()) break;
    Vector root(n);
    for (const auto &b : u.basis_vectors())
      root += Scalar(rng.uniform(-2, 2)) * b;
    if (root.is_zero()) root = u.basis_vector(0);
    auto p = c.min_set.point();
    if (rng.coin()) p = p + root;
    return Reflection(root, p);
  }
  default: break;
  }
  return random_reflection(rng, n);
}

/// One random element covered by `cur` in the global poset (cur ≠ e^E).
/// Choices are drawn from small integer boxes so that independent draws
/// collide often.
inline PosetElement random_cover_below(const PosetElement &cur, Rng &rng) {
  const std::size_t n = cur.ambient_dim();
  if (cur.is_elliptic()) {
    const auto &b = cur.fix();
    Point x;
    do x = random_int_point(rng, n, 1);
    while (b.contains(x));
    return PosetElement::elliptic(
        affine_join(b, AffineSubspaceE::singleton(x)));
  }
  const auto &m = cur.move();
  if (m.dim() == 0 || rng.coin()) {
    auto dir = orthogonal_complement(m.linear_span());
    return PosetElement::elliptic(
        AffineSubspaceE(random_int_point(rng, n, 1), dir));
  }
  // M' = ν + (Dir(M) ∩ v⊥) for a point ν of M and v not orthogonal to Dir(M).
  Vector v;
  do v = random_int_vector(rng, n, 1);
  while (orthogonal_complement(span({v}, n)).contains(
             project(v, m.direction())) &&
         project(v, m.direction()).is_zero());
  auto nu = m.mu();
  for (const auto &d : m.direction().basis_vectors())
    nu += Scalar(rng.uniform(-1, 1)) * d;
  auto dir = intersect(m.direction(), orthogonal_complement(span({v}, n)));
  return PosetElement::hyperbolic(standard_form(dir, nu));
}

/// Random maximal chain of P(w), listed from inv(w) down to e^E.
inline std::vector<PosetElement> random_maximal_chain(const Isometry &w,
                                                      Rng &rng) {
  std::vector<PosetElement> chain{inv_map(w)};
  const auto bottom = PosetElement::bottom(w.dim());
  while (chain.back() != bottom)
    chain.push_back(random_cover_below(chain.back(), rng));
  return chain;
}

inline Factorization random_minimal_factorization(const Isometry &w,
                                                  Rng &rng) {
  return chain_to_factorization(random_maximal_chain(w, rng), w);
}

/// Prefix products r_1 ⋯ r_i (0 ≤ i ≤ k) of random minimal factorizations
/// of w, `count` of them in total.
inline std::vector<Isometry> sample_interval(const Isometry &w,
                                             std::uint64_t seed,
                                             std::size_t count) {
  Rng rng(seed);
  std::vector<Isometry> out;
  while (out.size() < count) {
    auto f = random_minimal_factorization(w, rng);
    for (std::size_t i = 0; i <= f.length() && out.size() < count; ++i)
      out.push_back(f.product(0, i));
  }
  return out;
}

} // namespace scherk
