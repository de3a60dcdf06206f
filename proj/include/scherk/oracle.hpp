#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "poset.hpp"

namespace scherk {

/// Explicit finite piece of a model poset: every element lies below the
/// context's top.
struct FiniteUniverse {
  std::string name;
  PosetContext ctx;
  std::vector<PosetElement> elements;
};

/// All elements of `ctx` cut out by equations x_i = c with c ∈ {0, 1}: the
/// e^B and h^M of that shape below the top, and (augmented contexts) the
/// n^U for U spanned by a proper nonempty set of coordinate axes inside
/// Dir(top). Elliptic first, then hyperbolic, then new, each in the order
/// of the ternary enumeration (free, 0, 1) on the coordinates.
inline FiniteUniverse coordinate_universe(std::string name, PosetContext ctx) {
  const std::size_t n = ctx.ambient_dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;

  struct Shape {
    Vector shift;
    LinearSubspace dir;
  };
  std::vector<Shape> shapes;
  for (std::size_t code = 0; code < total; ++code) {
    Vector shift(n);
    std::vector<Vector> free;
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0; c /= 3) {
      switch (c % 3) {
      case 0: free.push_back(Vector::unit(n, i)); break;
      case 1: break;
      case 2: shift[i] = 1; break;
      }
    }
    shapes.push_back({std::move(shift), span(free, n)});
  }

  FiniteUniverse u{std::move(name), ctx, {}};
  for (const auto &s : shapes) {
    auto p = PosetElement::elliptic(AffineSubspaceE(Point(s.shift), s.dir));
    if (ctx.contains(p)) u.elements.push_back(std::move(p));
  }
  for (const auto &s : shapes) {
    auto m = standard_form(s.dir, s.shift);
    if (m.is_linear()) continue;
    auto p = PosetElement::hyperbolic(std::move(m));
    if (ctx.contains(p)) u.elements.push_back(std::move(p));
  }
  if (ctx.augmented()) {
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      std::vector<Vector> axes;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> (n - 1 - i) & 1) axes.push_back(Vector::unit(n, i));
      auto p = PosetElement::added(span(axes, n));
      if (ctx.contains(p)) u.elements.push_back(std::move(p));
    }
  }
  return u;
}

namespace detail {

inline AffineSubspaceV coordinate_flat(std::size_t n,
                                       std::vector<std::pair<std::size_t, int>>
                                           fixed) {
  Vector shift(n);
  std::vector<Vector> free;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_fixed = false;
    for (auto [j, c] : fixed)
      if (j == i) {
        shift[i] = c;
        is_fixed = true;
      }
    if (!is_fixed) free.push_back(Vector::unit(n, i));
  }
  return standard_form(span(free, n), shift);
}

inline PosetContext hyperbolic_ctx(std::size_t n,
                                   std::vector<std::pair<std::size_t, int>> fixed,
                                   bool augmented) {
  return PosetContext(
      PosetElement::hyperbolic(coordinate_flat(n, std::move(fixed))),
      augmented);
}

inline PosetContext elliptic_ctx(std::size_t n,
                                 std::vector<std::pair<std::size_t, int>> fixed) {
  auto f = coordinate_flat(n, std::move(fixed));
  return PosetContext(PosetElement::elliptic(
      AffineSubspaceE(Point(f.mu()), f.direction())));
}

} // namespace detail

/// The dim 3 universe below h^{z=1}, which contains bowties.
inline FiniteUniverse bowtie_universe(bool augmented = false) {
  return coordinate_universe(
      augmented ? "R3 top h{z=1} augmented" : "R3 top h{z=1}",
      detail::hyperbolic_ctx(3, {{2, 1}}, augmented));
}

/// Every curated universe used by the agreement suites (all ≤ 40 elements).
inline std::vector<FiniteUniverse> curated_universes() {
  using detail::elliptic_ctx;
  using detail::hyperbolic_ctx;
  std::vector<FiniteUniverse> out;
  out.push_back(coordinate_universe("R2 top e{origin}", elliptic_ctx(2, {{0, 0}, {1, 0}})));
  out.push_back(coordinate_universe("R2 top e{x=1}", elliptic_ctx(2, {{0, 1}})));
  out.push_back(coordinate_universe("R2 top h{(1,1)}", hyperbolic_ctx(2, {{0, 1}, {1, 1}}, false)));
  out.push_back(coordinate_universe("R2 top h{x=1}", hyperbolic_ctx(2, {{0, 1}}, false)));
  out.push_back(coordinate_universe("R2 top h{x=1} augmented", hyperbolic_ctx(2, {{0, 1}}, true)));
  out.push_back(coordinate_universe("R3 top e{origin}", elliptic_ctx(3, {{0, 0}, {1, 0}, {2, 0}})));
  out.push_back(coordinate_universe("R3 top e{y=1,z=0}", elliptic_ctx(3, {{1, 1}, {2, 0}})));
  out.push_back(coordinate_universe("R3 top h{(0,1,1)}", hyperbolic_ctx(3, {{0, 0}, {1, 1}, {2, 1}}, false)));
  out.push_back(coordinate_universe("R3 top h{y=1,z=1}", hyperbolic_ctx(3, {{1, 1}, {2, 1}}, false)));
  out.push_back(coordinate_universe("R3 top h{y=1,z=1} augmented", hyperbolic_ctx(3, {{1, 1}, {2, 1}}, true)));
  out.push_back(bowtie_universe(false));
  out.push_back(bowtie_universe(true));
  return out;
}

/// Order relation of a universe, tabulated once; all definitional
/// computations below use nothing but this table and leq.
class UniverseOracle {
public:
  explicit UniverseOracle(const FiniteUniverse &u) : u_(&u) {
    const std::size_t n = u.elements.size();
    le_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        le_[i][j] = leq(u.elements[i], u.elements[j]);
  }

  const FiniteUniverse &universe() const { return *u_; }
  std::size_t size() const { return le_.size(); }
  bool le(std::size_t i, std::size_t j) const { return le_[i][j]; }
  const PosetElement &at(std::size_t i) const { return u_->elements[i]; }

  std::vector<std::size_t> lower_bounds(const std::vector<std::size_t> &q) const {
    return bounds(q, true);
  }
  std::vector<std::size_t> upper_bounds(const std::vector<std::size_t> &q) const {
    return bounds(q, false);
  }
  /// Maximal elements among the common lower bounds of q.
  std::vector<std::size_t> definitional_meet(const std::vector<std::size_t> &q) const {
    return extremal(lower_bounds(q), true);
  }
  /// Minimal elements among the common upper bounds of q.
  std::vector<std::size_t> definitional_join(const std::vector<std::size_t> &q) const {
    return extremal(upper_bounds(q), false);
  }

  /// Empty when `r` is consistent with the definitional maximal lower
  /// bounds of q, otherwise a description of the disagreement.
  std::string check_meet(const std::vector<std::size_t> &q,
                         const MeetResult &r) const {
    auto lower = lower_bounds(q);
    auto best = definitional_meet(q);
    if (auto *p = std::get_if<PosetElement>(&r)) return check_element(q, *p, lower, best, true);
    const auto &fam = std::get<MeetFamily>(r);
    for (auto x : lower)
      if (!at(x).is_elliptic() ||
          !orthogonal_complement(at(x).fix().direction()).is_subspace_of(fam.orth))
        return "lower bound " + str(at(x)) + " escapes the meet family";
    for (std::size_t x = 0; x < size(); ++x)
      if (in_family(fam, at(x)) && !contains(best, x))
        return "family member " + str(at(x)) + " is not a maximal lower bound";
    return {};
  }

  std::string check_join(const std::vector<std::size_t> &q,
                         const JoinResult &r) const {
    auto upper = upper_bounds(q);
    auto best = definitional_join(q);
    if (auto *p = std::get_if<PosetElement>(&r)) return check_element(q, *p, upper, best, false);
    if (std::holds_alternative<NoUpperBound>(r))
      return upper.empty() ? std::string{} : "upper bound " + str(at(upper[0])) + " exists";
    const auto &fam = std::get<JoinFamily>(r);
    for (auto x : upper)
      if (!at(x).is_hyperbolic() || !fam.dir.is_subspace_of(at(x).move().direction()))
        return "upper bound " + str(at(x)) + " escapes the join family";
    for (std::size_t x = 0; x < size(); ++x)
      if (in_family(fam, at(x), u_->ctx) && !contains(best, x))
        return "family member " + str(at(x)) + " is not a minimal upper bound";
    return {};
  }

  std::string check_dm_meet(const std::vector<std::size_t> &q,
                            const PosetElement &p) const {
    return check_element(q, p, lower_bounds(q), definitional_meet(q), true);
  }
  std::string check_dm_join(const std::vector<std::size_t> &q,
                            const PosetElement &p) const {
    return check_element(q, p, upper_bounds(q), definitional_join(q), false);
  }

private:
  std::vector<std::size_t> bounds(const std::vector<std::size_t> &q,
                                  bool lower) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
      bool ok = true;
      for (auto i : q)
        if (!(lower ? le_[x][i] : le_[i][x])) ok = false;
      if (ok) out.push_back(x);
    }
    return out;
  }
  std::vector<std::size_t> extremal(const std::vector<std::size_t> &set,
                                    bool maximal) const {
    std::vector<std::size_t> out;
    for (auto x : set) {
      bool dominated = false;
      for (auto y : set)
        if (y != x && (maximal ? le_[x][y] : le_[y][x])) dominated = true;
      if (!dominated) out.push_back(x);
    }
    return out;
  }
  static bool contains(const std::vector<std::size_t> &v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  }
  static std::string str(const PosetElement &p) {
    std::ostringstream os;
    os << p;
    return os.str();
  }
  std::optional<std::size_t> index_of(const PosetElement &p) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (at(i) == p) return i;
    return std::nullopt;
  }

  /// p must be a bound of q inside the context, must dominate every bound
  /// found in the universe, and must be the unique definitional answer when
  /// the universe contains it.
  std::string check_element(const std::vector<std::size_t> &q,
                            const PosetElement &p,
                            const std::vector<std::size_t> &found,
                            const std::vector<std::size_t> &best,
                            bool lower) const {
    if (!u_->ctx.contains(p)) return "result " + str(p) + " is outside the context";
    for (auto i : q)
      if (!(lower ? leq(p, at(i)) : leq(at(i), p)))
        return "result " + str(p) + " is not a bound of " + str(at(i));
    for (auto x : found)
      if (!(lower ? leq(at(x), p) : leq(p, at(x))))
        return "bound " + str(at(x)) + " is not dominated by " + str(p);
    if (auto i = index_of(p))
      if (best.size() != 1 || best[0] != *i)
        return "definitional answer differs from " + str(p);
    return {};
  }

  const FiniteUniverse *u_;
  std::vector<std::vector<bool>> le_;
};

inline std::vector<PosetElement> definitional_meet(std::span<const PosetElement> q,
                                                   const FiniteUniverse &u) {
  UniverseOracle o(u);
  std::vector<std::size_t> idx;
  for (const auto &p : q)
    for (std::size_t i = 0; i < o.size(); ++i)
      if (o.at(i) == p) idx.push_back(i);
  if (idx.size() != q.size()) throw InvalidArgument("element outside the universe");
  std::vector<PosetElement> out;
  for (auto i : o.definitional_meet(idx)) out.push_back(o.at(i));
  return out;
}

inline std::vector<PosetElement> definitional_join(std::span<const PosetElement> q,
                                                   const FiniteUniverse &u) {
  UniverseOracle o(u);
  std::vector<std::size_t> idx;
  for (const auto &p : q)
    for (std::size_t i = 0; i < o.size(); ++i)
      if (o.at(i) == p) idx.push_back(i);
  if (idx.size() != q.size()) throw InvalidArgument("element outside the universe");
  std::vector<PosetElement> out;
  for (auto i : o.definitional_join(idx)) out.push_back(o.at(i));
  return out;
}

/// Calls f on every subset of {0, ..., n-1} with 1 ≤ size ≤ max_size, in
/// lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t max_size,
                            const std::function<void(const std::vector<std::size_t> &)> &f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) f(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

struct AgreementReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Compares the closed-form operations with the definitional ones on every
/// subset of size ≤ max_size: binary meet/join on subsets of size 1 and 2,
/// and dm_meet/dm_join on every subset when the context is a lattice.
inline AgreementReport check_agreement(const FiniteUniverse &u,
                                       std::size_t max_size = 3) {
  UniverseOracle o(u);
  AgreementReport rep;
  const bool lattice = is_lattice(u.ctx);
  auto record = [&](const std::string &op, const std::vector<std::size_t> &q,
                    const std::string &err) {
    ++rep.checked;
    if (err.empty()) return;
    std::ostringstream os;
    os << u.name << ": " << op << " {";
    for (std::size_t i = 0; i < q.size(); ++i) os << (i ? ", " : "") << o.at(q[i]);
    os << "}: " << err;
    rep.failures.push_back(os.str());
  };
  for_each_subset(o.size(), max_size, [&](const std::vector<std::size_t> &q) {
    if (q.size() <= 2) {
      const auto &p = o.at(q.front());
      const auto &r = o.at(q.back());
      record("meet", q, o.check_meet(q, meet(p, r, u.ctx)));
      record("join", q, o.check_join(q, join(p, r, u.ctx)));
    }
    if (lattice) {
      std::vector<PosetElement> elems;
      for (auto i : q) elems.push_back(o.at(i));
      record("dm_meet", q, o.check_dm_meet(q, dm_meet(elems, u.ctx)));
      record("dm_join", q, o.check_dm_join(q, dm_join(elems, u.ctx)));
    }
  });
  return rep;
}

/// Every bowtie (a, b : c, d) inside the universe, judged only by the
/// tabulated order: a, b minimal upper bounds of {c, d} and c, d maximal
/// lower bounds of {a, b}, with a ∥ b and c ∥ d. Each unordered pair of
/// pairs is reported once (a before b, c before d in universe order).
inline std::vector<Bowtie> search_bowties(const FiniteUniverse &u) {
  UniverseOracle o(u);
  const std::size_t n = o.size();
  auto incomparable = [&](std::size_t i, std::size_t j) {
    return !o.le(i, j) && !o.le(j, i);
  };
  std::vector<Bowtie> out;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = c + 1; d < n; ++d) {
      if (!incomparable(c, d)) continue;
      auto ups = o.definitional_join({c, d});
      if (ups.size() < 2) continue;
      for (std::size_t i = 0; i < ups.size(); ++i)
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
          auto a = ups[i], b = ups[j];
          auto downs = o.definitional_meet({a, b});
          if (std::find(downs.begin(), downs.end(), c) != downs.end() &&
              std::find(downs.begin(), downs.end(), d) != downs.end())
            out.push_back({o.at(a), o.at(b), o.at(c), o.at(d)});
        }
    }
  return out;
}

/// Shape of every bowtie of a hyperbolic poset: a = h^{M1}, b = h^{M2}
/// with Dir(M1) = Dir(M2) = U a proper nontrivial subspace of Dir(top),
/// and c = e^{B1}, d = e^{B2} with Dir(B1) = Dir(B2) = U⊥.
inline bool is_normal_form(const Bowtie &t, const PosetContext &ctx) {
  if (!ctx.hyperbolic()) return false;
  if (!t.a.is_hyperbolic() || !t.b.is_hyperbolic()) return false;
  if (!t.c.is_elliptic() || !t.d.is_elliptic()) return false;
  const auto &u = t.a.move().direction();
  if (t.b.move().direction() != u) return false;
  if (u.is_zero() || u == ctx.top().move().direction()) return false;
  auto perp = orthogonal_complement(u);
  return t.c.fix().direction() == perp && t.d.fix().direction() == perp;
}

} // namespace scherk
