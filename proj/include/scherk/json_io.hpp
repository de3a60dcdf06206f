#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "factorization.hpp"
#include "oracle.hpp"

namespace scherk::json_io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string &what) { throw ParseError(what); }

inline const json &field(const json &j, const char *key) {
  if (!j.is_object()) fail(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::size_t natural(const json &j, const char *what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(std::string(what) + " must be a natural number");
  return j.get<std::size_t>();
}

inline void expect_kind(const json &j, const char *kind) {
  if (j.is_object() && j.contains("kind") && j["kind"] != kind)
    fail(std::string("expected kind \"") + kind + "\"");
}

} // namespace detail

// Rationals are written "p/q" ("p" for integers); integer literals are
// accepted on input.

inline json to_json(const Scalar &s) { return to_string(s); }

inline Scalar scalar_from(const json &j) {
  if (j.is_number_integer()) return Scalar(j.dump(), 10);
  if (!j.is_string()) detail::fail("rational must be a string \"p/q\" or an integer");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const InvalidArgument &e) {
    detail::fail(e.what());
  }
}

inline json to_json(const Vector &v) {
  json out = json::array();
  for (const auto &x : v) out.push_back(to_json(x));
  return out;
}

inline Vector vector_from(const json &j) {
  if (!j.is_array()) detail::fail("vector must be an array");
  std::vector<Scalar> xs;
  for (const auto &x : j) xs.push_back(scalar_from(x));
  return Vector(std::move(xs));
}

inline Vector vector_from(const json &j, std::size_t n) {
  auto v = vector_from(j);
  require_same_dim(v.size(), n, "vector");
  return v;
}

inline json to_json(const Point &p) { return to_json(p.from_origin()); }
inline Point point_from(const json &j) { return Point(vector_from(j)); }

inline Matrix matrix_from(const json &j, std::size_t cols) {
  if (!j.is_array()) detail::fail("matrix must be an array of rows");
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto row = vector_from(j[i], cols);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

inline json to_json(const Matrix &m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

inline json to_json(const LinearSubspace &u) {
  return {{"dim_ambient", u.ambient_dim()}, {"basis", to_json(u.basis())}};
}

/// Any spanning rows are accepted; the stored basis is re-reduced.
inline LinearSubspace subspace_from(const json &j) {
  auto n = detail::natural(detail::field(j, "dim_ambient"), "dim_ambient");
  return LinearSubspace::row_space(matrix_from(detail::field(j, "basis"), n));
}

inline json to_json(const AffineSubspaceE &b) {
  return {{"kind", "affineE"},
          {"point", to_json(b.point())},
          {"direction", to_json(b.direction())}};
}

inline AffineSubspaceE affine_e_from(const json &j) {
  detail::expect_kind(j, "affineE");
  auto dir = subspace_from(detail::field(j, "direction"));
  return AffineSubspaceE(Point(vector_from(detail::field(j, "point"), dir.ambient_dim())),
                         dir);
}

inline json to_json(const AffineSubspaceV &m) {
  return {{"kind", "affineV"}, {"U", to_json(m.direction())}, {"mu", to_json(m.mu())}};
}

inline AffineSubspaceV affine_v_from(const json &j) {
  detail::expect_kind(j, "affineV");
  auto u = subspace_from(detail::field(j, "U"));
  return standard_form(u, vector_from(detail::field(j, "mu"), u.ambient_dim()));
}

inline json to_json(const Isometry &w) {
  return {{"dim", w.dim()},
          {"matrix", to_json(w.linear())},
          {"translation", to_json(w.translation_part())}};
}

inline json to_json(const Reflection &r) {
  return {{"root", to_json(r.root())}, {"point", to_json(r.mirror().point())}};
}

/// Throws InvalidIsometry for a zero root or a mirror that is not a
/// hyperplane.
inline Reflection reflection_from(const json &j) {
  auto root = vector_from(detail::field(j, "root"));
  auto point = vector_from(detail::field(j, "point"), root.size());
  try {
    return Reflection(root, Point(point));
  } catch (const InvalidArgument &e) {
    throw InvalidIsometry(e.what());
  }
}

/// {"dim", "matrix", "translation"} or {"reflections": [...], "dim"?}. A
/// reflection list r1, r2, ..., rk denotes the product r1 r2 ⋯ rk, so rk
/// acts first. Throws InvalidIsometry for a non-orthogonal matrix.
inline Isometry isometry_from(const json &j) {
  if (j.is_object() && j.contains("reflections")) {
    const auto &rs = j["reflections"];
    if (!rs.is_array()) detail::fail("\"reflections\" must be an array");
    std::size_t n = 0;
    if (j.contains("dim")) n = detail::natural(j["dim"], "dim");
    else if (!rs.empty()) n = vector_from(detail::field(rs[0], "root")).size();
    else detail::fail("an empty reflection list needs \"dim\"");
    auto w = Isometry::identity(n);
    for (const auto &r : rs) {
      auto refl = reflection_from(r);
      require_same_dim(refl.dim(), n, "reflection list");
      w = w * refl;
    }
    return w;
  }
  auto n = detail::natural(detail::field(j, "dim"), "dim");
  auto a = matrix_from(detail::field(j, "matrix"), n);
  require_same_dim(a.rows(), n, "isometry matrix rows");
  auto b = vector_from(detail::field(j, "translation"), n);
  return Isometry(std::move(a), std::move(b));
}

inline json to_json(const Factorization &f) {
  json factors = json::array();
  for (const auto &r : f.factors) factors.push_back(to_json(r));
  return {{"target", to_json(f.target)}, {"factors", std::move(factors)}};
}

inline Factorization factorization_from(const json &j) {
  Factorization f{isometry_from(detail::field(j, "target")), {}};
  const auto &fs = detail::field(j, "factors");
  if (!fs.is_array()) detail::fail("\"factors\" must be an array");
  for (const auto &r : fs) {
    f.factors.push_back(reflection_from(r));
    require_same_dim(f.factors.back().dim(), f.target.dim(), "factor");
  }
  return f;
}

inline json to_json(const PosetElement &p) {
  switch (p.kind()) {
  case ElementKind::Elliptic: return {{"kind", "e"}, {"B", to_json(p.fix())}};
  case ElementKind::Hyperbolic: return {{"kind", "h"}, {"M", to_json(p.move())}};
  case ElementKind::New: return {{"kind", "n"}, {"U", to_json(p.subspace())}};
  }
  return {};
}

/// Throws InvalidPoset for a linear M or a zero U.
inline PosetElement element_from(const json &j) {
  const auto &kind = detail::field(j, "kind");
  if (kind == "e") return PosetElement::elliptic(affine_e_from(detail::field(j, "B")));
  if (kind == "h") return PosetElement::hyperbolic(affine_v_from(detail::field(j, "M")));
  if (kind == "n") return PosetElement::added(subspace_from(detail::field(j, "U")));
  detail::fail("element kind must be \"e\", \"h\" or \"n\"");
}

inline json to_json(std::span<const PosetElement> ps) {
  json out = json::array();
  for (const auto &p : ps) out.push_back(to_json(p));
  return out;
}

inline std::vector<PosetElement> elements_from(const json &j) {
  if (!j.is_array()) detail::fail("expected an array of poset elements");
  std::vector<PosetElement> out;
  for (const auto &e : j) out.push_back(element_from(e));
  for (const auto &p : out)
    require_same_dim(p.ambient_dim(), out.front().ambient_dim(), "poset elements");
  return out;
}

inline json to_json(const MeetResult &r) {
  if (auto *p = std::get_if<PosetElement>(&r))
    return {{"kind", "element"}, {"element", to_json(*p)}};
  return {{"kind", "meet_family"}, {"orth", to_json(std::get<MeetFamily>(r).orth)}};
}

inline json to_json(const JoinResult &r) {
  if (auto *p = std::get_if<PosetElement>(&r))
    return {{"kind", "element"}, {"element", to_json(*p)}};
  if (auto *f = std::get_if<JoinFamily>(&r))
    return {{"kind", "join_family"}, {"dir", to_json(f->dir)}};
  return {{"kind", "none"}};
}

inline json to_json(const Bowtie &t) {
  return {{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}, {"d", to_json(t.d)}};
}

inline json to_json(const IsometryClass &c) {
  return {{"tag", to_string(c.kind)},
          {"length", c.length},
          {"move_set", to_json(c.move_set)},
          {"min_set", to_json(c.min_set)}};
}

inline json to_json(const StandardSplitting &s) {
  return {{"mu", to_json(s.mu)}, {"elliptic_part", to_json(s.elliptic_part)}};
}

/// {"top": element, "augmented": bool, "elements": [...]}: a finite
/// restriction of a model poset.
inline json to_json(const FiniteUniverse &u) {
  return {{"top", to_json(u.ctx.top())},
          {"augmented", u.ctx.augmented()},
          {"elements", to_json(std::span<const PosetElement>(u.elements))}};
}

/// Context from {"top", "augmented"?}; `augmented` forces the flag on.
inline PosetContext context_from(const json &j, bool augmented = false) {
  if (j.is_object() && j.contains("augmented")) {
    if (!j["augmented"].is_boolean()) detail::fail("\"augmented\" must be a boolean");
    augmented = augmented || j["augmented"].get<bool>();
  }
  return PosetContext(element_from(detail::field(j, "top")), augmented);
}

} // namespace scherk::json_io
