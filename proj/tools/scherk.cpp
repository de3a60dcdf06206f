// Command-line front end: reflection length, factorizations and model
// poset queries for isometries of Rⁿ. JSON in, JSON (or text/DOT) out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "scherk/hasse.hpp"
#include "scherk/json_io.hpp"
#include "scherk/sampling.hpp"

namespace {

using namespace scherk;
using json_io::json;
using json_io::to_json;

enum Exit { Ok = 0, ParseFailure = 1, BadIsometry = 2, BadPoset = 3 };

struct Options {
  std::string input = "-";
  std::optional<std::size_t> dim;
  std::uint64_t seed = 0;
  std::string format; // empty: the command's default (DOT for hasse, else JSON)
  std::string chain_file;
  bool augmented = false;
};

json read_json(const std::string &path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return json::parse(in);
}

void check_dim(const Options &o, std::size_t n) {
  if (o.dim) require_same_dim(n, *o.dim, "--dim");
}

Isometry read_isometry(const json &j, const Options &o) {
  json copy = j;
  if (o.dim && copy.is_object() && copy.contains("reflections") && !copy.contains("dim"))
    copy["dim"] = *o.dim;
  auto w = json_io::isometry_from(copy);
  check_dim(o, w.dim());
  return w;
}

PosetContext read_context(const json &j, const Options &o) {
  auto ctx = json_io::context_from(j, o.augmented);
  check_dim(o, ctx.ambient_dim());
  return ctx;
}

std::vector<PosetElement> read_elements(const json &j, const PosetContext &ctx) {
  auto es = json_io::elements_from(json_io::detail::field(j, "elements"));
  if (es.empty()) throw InvalidArgument("\"elements\" is empty");
  for (const auto &p : es) {
    require_same_dim(p.ambient_dim(), ctx.ambient_dim(), "element");
    ctx.require(p);
  }
  return es;
}

// Text rendering.

std::string text(const Vector &v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string text(const LinearSubspace &u) {
  if (u.is_zero()) return "0";
  std::string s = "span{";
  for (std::size_t i = 0; i < u.dim(); ++i) s += (i ? "," : "") + text(u.basis_vector(i));
  return s + "}";
}

std::string text(const AffineSubspaceV &m) {
  return text(m.direction()) + " + " + text(m.mu());
}

std::string text(const AffineSubspaceE &b) {
  return text(b.point().from_origin()) + " + " + text(b.direction());
}

std::string text(const PosetElement &p) {
  switch (p.kind()) {
  case ElementKind::Elliptic: return "e^{" + text(p.fix()) + "}";
  case ElementKind::Hyperbolic: return "h^{" + text(p.move()) + "}";
  case ElementKind::New: return "n^{" + text(p.subspace()) + "}";
  }
  return {};
}

std::string text(const Reflection &r) {
  return "reflection root " + text(r.root()) + " through " + text(r.mirror().point().from_origin());
}

void emit(const Options &o, const json &j, const std::string &txt) {
  if (o.format == "text") std::cout << txt;
  else std::cout << j.dump(2) << '\n';
}

// Commands.

int cmd_analyze(const Options &o) {
  auto w = read_isometry(read_json(o.input), o);
  auto c = classify(w);
  auto s = standard_splitting(w);
  json out = to_json(c);
  out["splitting"] = to_json(s);
  std::ostringstream t;
  t << "tag: " << to_string(c.kind) << "\nlength: " << c.length
    << "\nmove_set: " << text(c.move_set) << "\nmin_set: " << text(c.min_set)
    << "\nsplitting mu: " << text(s.mu) << '\n';
  emit(o, out, t.str());
  return Ok;
}

json chain_json(std::span<const PosetElement> chain) {
  json ranks = json::array();
  for (const auto &p : chain) ranks.push_back(rank(p));
  return {{"chain", to_json(chain)}, {"ranks", ranks}};
}

Factorization make_factorization(const Isometry &w, const Options &o) {
  if (!o.chain_file.empty()) {
    json c = read_json(o.chain_file);
    if (c.is_object() && c.contains("chain")) c = c["chain"];
    auto chain = json_io::elements_from(c);
    for (const auto &p : chain) require_same_dim(p.ambient_dim(), w.dim(), "chain");
    return chain_to_factorization(chain, w);
  }
  if (o.seed == 0) return factor(w);
  Rng rng(o.seed);
  return random_minimal_factorization(w, rng);
}

int cmd_factorize(const Options &o) {
  auto w = read_isometry(read_json(o.input), o);
  auto f = make_factorization(w, o);
  json out = to_json(f);
  out["length"] = f.length();
  out["minimal"] = verify_minimal(f);
  std::ostringstream t;
  t << "length: " << f.length() << '\n';
  for (const auto &r : f.factors) t << text(r) << '\n';
  emit(o, out, t.str());
  return Ok;
}

int cmd_chain(const Options &o) {
  auto j = read_json(o.input);
  Factorization f = j.is_object() && j.contains("factors")
                        ? json_io::factorization_from(j)
                        : make_factorization(read_isometry(j, o), o);
  check_dim(o, f.target.dim());
  auto chain = factorization_to_chain(f);
  std::ostringstream t;
  for (const auto &p : chain) t << rank(p) << ' ' << text(p) << '\n';
  emit(o, chain_json(chain), t.str());
  return Ok;
}

int cmd_order(const Options &o) {
  auto j = read_json(o.input);
  auto p = json_io::element_from(json_io::detail::field(j, "p"));
  auto q = json_io::element_from(json_io::detail::field(j, "q"));
  require_same_dim(p.ambient_dim(), q.ambient_dim(), "order");
  check_dim(o, p.ambient_dim());
  if (j.contains("top")) {
    auto ctx = read_context(j, o);
    ctx.require(p);
    ctx.require(q);
  }
  bool le = leq(p, q), ge = leq(q, p);
  json out = {{"leq", le}, {"geq", ge}, {"comparable", le || ge},
              {"rank_p", rank(p)}, {"rank_q", rank(q)}};
  std::ostringstream t;
  t << (le && ge ? "p = q" : le ? "p < q" : ge ? "p > q" : "p || q") << '\n';
  emit(o, out, t.str());
  return Ok;
}

template <class Binary, class Many>
int bound_command(const Options &o, Binary binary, Many many) {
  auto j = read_json(o.input);
  auto ctx = read_context(j, o);
  auto es = read_elements(j, ctx);
  json result;
  std::string t;
  if (es.size() <= 2 && !ctx.augmented()) {
    auto r = binary(es.front(), es.back(), ctx);
    result = to_json(r);
    if (auto *p = std::get_if<PosetElement>(&r)) t = text(*p) + '\n';
    else t = result.dump() + '\n';
  } else {
    if (!is_lattice(ctx))
      throw InvalidArgument("this poset is not a lattice: give exactly two elements");
    auto p = many(std::span<const PosetElement>(es), ctx);
    result = {{"kind", "element"}, {"element", to_json(p)}};
    t = text(p) + '\n';
  }
  emit(o, {{"result", result}}, t);
  return Ok;
}

int cmd_meet(const Options &o) {
  return bound_command(
      o, [](auto &p, auto &q, auto &ctx) { return meet(p, q, ctx); },
      [](auto es, auto &ctx) { return dm_meet(es, ctx); });
}

int cmd_join(const Options &o) {
  return bound_command(
      o, [](auto &p, auto &q, auto &ctx) { return join(p, q, ctx); },
      [](auto es, auto &ctx) { return dm_join(es, ctx); });
}

int cmd_bowtie(const Options &o) {
  auto j = read_json(o.input);
  auto ctx = read_context(j, o);
  std::optional<LinearSubspace> u;
  if (j.contains("U")) u = json_io::subspace_from(j["U"]);
  auto t = find_bowtie(ctx, u);
  json out = {{"bowtie", to_json(t)}, {"verified", is_bowtie(t, ctx)}};
  std::ostringstream s;
  s << "a: " << text(t.a) << "\nb: " << text(t.b) << "\nc: " << text(t.c)
    << "\nd: " << text(t.d) << '\n';
  emit(o, out, s.str());
  return Ok;
}

int cmd_lattice(const Options &o) {
  auto ctx = read_context(read_json(o.input), o);
  bool lat = is_lattice(ctx);
  json out = {{"lattice", lat}};
  if (!lat) out["bowtie"] = to_json(find_bowtie(ctx));
  emit(o, out, std::string(lat ? "lattice" : "not a lattice") + '\n');
  return Ok;
}

int cmd_complete(const Options &o) {
  auto j = read_json(o.input);
  auto opts = o;
  opts.augmented = true;
  auto ctx = read_context(j, opts);
  auto es = read_elements(j, ctx);
  auto m = dm_meet(es, ctx);
  auto jn = dm_join(es, ctx);
  json out = {{"meet", to_json(m)}, {"join", to_json(jn)}};
  emit(o, out, "meet: " + text(m) + "\njoin: " + text(jn) + '\n');
  return Ok;
}

int cmd_hasse(const Options &o) {
  auto j = read_json(o.input);
  auto es = json_io::elements_from(json_io::detail::field(j, "elements"));
  for (const auto &p : es) check_dim(o, p.ambient_dim());
  if (j.contains("top")) {
    auto ctx = read_context(j, o);
    for (const auto &p : es) {
      require_same_dim(p.ambient_dim(), ctx.ambient_dim(), "element");
      ctx.require(p);
    }
  }
  if (o.format == "json") {
    json nodes = json::array(), edges = json::array();
    for (std::size_t i = 0; i < es.size(); ++i)
      nodes.push_back({{"id", i},
                       {"kind", std::string(1, kind_letter(es[i].kind()))},
                       {"dim", es[i].dim()},
                       {"rank", rank(es[i])}});
    for (auto [lo, hi] : covering_edges(es)) edges.push_back({lo, hi});
    std::cout << json{{"nodes", nodes}, {"edges", edges}}.dump(2) << '\n';
  } else {
    write_hasse_dot(std::cout, es);
  }
  return Ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Reflection length, minimal factorizations and model posets "
               "of euclidean isometries"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char *name;
    const char *help;
    int (*run)(const Options &);
  };
  const Cmd cmds[] = {
      {"analyze", "type, reflection length, move-set, min-set, splitting", cmd_analyze},
      {"factorize", "minimal reflection factorization", cmd_factorize},
      {"chain", "maximal chain of suffix invariants of a factorization", cmd_chain},
      {"order", "compare two poset elements", cmd_order},
      {"meet", "maximal lower bound(s) in a model poset", cmd_meet},
      {"join", "minimal upper bound(s) in a model poset", cmd_join},
      {"bowtie", "a bowtie in a hyperbolic model poset", cmd_bowtie},
      {"lattice", "decide whether a model poset is a lattice", cmd_lattice},
      {"complete", "meet and join in the augmented poset", cmd_complete},
      {"hasse", "Hasse diagram of a finite restriction", cmd_hasse},
  };
  int (*run)(const Options &) = nullptr;
  for (const auto &c : cmds) {
    auto *sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", o.input, "JSON input file ('-' for stdin)");
    sub->add_option("--dim", o.dim, "expected ambient dimension");
    sub->add_option("--seed", o.seed, "random seed (0: deterministic default)");
    sub->add_option("--format", o.format, "output format (default: dot for hasse, json otherwise)")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--chain", o.chain_file, "maximal chain JSON (factorize)");
    sub->add_flag("--augmented", o.augmented, "use the augmented poset");
    sub->callback([&run, &c] { run = c.run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? Ok : ParseFailure;
  }

  try {
    return run(o);
  } catch (const json::exception &e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return ParseFailure;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return ParseFailure;
  } catch (const DimensionMismatch &e) {
    std::cerr << "error: " << e.what() << '\n';
    return ParseFailure;
  } catch (const InvalidIsometry &e) {
    std::cerr << "error: invalid isometry: " << e.what() << '\n';
    return BadIsometry;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return BadPoset;
  }
}
