#include "fgeo/cli.hpp"

#include "fgeo/constants.hpp"
#include "fgeo/cosmology.hpp"
#include "fgeo/error.hpp"
#include "fgeo/finite_field.hpp"
#include "fgeo/finite_geometry.hpp"
#include "fgeo/finite_hilbert.hpp"
#include "fgeo/regularization.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fgeo::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptionSpec {
  std::string name;
  std::string default_value;
  bool is_flag = false;
};

struct Context;
using Handler = std::function<std::optional<Entries>(Context&)>;

struct ActionSpec {
  std::string subcommand;
  std::string action;
  std::string summary;
  std::vector<OptionSpec> options;
  Handler handler;
};

struct Context {
  std::map<std::string, std::string> values;
  Config config;
  RunReport* report = nullptr;

  bool has(const std::string& name) const {
    auto it = values.find(name);
    return it != values.end() && !it->second.empty();
  }

  const std::string& raw(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end() || it->second.empty()) throw UsageError("missing required option --" + name);
    return it->second;
  }

  bool flag(const std::string& name) const {
    auto it = values.find(name);
    return it != values.end() && it->second == "true";
  }

  std::int64_t integer(const std::string& name) const {
    const std::string& text = raw(name);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw UsageError("--" + name + " expects an integer, got '" + text + "'");
    return v;
  }

  std::uint32_t small_uint(const std::string& name) const {
    const auto v = integer(name);
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
      throw UsageError("--" + name + " must be a non-negative 32-bit integer");
    }
    return static_cast<std::uint32_t>(v);
  }

  double number(const std::string& name) const {
    const std::string& text = raw(name);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw UsageError("--" + name + " expects a number, got '" + text + "'");
    return v;
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::uint64_t> parse_index_list(const std::string& option, const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || part[0] == '-') {
      throw UsageError("--" + option + " expects comma-separated element indices, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

RationalNumber parse_rational(const std::string& option, const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError("--" + option + ": bad rational '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return RationalNumber(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw UsageError("--" + option + ": zero denominator in '" + text + "'");
  return RationalNumber(BigInt(parse_int(text.substr(0, slash))), BigInt(den));
}

std::vector<RationalPoint> parse_points(const std::string& option, const std::string& text) {
  std::vector<RationalPoint> pts;
  for (const auto& item : split(text, ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2) throw UsageError("--" + option + " expects 'x,y;x,y;...', got '" + text + "'");
    pts.push_back({parse_rational(option, xy[0]), parse_rational(option, xy[1])});
  }
  return pts;
}

DistanceTable parse_table(const std::string& option, const std::string& text) {
  DistanceTable table;
  for (const auto& row : split(text, ';')) {
    std::vector<double> values;
    for (const auto& cell : split(row, ',')) {
      if (cell == "inf") {
        values.push_back(std::numeric_limits<double>::infinity());
        continue;
      }
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (cell.empty() || used != cell.size()) throw UsageError("--" + option + ": bad table entry '" + cell + "'");
      values.push_back(v);
    }
    table.push_back(std::move(values));
  }
  return table;
}

std::string poly_string(const std::vector<std::uint32_t>& poly) {
  std::string out;
  for (std::size_t i = poly.size(); i-- > 0;) {
    const auto c = poly[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FieldRef field_from_pk(const Context& ctx) {
  const auto p = ctx.small_uint("p");
  if (ctx.flag("gaussian")) return make_gaussian_extension(p);
  return make_extension_field(p, ctx.small_uint("k"));
}

FieldRef field_from_order(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::NotPrime, "field order must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t rest = q;
  std::uint32_t k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make_extension_field(static_cast<std::uint32_t>(p), k);
}

FieldElement element_arg(const Context& ctx, const FieldRef& field, const std::string& name) {
  const auto idx = parse_index_list(name, ctx.raw(name));
  if (idx.size() != 1) throw UsageError("--" + name + " expects a single element index");
  if (idx[0] >= field->order()) throw UsageError("--" + name + " index out of range for " + field->describe());
  return FieldElement::from_index(field, idx[0]);
}

std::vector<FieldElement> coords_arg(const Context& ctx, const FieldRef& field, const std::string& name) {
  std::vector<FieldElement> coords;
  for (auto idx : parse_index_list(name, ctx.raw(name))) {
    if (idx >= field->order()) throw UsageError("--" + name + " index out of range for " + field->describe());
    coords.push_back(FieldElement::from_index(field, idx));
  }
  return coords;
}

StringTable axiom_table(const AxiomReport& report) {
  StringTable rows{{"axiom", "status", "witness"}};
  for (const auto& c : report.checks) rows.push_back({c.name, c.passed ? "pass" : "fail", c.witness});
  return rows;
}

Quantity q(double v, std::string unit) { return Quantity{v, std::move(unit)}; }

CosmologyParams params_from(const Context& ctx) {
  CosmologyParams p = ctx.config.params;
  if (ctx.has("rho-vac")) p.rho_vac = ctx.number("rho-vac");
  if (ctx.has("l-u")) p.L_U0 = ctx.number("l-u");
  if (ctx.has("h0")) p.H0 = ctx.number("h0");
  if (ctx.has("kappa")) p.kappa = static_cast<int>(ctx.integer("kappa"));
  p.validate();
  return p;
}

Constants constants_from(const Context& ctx) {
  Constants k = ctx.config.constants;
  if (ctx.has("l-planck")) k.l_planck = ctx.number("l-planck");
  k.validate();
  return k;
}

const std::vector<OptionSpec> kCosmoOptions = {{"rho-vac"}, {"l-u"}, {"h0"}, {"kappa"}};

std::string to_string_big(const BigInt& v) { return v.str(); }

// ---------------------------------------------------------------- handlers

std::vector<ActionSpec> build_actions() {
  std::vector<ActionSpec> a;

  a.push_back({"field", "info", "field order, modulus and construction",
               {{"p"}, {"k", "1"}, {"gaussian", "", true}}, [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 ctx.report->provenance = "GF(p^k) = E_p[x]/(m(x)), m monic irreducible";
                 return Entries{{"field", f->describe()},
                                {"p", BigInt(f->p)},
                                {"k", BigInt(f->k)},
                                {"order", BigInt(f->order())},
                                {"modulus", poly_string(f->modulus)},
                                {"construction", std::string(to_string(f->construction))}};
               }});

  a.push_back({"field", "elements", "all elements in index order",
               {{"p"}, {"k", "1"}, {"gaussian", "", true}}, [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 if (f->order() > 4096) throw Error(ErrorKind::SizeLimit, "element listing limited to 4096 elements");
                 StringList names;
                 for (const auto& e : enumerate_elements(f)) names.push_back(e.to_string());
                 ctx.report->provenance = "index = sum c_i p^i";
                 return Entries{{"order", BigInt(f->order())}, {"elements", names}};
               }});

  a.push_back({"field", "table", "addition and multiplication tables",
               {{"p"}, {"k", "1"}, {"gaussian", "", true}}, [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 if (f->order() > 64) throw Error(ErrorKind::SizeLimit, "tables limited to fields of order <= 64");
                 const auto elems = enumerate_elements(f);
                 StringList names;
                 for (const auto& e : elems) names.push_back(e.to_string());
                 StringTable add_t;
                 StringTable mul_t;
                 std::vector<std::string> header{"+"};
                 header.insert(header.end(), names.begin(), names.end());
                 add_t.push_back(header);
                 header[0] = "*";
                 mul_t.push_back(header);
                 for (const auto& x : elems) {
                   std::vector<std::string> ar{x.to_string()};
                   std::vector<std::string> mr{x.to_string()};
                   for (const auto& y : elems) {
                     ar.push_back(add(x, y).to_string());
                     mr.push_back(mul(x, y).to_string());
                   }
                   add_t.push_back(std::move(ar));
                   mul_t.push_back(std::move(mr));
                 }
                 ctx.report->provenance = "arithmetic modulo " + poly_string(f->modulus);
                 return Entries{{"field", f->describe()},
                                {"modulus", poly_string(f->modulus)},
                                {"elements", names},
                                {"addition", add_t},
                                {"multiplication", mul_t}};
               }});

  auto binary_op = [](std::string name, std::function<FieldElement(const FieldElement&, const FieldElement&)> op) {
    return ActionSpec{"field", name, name + " of two elements given by index",
                      {{"p"}, {"k", "1"}, {"gaussian", "", true}, {"a"}, {"b"}},
                      [name, op](Context& ctx) -> std::optional<Entries> {
                        const auto f = field_from_pk(ctx);
                        const auto x = element_arg(ctx, f, "a");
                        const auto y = element_arg(ctx, f, "b");
                        const auto r = op(x, y);
                        ctx.report->provenance = "polynomial " + name + " modulo " + poly_string(f->modulus);
                        return Entries{{"a", x.to_string()},
                                       {"b", y.to_string()},
                                       {"value", r.to_string()},
                                       {"index", BigInt(r.index())}};
                      }};
  };
  a.push_back(binary_op("add", [](const auto& x, const auto& y) { return add(x, y); }));
  a.push_back(binary_op("sub", [](const auto& x, const auto& y) { return sub(x, y); }));
  a.push_back(binary_op("mul", [](const auto& x, const auto& y) { return mul(x, y); }));

  a.push_back({"field", "inv", "multiplicative inverse", {{"p"}, {"k", "1"}, {"gaussian", "", true}, {"a"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 const auto x = element_arg(ctx, f, "a");
                 const auto r = inv(x);
                 ctx.report->provenance = "extended Euclid on polynomials over E_p";
                 return Entries{{"a", x.to_string()}, {"value", r.to_string()}, {"index", BigInt(r.index())}};
               }});

  a.push_back({"field", "axioms", "exhaustive field-axiom check (--ring N or --gaussian-ring P for diagnostics)",
               {{"p"}, {"k", "1"}, {"gaussian", "", true}, {"ring"}, {"gaussian-ring"}},
               [](Context& ctx) -> std::optional<Entries> {
                 AxiomReport r;
                 if (ctx.has("ring")) {
                   r = verify_residue_ring_axioms(ctx.small_uint("ring"));
                 } else if (ctx.has("gaussian-ring")) {
                   r = verify_gaussian_ring_axioms(ctx.small_uint("gaussian-ring"));
                 } else {
                   r = verify_field_axioms(field_from_pk(ctx));
                 }
                 ctx.report->provenance = "exhaustive enumeration of all element pairs and triples";
                 return Entries{{"structure", r.structure}, {"all_passed", r.all_passed()}, {"checks", axiom_table(r)}};
               }});

  a.push_back({"geometry", "distance", "squared distance of two points of AG(n,q)", {{"q"}, {"a"}, {"b"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_order(static_cast<std::uint64_t>(ctx.integer("q")));
                 const AffinePoint x{coords_arg(ctx, f, "a")};
                 const AffinePoint y{coords_arg(ctx, f, "b")};
                 const auto d2 = squared_distance(x, y);
                 ctx.report->provenance = "d^2(x,y) = sum (x_i - y_i)^2 in the field";
                 return Entries{{"a", x.to_string()},
                                {"b", y.to_string()},
                                {"squared_distance", d2.to_string()},
                                {"distinct", !(x == y)},
                                {"degenerate", d2.is_zero() && !(x == y)}};
               }});

  a.push_back({"geometry", "degenerate", "first distinct pair with zero squared distance",
               {{"q"}, {"dim", "2"}}, [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_order(static_cast<std::uint64_t>(ctx.integer("q")));
                 const AffineSpace space(f, ctx.small_uint("dim"));
                 ctx.report->provenance = "exhaustive scan over point differences";
                 const auto pair = find_degenerate_pair(space);
                 if (!pair) return std::nullopt;
                 return Entries{{"x", pair->first.to_string()},
                                {"y", pair->second.to_string()},
                                {"squared_distance", squared_distance(pair->first, pair->second).to_string()}};
               }});

  a.push_back({"geometry", "lines", "all affine lines of AG(n,q)", {{"q"}, {"dim", "2"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_order(static_cast<std::uint64_t>(ctx.integer("q")));
                 const AffineSpace space(f, ctx.small_uint("dim"));
                 const auto lines = enumerate_lines(space);
                 StringList listed;
                 for (const auto& l : lines) {
                   std::string s = "{";
                   for (std::size_t i = 0; i < l.points.size(); ++i) s += (i ? "," : "") + l.points[i].to_string();
                   listed.push_back(s + "}");
                 }
                 ctx.report->provenance = "lines {b + t d}, d normalized, b smallest point";
                 return Entries{{"line_count", BigInt(lines.size())},
                                {"points_per_line", BigInt(f->order())},
                                {"lines", listed}};
               }});

  auto incidence_entries = [](const IncidenceStructure& s) {
    const auto degrees = s.point_degrees();
    const auto sizes = s.line_sizes();
    const auto [dmin, dmax] = std::minmax_element(degrees.begin(), degrees.end());
    const auto [smin, smax] = std::minmax_element(sizes.begin(), sizes.end());
    const auto hesse = check_hesse_property(s);
    Entries e{{"points", BigInt(s.point_count())},
              {"lines", BigInt(s.line_count())},
              {"points_per_line_min", BigInt(*smin)},
              {"points_per_line_max", BigInt(*smax)},
              {"lines_per_point_min", BigInt(*dmin)},
              {"lines_per_point_max", BigInt(*dmax)},
              {"ordinary_lines", BigInt(s.ordinary_line_count())},
              {"hesse", hesse.holds}};
    if (hesse.witness) {
      e.push_back({"hesse_witness", s.labels()[hesse.witness->first] + " " + s.labels()[hesse.witness->second]});
    }
    return e;
  };

  a.push_back({"geometry", "incidence", "incidence structure of AG(n,q)", {{"q"}, {"dim", "2"}},
               [incidence_entries](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_order(static_cast<std::uint64_t>(ctx.integer("q")));
                 const auto s = incidence_structure(AffineSpace(f, ctx.small_uint("dim")));
                 ctx.report->provenance = "points F^n, lines of AG(n,q), containment";
                 return incidence_entries(s);
               }});

  a.push_back({"geometry", "hesse", "every pair on a line with a third point?", {{"q"}, {"dim", "2"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_order(static_cast<std::uint64_t>(ctx.integer("q")));
                 const auto s = incidence_structure(AffineSpace(f, ctx.small_uint("dim")));
                 const auto r = check_hesse_property(s);
                 ctx.report->provenance = "exhaustive pair scan";
                 Entries e{{"hesse", r.holds}};
                 if (r.witness) {
                   e.push_back({"witness", StringList{s.labels()[r.witness->first], s.labels()[r.witness->second]}});
                 }
                 return e;
               }});

  a.push_back({"geometry", "ordinary", "ordinary line of a rational point set (--points 'x,y;x,y;...')",
               {{"points"}}, [](Context& ctx) -> std::optional<Entries> {
                 const auto pts = parse_points("points", ctx.raw("points"));
                 const auto r = find_ordinary_line(pts);
                 ctx.report->provenance = "exhaustive pair/membership scan in exact rationals";
                 Entries e{{"status", std::string(to_string(r.status))}};
                 if (r.pair) {
                   e.push_back({"line", StringList{pts[r.pair->first].to_string(), pts[r.pair->second].to_string()}});
                 }
                 return e;
               }});

  a.push_back({"geometry", "metric", "metric axioms M1-M4 on a distance table ('0,1;1,0')", {{"table"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto table = parse_table("table", ctx.raw("table"));
                 const auto r = check_metric_axioms(table);
                 ctx.report->provenance = "M1 non-negativity, M2 symmetry, M3 identity, M4 triangle inequality";
                 return Entries{{"all_passed", r.all_passed()},
                                {"checks", axiom_table(r)},
                                {"diameter", q(metric_diameter(table), "1")}};
               }});

  a.push_back({"geometry", "cardinality", "card(P) = card(F)^dim", {{"order"}, {"dim"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "card(P) = card(F)^dim";
                 return Entries{
                     {"cardinality", pointset_cardinality(static_cast<std::uint64_t>(ctx.integer("order")),
                                                          ctx.small_uint("dim"))}};
               }});

  a.push_back({"geometry", "diameter", "diam = d0 (card(F) - 1)", {{"d0"}, {"order"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "diam = d0 (card(F) - 1)";
                 return Entries{{"diameter", q(subspace_diameter(ctx.number("d0"),
                                                                 static_cast<std::uint64_t>(ctx.integer("order"))),
                                               "m")}};
               }});

  a.push_back({"hilbert", "cardinality", "card(H) = p^(k dim)", {{"p"}, {"k", "1"}, {"dim"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "card(H) = p^(k dim)";
                 return Entries{{"cardinality", hilbert_cardinality(ctx.small_uint("p"), ctx.small_uint("k"),
                                                                    ctx.small_uint("dim"))}};
               }});

  a.push_back({"hilbert", "inner", "<u,v> = sum conj(u_n) v_n", {{"p"}, {"k", "2"}, {"gaussian", "", true}, {"u"}, {"v"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 const FiniteVector u{coords_arg(ctx, f, "u")};
                 const FiniteVector v{coords_arg(ctx, f, "v")};
                 ctx.report->provenance = "<u,v> = sum conj(u_n) v_n";
                 return Entries{{"u", u.to_string()}, {"v", v.to_string()}, {"value", inner_product(u, v).to_string()}};
               }});

  a.push_back({"hilbert", "norm", "|v|^2 = <v,v>", {{"p"}, {"k", "2"}, {"gaussian", "", true}, {"v"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 const FiniteVector v{coords_arg(ctx, f, "v")};
                 const auto n2 = norm_squared(v);
                 const bool nonzero = std::any_of(v.coords.begin(), v.coords.end(), [](auto& c) { return !c.is_zero(); });
                 ctx.report->provenance = "|v|^2 = sum conj(v_n) v_n";
                 return Entries{{"v", v.to_string()}, {"value", n2.to_string()}, {"isotropic", nonzero && n2.is_zero()}};
               }});

  a.push_back({"hilbert", "isotropic", "first nonzero vector with |v|^2 = 0",
               {{"p"}, {"k", "2"}, {"gaussian", "", true}, {"dim", "2"}}, [](Context& ctx) -> std::optional<Entries> {
                 const auto f = field_from_pk(ctx);
                 const FiniteHilbertSpace h(f, ctx.small_uint("dim"));
                 ctx.report->provenance = "exhaustive scan of all vectors";
                 for (const auto& v : h.enumerate_vectors()) {
                   const bool nonzero =
                       std::any_of(v.coords.begin(), v.coords.end(), [](auto& c) { return !c.is_zero(); });
                   if (nonzero && norm_squared(v).is_zero()) return Entries{{"vector", v.to_string()}};
                 }
                 return std::nullopt;
               }});

  a.push_back({"regularize", "bernoulli", "exact B_n (B_1 = +1/2)", {{"n"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto n = ctx.integer("n");
                 if (n < 0 || n > kMaxBernoulliIndex) throw Error(ErrorKind::RangeLimit, "n must lie in [0, 64]");
                 ctx.report->provenance = "sum_{j<=n} C(n+1,j) B_j = n+1";
                 return Entries{{"value", bernoulli(static_cast<int>(n))}};
               }});

  a.push_back({"regularize", "zeta", "zeta(-s) = -B_{s+1}/(s+1)", {{"s"}},
               [](Context& ctx) -> std::optional<Entries> {
                 const auto s = ctx.integer("s");
                 if (s < 0 || s + 1 > kMaxBernoulliIndex) throw Error(ErrorKind::RangeLimit, "s must lie in [0, 63]");
                 ctx.report->provenance = "zeta(-s) = -B_{s+1}/(s+1)";
                 return Entries{{"value", zeta_negative(static_cast<int>(s))}};
               }});

  a.push_back({"regularize", "partial-sum", "1 + 2 + ... + N", {{"n"}}, [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "N(N+1)/2";
                 return Entries{{"value", BigInt(partial_sum_linear(ctx.integer("n")))}};
               }});

  a.push_back({"regularize", "mode-energy", "|omega_k| = c sqrt((m0 c/hbar)^2 + k^2)",
               {{"m0", "0"}, {"kx", "0"}, {"ky", "0"}, {"kz", "0"}}, [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "|omega_k| = c sqrt((m0 c/hbar)^2 + kx^2 + ky^2 + kz^2)";
                 return Entries{{"omega", q(mode_energy(ctx.number("m0"), ctx.number("kx"), ctx.number("ky"),
                                                        ctx.number("kz"), ctx.config.constants),
                                            "rad/s")}};
               }});

  a.push_back({"regularize", "vacuum-partial", "vacuum energy summed over the first N modes", {{"l"}, {"n"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "(sqrt(3) pi hbar c / L) N(N+1)/2";
                 return Entries{{"energy", q(vacuum_energy_partial(ctx.number("l"), ctx.integer("n"),
                                                                   ctx.config.constants),
                                             "J")}};
               }});

  a.push_back({"regularize", "vacuum-regularized", "vacuum energy with sum n -> -1/12", {{"l"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "(sqrt(3) pi hbar c / L) zeta(-1)";
                 return Entries{{"regularized_sum", zeta_negative(1)},
                                {"energy", q(vacuum_energy_regularized(ctx.number("l"), ctx.config.constants), "J")}};
               }});

  a.push_back({"regularize", "oscillator-energy", "(hbar omega / 2) P with omega = 2 pi c / L", {{"l"}, {"points"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "pi hbar c P / L";
                 return Entries{{"energy", q(oscillator_count_energy(ctx.number("l"), ctx.number("points"),
                                                                     ctx.config.constants),
                                             "J")}};
               }});

  a.push_back({"regularize", "point-bound", "P(L) < (sqrt(3)/2) K(K+1)", {{"k"}},
               [](Context& ctx) -> std::optional<Entries> {
                 ctx.report->provenance = "P(L) < (sqrt(3)/2) K(K+1)";
                 return Entries{{"bound", q(point_bound_from_cutoff(ctx.integer("k")), "1")}};
               }});

  auto cosmo = [](std::string action, std::string summary, std::vector<OptionSpec> extra, Handler h) {
    std::vector<OptionSpec> opts = kCosmoOptions;
    opts.insert(opts.end(), extra.begin(), extra.end());
    return ActionSpec{"cosmo", std::move(action), std::move(summary), std::move(opts), std::move(h)};
  };

  a.push_back(cosmo("point-count", "P = rho_vac L_U^4 / (pi hbar c)", {}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    ctx.report->provenance = "P = rho_vac L_U^4 / (pi hbar c)";
    return Entries{{"point_count", q(vacuum_point_count(p, ctx.config.constants), "1")}};
  }));

  a.push_back(cosmo("lambda", "Lambda = 8 pi G rho_vac / c^4", {}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    const auto& k = ctx.config.constants;
    ctx.report->provenance = "Lambda = 8 pi G rho_vac / c^4 = (8 pi^2 hbar G / c^3) P / L_U^4";
    return Entries{{"lambda", q(lambda_from_density(p, k), "m^-2")},
                   {"lambda_from_point_count", q(lambda_from_point_count(vacuum_point_count(p, k), p.L_U0, k), "m^-2")}};
  }));

  a.push_back(cosmo("diameter-at", "L_U(dt) = L_U0 (1 + H0 dt)", {{"dt"}}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    const double dt = ctx.number("dt");
    if (std::abs(p.H0 * dt) > kLinearValidityBound) ctx.report->warnings.push_back("|H0 dt| > 0.1: linearization");
    ctx.report->provenance = "L_U(dt) = L_U0 (1 + H0 dt)";
    return Entries{{"diameter", q(universe_diameter_at(p, dt), "m")}};
  }));

  a.push_back(cosmo("point-count-linear", "P(dt) = P0 (1 + 4 H0 dt)", {{"dt"}},
                    [](Context& ctx) -> std::optional<Entries> {
                      const auto p = params_from(ctx);
                      const auto est = point_count_at_linear(p, ctx.number("dt"), ctx.config.constants);
                      if (est.outside_validity) ctx.report->warnings.push_back("|H0 dt| > 0.1: linearization");
                      ctx.report->provenance = "P(dt) = (c^3 Lambda / (8 pi^2 hbar G)) L_U0^4 (1 + 4 H0 dt)";
                      return Entries{{"point_count", q(est.value, "1")}, {"outside_validity", est.outside_validity}};
                    }));

  a.push_back(cosmo("rate", "dP/dt = 4 H0 P0 (flat)", {}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    ctx.report->provenance = "dP/dt = 4 H0 P0";
    return Entries{{"rate", q(point_count_rate(p, ctx.config.constants), "s^-1")}};
  }));

  a.push_back(cosmo("growth", "P(dt)/P0 = exp(4 H0 dt); --gyr or --dt (s)", {{"dt"}, {"gyr"}},
                    [](Context& ctx) -> std::optional<Entries> {
                      const auto p = params_from(ctx);
                      double dt = 0.0;
                      if (ctx.has("gyr")) dt = ctx.number("gyr") * 1e9 * kSecondsPerJulianYear;
                      else dt = ctx.number("dt");
                      ctx.report->provenance = "P(dt)/P0 = exp(4 H0 dt), Julian years";
                      return Entries{
                          {"factor", q(point_count_growth_factor(p.H0, dt), "1")},
                          {"exponent_per_gyr", q(4.0 * p.H0 * 1e9 * kSecondsPerJulianYear, "Gyr^-1")}};
                    }));

  a.push_back(cosmo("density", "rho_P = P / L_U^3", {}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    const double rho = pointset_density(p, ctx.config.constants);
    ctx.report->provenance = "rho_P = P / L_U^3";
    return Entries{{"density", q(rho, "m^-3")}, {"volume_per_point", q(1.0 / rho, "m^3")}};
  }));

  a.push_back(cosmo("min-diameter", "cbrt(pi hbar c / (rho_vac L_U))", {}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    ctx.report->provenance = "diam_min = cbrt(pi hbar c / (rho_vac L_U))";
    return Entries{{"min_diameter", q(min_metric_diameter(p, ctx.config.constants), "m")}};
  }));

  a.push_back(cosmo("planck-density", "rho_vac = c^4 / (8 pi G l_P^2)", {{"l-planck"}},
                    [](Context& ctx) -> std::optional<Entries> {
                      auto p = params_from(ctx);
                      const auto k = constants_from(ctx);
                      const double rho = planck_vacuum_density(k);
                      p.rho_vac = rho;
                      ctx.report->provenance = "rho_vac = c^4 / (8 pi G l_P^2)";
                      return Entries{{"density", q(rho, "J/m^3")}, {"min_diameter", q(min_metric_diameter(p, k), "m")}};
                    }));

  a.push_back(cosmo("accel", "a''/a = (8 pi G / (3 c^2)) rho_vac", {}, [](Context& ctx) -> std::optional<Entries> {
    const auto p = params_from(ctx);
    ctx.report->provenance = "a''/a = -(8 pi G / (3 c^2)) p_vac, p_vac = -rho_vac";
    return Entries{{"accel_ratio", q(acceleration_constant_check(p, ctx.config.constants), "s^-2")}};
  }));

  a.push_back(cosmo(
      "evolve", "RK4 scale-factor run; --eos vacuum|dust|w=<number>",
      {{"eos", "vacuum"}, {"a0", "1"}, {"rho0"}, {"a-dot0"}, {"lambda", "0"}, {"t-end"}, {"step"}, {"samples", "11"}},
      [](Context& ctx) -> std::optional<Entries> {
        const auto p = params_from(ctx);
        const auto& k = ctx.config.constants;
        const std::string eos_name = ctx.raw("eos");
        EquationOfState eos;
        if (eos_name == "vacuum") eos = vacuum_eos(k);
        else if (eos_name == "dust") eos = dust_eos();
        else if (eos_name.rfind("w=", 0) == 0) {
          Context tmp;
          tmp.values["eos"] = eos_name.substr(2);
          eos = linear_eos(tmp.number("eos"), k);
        } else {
          throw UsageError("--eos must be vacuum, dust or w=<number>");
        }
        const double lambda = ctx.number("lambda");
        FluidState s0;
        s0.a = ctx.number("a0");
        s0.rho = ctx.has("rho0") ? ctx.number("rho0") : p.rho_vac / (k.c * k.c);
        s0.p = eos(s0.rho);
        if (ctx.has("a-dot0")) {
          s0.a_dot = ctx.number("a-dot0");
        } else {
          // Start on the constraint surface.
          const double h2 = 8.0 * std::numbers::pi * k.G / 3.0 * s0.rho +
                            (lambda - p.kappa) * k.c * k.c / (s0.a * s0.a);
          if (!(h2 >= 0.0)) throw Error(ErrorKind::InvalidInput, "no real expansion rate for these initial data");
          s0.a_dot = s0.a * std::sqrt(h2);
        }
        const auto samples_wanted = ctx.integer("samples");
        if (samples_wanted < 2) throw UsageError("--samples must be >= 2");
        const auto traj = evolve_scale_factor(s0, eos, lambda, p.kappa, ctx.number("t-end"), ctx.number("step"), k);
        double max_resid = 0.0;
        for (const auto& smp : traj.samples) {
          const double h = smp.state.a_dot / smp.state.a;
          if (h != 0.0) max_resid = std::max(max_resid, std::abs(smp.friedmann_residual) / (h * h));
        }
        StringTable rows{{"t[s]", "a", "a_dot[1/s]", "rho[kg/m^3]", "p[Pa]", "friedmann_residual[s^-2]"}};
        const std::size_t n = traj.samples.size();
        const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(samples_wanted), n);
        for (std::size_t i = 0; i < want; ++i) {
          const std::size_t idx = want == 1 ? 0 : i * (n - 1) / (want - 1);
          const auto& smp = traj.samples[idx];
          rows.push_back({format_number(smp.state.t), format_number(smp.state.a), format_number(smp.state.a_dot),
                          format_number(smp.state.rho), format_number(smp.state.p),
                          format_number(smp.friedmann_residual)});
        }
        const auto& last = traj.samples.back().state;
        ctx.report->provenance =
            "a''/a = -(4 pi G/3)(rho + 3p/c^2) + Lambda c^2/a^2, rho' = -3 (a'/a)(rho + p/c^2), RK4";
        return Entries{{"steps", BigInt(n - 1)},
                       {"a_end", q(last.a, "1")},
                       {"rho_end", q(last.rho, "kg/m^3")},
                       {"hubble_end", q(last.a_dot / last.a, "s^-1")},
                       {"halving_discrepancy", q(traj.halving_discrepancy, "1")},
                       {"max_relative_friedmann_residual", q(max_resid, "1")},
                       {"samples", rows}};
      }));

  return a;
}

const std::vector<ActionSpec>& actions() {
  static const std::vector<ActionSpec> table = build_actions();
  return table;
}

const std::vector<std::string> kSubcommands = {"field", "geometry", "hilbert", "regularize", "cosmo"};

// ------------------------------------------------------------- JSON codec

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json::object({{"integer", v.str()}});
}

BigInt json_to_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_object() && j.contains("integer")) return BigInt(j.at("integer").get<std::string>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::runtime_error("expected integer");
}

Json value_to_json(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return big_to_json(x);
        } else if constexpr (std::is_same_v<T, RationalNumber>) {
          auto part = [](const BigInt& b) -> Json {
            const Json j = big_to_json(b);
            return j.is_object() ? Json(b.str()) : j;
          };
          Json out = Json::object();
          out["num"] = part(x.numerator());
          out["den"] = part(x.denominator());
          return out;
        } else if constexpr (std::is_same_v<T, Quantity>) {
          Json out = Json::object();
          out["value"] = format_number(x.value);
          out["unit"] = x.unit;
          return out;
        } else {
          return Json(x);
        }
      },
      v);
}

ReportValue json_to_value(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return json_to_big(j);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) {
    if (j.contains("num") && j.contains("den")) return RationalNumber(json_to_big(j.at("num")), json_to_big(j.at("den")));
    if (j.contains("value") && j.contains("unit")) {
      return Quantity{std::stod(j.at("value").get<std::string>()), j.at("unit").get<std::string>()};
    }
    if (j.contains("integer")) return json_to_big(j);
    throw std::runtime_error("unrecognised report value object");
  }
  if (j.is_array()) {
    if (!j.empty() && j.front().is_array()) return j.get<StringTable>();
    return j.get<StringList>();
  }
  throw std::runtime_error("unrecognised report value");
}

std::string value_to_text(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "null";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return to_string_big(x);
        } else if constexpr (std::is_same_v<T, RationalNumber>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, Quantity>) {
          return format_number(x.value) + " " + x.unit;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, StringList>) {
          std::string out = "[";
          for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + x[i];
          return out + "]";
        } else {
          std::vector<std::size_t> widths;
          for (const auto& row : x) {
            if (widths.size() < row.size()) widths.resize(row.size(), 0);
            for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
          }
          std::string out;
          for (const auto& row : x) {
            out += "\n   ";
            for (std::size_t c = 0; c < row.size(); ++c) {
              out += " " + row[c] + std::string(widths[c] - row[c].size(), ' ');
            }
          }
          return out;
        }
      },
      v);
}

std::string join_usage_options(const ActionSpec& spec) {
  std::string out;
  for (const auto& o : spec.options) {
    out += " [--" + o.name;
    if (!o.is_flag) out += o.default_value.empty() ? " <v>" : " <" + o.default_value + ">";
    out += "]";
  }
  return out;
}

}  // namespace

bool operator==(const Quantity& a, const Quantity& b) {
  return a.unit == b.unit && format_number(a.value) == format_number(b.value);
}

std::string RunReport::status() const {
  if (exit_code != 0) return "error";
  return result ? "ok" : "none";
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string usage() {
  std::ostringstream os;
  os << "usage: fgeo <subcommand> <action> [--flags] [--format text|json] [--config FILE]\n";
  std::string last;
  for (const auto& a : actions()) {
    if (a.subcommand != last) {
      os << "\n" << a.subcommand << ":\n";
      last = a.subcommand;
    }
    os << "  " << a.action << join_usage_options(a) << "\n      " << a.summary << "\n";
  }
  return os.str();
}

RunReport dispatch(const std::vector<std::string>& argv, OutputFormat* format) {
  RunReport report;
  if (format) *format = OutputFormat::text;
  try {
    // Global options may also precede the subcommand; move them to the end.
    std::vector<std::string> args;
    std::vector<std::string> globals;
    std::size_t lead = 0;
    while (lead < argv.size() && argv[lead].rfind("--", 0) == 0) {
      const std::string& tok = argv[lead];
      const bool is_global = tok == "--format" || tok == "--config";
      if (!is_global && tok.rfind("--format=", 0) != 0 && tok.rfind("--config=", 0) != 0) {
        throw UsageError("unexpected option '" + tok + "' before the subcommand");
      }
      globals.push_back(tok);
      if (is_global) {
        if (lead + 1 >= argv.size()) throw UsageError("option " + tok + " needs a value");
        globals.push_back(argv[++lead]);
      }
      ++lead;
    }
    args.assign(argv.begin() + static_cast<std::ptrdiff_t>(lead), argv.end());
    args.insert(args.end(), globals.begin(), globals.end());
    if (args.size() < 2) throw UsageError("expected <subcommand> <action>");
    const std::string& sub = args[0];
    const std::string& act = args[1];
    report.command = sub + " " + act;
    if (std::find(kSubcommands.begin(), kSubcommands.end(), sub) == kSubcommands.end()) {
      throw UsageError("unknown subcommand '" + sub + "'");
    }
    const auto& table = actions();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const ActionSpec& a) { return a.subcommand == sub && a.action == act; });
    if (it == table.end()) throw UsageError("unknown action '" + act + "' for " + sub);

    Context ctx;
    ctx.report = &report;
    for (const auto& o : it->options) ctx.values[o.name] = o.default_value;
    std::string config_path;
    for (std::size_t i = 2; i < args.size(); ++i) {
      std::string tok = args[i];
      if (tok.rfind("--", 0) != 0 || tok.size() == 2) throw UsageError("unexpected argument '" + tok + "'");
      tok = tok.substr(2);
      std::optional<std::string> inline_value;
      if (const auto eq = tok.find('='); eq != std::string::npos) {
        inline_value = tok.substr(eq + 1);
        tok = tok.substr(0, eq);
      }
      auto next_value = [&]() -> std::string {
        if (inline_value) return *inline_value;
        if (i + 1 >= args.size()) throw UsageError("option --" + tok + " needs a value");
        return args[++i];
      };
      if (tok == "format") {
        const auto v = next_value();
        if (v != "json" && v != "text") throw UsageError("--format must be json or text");
        if (format) *format = v == "json" ? OutputFormat::json : OutputFormat::text;
        continue;
      }
      if (tok == "config") {
        config_path = next_value();
        continue;
      }
      const auto opt = std::find_if(it->options.begin(), it->options.end(),
                                    [&](const OptionSpec& o) { return o.name == tok; });
      if (opt == it->options.end()) throw UsageError("unknown option --" + tok + " for " + report.command);
      if (opt->is_flag) {
        if (inline_value && *inline_value != "true" && *inline_value != "false") {
          throw UsageError("flag --" + tok + " takes no value");
        }
        ctx.values[tok] = inline_value.value_or("true");
      } else {
        ctx.values[tok] = next_value();
      }
    }
    for (const auto& o : it->options) {
      const auto& v = ctx.values[o.name];
      if (!v.empty()) report.inputs.emplace_back(o.name, v);
    }
    if (!config_path.empty()) {
      report.inputs.emplace_back("config", config_path);
      ctx.config = load_config(config_path);
    }
    report.result = it->handler(ctx);
    report.exit_code = 0;
  } catch (const UsageError& e) {
    report.result.reset();
    report.error = "UsageError";
    report.message = e.what();
    report.exit_code = 2;
  } catch (const Error& e) {
    report.result.reset();
    report.error = std::string(to_string(e.kind()));
    report.message = e.what();
    report.witness = e.witness();
    report.exit_code = 1;
  } catch (const std::exception& e) {
    report.result.reset();
    report.error = "InternalError";
    report.message = e.what();
    report.exit_code = 1;
  }
  return report;
}

std::string render_json(const RunReport& report) {
  Json j = Json::object();
  j["command"] = report.command;
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  if (report.exit_code != 0) {
    j["error"] = report.error;
    j["message"] = report.message;
    j["witness"] = report.witness.empty() ? Json(nullptr) : Json(report.witness);
  } else if (report.result) {
    Json result = Json::object();
    for (const auto& [k, v] : *report.result) result[k] = value_to_json(v);
    j["result"] = result;
  } else {
    j["result"] = nullptr;
  }
  j["status"] = report.status();
  j["provenance"] = report.provenance;
  j["warnings"] = report.warnings;
  j["exit_code"] = report.exit_code;
  return j.dump(2) + "\n";
}

RunReport parse_json_report(const std::string& text) {
  const Json j = Json::parse(text);
  RunReport r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  r.exit_code = j.at("exit_code").get<int>();
  if (j.contains("error")) {
    r.error = j.at("error").get<std::string>();
    r.message = j.at("message").get<std::string>();
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
  }
  if (j.contains("result") && !j.at("result").is_null()) {
    Entries entries;
    for (const auto& [k, v] : j.at("result").items()) entries.emplace_back(k, json_to_value(v));
    r.result = std::move(entries);
  }
  r.provenance = j.at("provenance").get<std::string>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  os << "command: " << report.command << "\n";
  if (!report.inputs.empty()) {
    os << "inputs:\n";
    for (const auto& [k, v] : report.inputs) os << "  " << k << " = " << v << "\n";
  }
  if (report.exit_code != 0) {
    os << "error: " << report.error << ": " << report.message << "\n";
    if (!report.witness.empty()) os << "witness: " << report.witness << "\n";
  } else if (report.result) {
    os << "result:\n";
    for (const auto& [k, v] : *report.result) os << "  " << k << ": " << value_to_text(v) << "\n";
  } else {
    os << "result: none found\n";
  }
  if (!report.provenance.empty()) os << "formula: " << report.provenance << "\n";
  os << "status: " << report.status() << "\n";
  return os.str();
}

}  // namespace fgeo::cli
