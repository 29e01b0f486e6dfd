#include "gammalab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gammalab/errors.hpp"

namespace gammalab::io {

namespace {

const Int kExactDouble = Int(1) << 53;

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void expect_keys(const Json& j, const std::set<std::string>& allowed, const std::set<std::string>& required,
                 const std::string& where) {
  require(j.is_object(), where + ": expected an object");
  for (const auto& [k, v] : j.items()) require(allowed.count(k) > 0, where + ": unexpected key '" + k + "'");
  for (const auto& k : required) require(j.contains(k), where + ": missing key '" + k + "'");
}

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t m = 1;
  while (k--) m *= n;
  return m;
}

struct Header {
  Group b, a;
  FiniteGroup fb;
};

Header read_header(const Json& j, const std::string& kind, const std::set<std::string>& keys) {
  std::set<std::string> allowed = keys, required = keys;
  allowed.insert({"kind", "B", "A"});
  required.insert({"kind", "B", "A"});
  expect_keys(j, allowed, required, kind);
  require(bundle_kind(j) == kind, "expected a '" + kind + "' bundle, got '" + bundle_kind(j) + "'");
  Group b = group_from_json(j["B"]), a = group_from_json(j["A"]);
  require(b.is_finite(), kind + ": B must be finite");
  require(a.is_finite(), kind + ": A must be finite");
  return {b, a, FiniteGroup(b)};
}

Json header(const std::string& kind, const Group& b, const Group& a) {
  return Json{{"kind", kind}, {"B", group_to_json(b)}, {"A", group_to_json(a)}};
}

Json args_to_json(const FiniteGroup& fb, const std::vector<std::size_t>& args) {
  Json out = Json::array();
  for (auto i : args) out.push_back(element_to_json(fb.group(), fb.element(i)));
  return out;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (abs(v) < kExactDouble) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    require(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos,
            "not a decimal integer: '" + s + "'");
    return Int(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

Json group_to_json(const Group& g) {
  Json rels = Json::array();
  const IntMatrix& r = g.relations();
  for (std::size_t c = 0; c < r.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t i = 0; i < r.rows(); ++i) col.push_back(int_to_json(r(i, c)));
    rels.push_back(col);
  }
  return Json{{"generators", g.generators()}, {"relations", rels}};
}

Group group_from_json(const Json& j) {
  if (j.is_string()) return parse_group(j.get<std::string>());
  expect_keys(j, {"generators", "relations"}, {"generators", "relations"}, "group");
  require(j["generators"].is_number_unsigned(), "group: generators must be a non-negative integer");
  const auto g = j["generators"].get<std::size_t>();
  require(j["relations"].is_array(), "group: relations must be a list of relators");
  const auto& rels = j["relations"];
  IntMatrix m(g, rels.size());
  for (std::size_t c = 0; c < rels.size(); ++c) {
    require(rels[c].is_array() && rels[c].size() == g,
            "group: relator " + std::to_string(c) + " must have one entry per generator");
    for (std::size_t i = 0; i < g; ++i) m(i, c) = int_from_json(rels[c][i]);
  }
  return Group(g, m);
}

Group parse_group(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  require(!s.empty(), "empty group description");
  if (s[0] == '{') return group_from_json(parse(s));
  if (s == "0") return Group::trivial();
  std::vector<Int> orders;  // 0 for a copy of Z
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    auto digits = [&](const std::string& d) {
      require(!d.empty() && d.find_first_not_of("0123456789") == std::string::npos, "bad group term '" + term + "'");
      return Int(d);
    };
    if (term == "Z") {
      orders.emplace_back(0);
    } else if (term.rfind("Z^", 0) == 0) {
      const Int k = digits(term.substr(2));
      for (Int i = 0; i < k; ++i) orders.emplace_back(0);
    } else if (term.rfind("Z/", 0) == 0) {
      const Int m = digits(term.substr(2));
      require(m > 0, "Z/0 is written Z");
      orders.push_back(m);
    } else {
      throw InputError("bad group term '" + term + "'");
    }
  }
  std::size_t torsion = 0;
  for (const auto& o : orders) torsion += (o != 0);
  IntMatrix rel(orders.size(), torsion);
  for (std::size_t i = 0, c = 0; i < orders.size(); ++i)
    if (orders[i] != 0) rel(i, c++) = orders[i];
  return Group(orders.size(), rel);
}

Json element_to_json(const Group& g, const IntVector& x) {
  const IntVector r = g.reduce(x);
  if (g.generators() == 1) return int_to_json(r[0]);
  Json out = Json::array();
  for (const auto& v : r) out.push_back(int_to_json(v));
  return out;
}

IntVector element_from_json(const Group& g, const Json& j) {
  IntVector x(g.generators());
  if (g.generators() == 1 && !j.is_array()) {
    x[0] = int_from_json(j);
  } else {
    require(j.is_array() && j.size() == g.generators(),
            "element " + j.dump() + " must have " + std::to_string(g.generators()) + " coordinates");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = int_from_json(j[i]);
  }
  return g.reduce(x);
}

Json table_to_json(const FiniteGroup& fb, const Group& a, const std::vector<IntVector>& t, std::size_t arity) {
  const std::size_t n = fb.size();
  require(t.size() == power(n, arity), "table size does not match |B|^" + std::to_string(arity));
  Json out = Json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (a.is_zero(t[k])) continue;
    std::vector<std::size_t> args(arity);
    for (std::size_t i = arity, r = k; i-- > 0; r /= n) args[i] = r % n;
    Json e = args_to_json(fb, args);
    e.push_back(element_to_json(a, t[k]));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<IntVector> table_from_json(const FiniteGroup& fb, const Group& a, const Json& j, std::size_t arity) {
  const std::size_t n = fb.size();
  std::vector<IntVector> t(power(n, arity), a.zero());
  require(j.is_array(), "table must be a list of [arguments..., value] entries");
  std::set<std::size_t> seen;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == arity + 1,
            "table entry " + e.dump() + " must be [" + std::to_string(arity) + " arguments, value]");
    std::size_t k = 0;
    for (std::size_t i = 0; i < arity; ++i) k = k * n + fb.index_of_any(element_from_json(fb.group(), e[i]));
    require(seen.insert(k).second, "table entry " + e.dump() + " given twice");
    t[k] = element_from_json(a, e[arity]);
  }
  return t;
}

std::string canonical(const Json& j) { return j.dump(); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string bundle_kind(const Json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(), "bundle has no kind tag");
  return j["kind"].get<std::string>();
}

Json to_json(const AbelianCocyclePair& p) {
  FiniteGroup fb(p.b);
  Json j = header("abelian_cocycle_pair", p.b, p.a);
  j["h"] = table_to_json(fb, p.a, p.h, 3);
  j["c"] = table_to_json(fb, p.a, p.c, 2);
  return j;
}

AbelianCocyclePair cocycle_pair_from_json(const Json& j) {
  auto h = read_header(j, "abelian_cocycle_pair", {"h", "c"});
  AbelianCocyclePair p = AbelianCocyclePair::zero(h.b, h.a);
  p.h = table_from_json(h.fb, h.a, j["h"], 3);
  p.c = table_from_json(h.fb, h.a, j["c"], 2);
  return p;
}

Json to_json(const QuadraticMap& q) {
  FiniteGroup fb(q.b);
  Json j = header("quadratic", q.b, q.a);
  j["q"] = table_to_json(fb, q.a, q.q, 1);
  return j;
}

QuadraticMap quadratic_from_json(const Json& j) {
  auto h = read_header(j, "quadratic", {"q"});
  return {h.b, h.a, table_from_json(h.fb, h.a, j["q"], 1)};
}

Json to_json(const BiextensionData& d) {
  FiniteGroup fb(d.b);
  Json j = header("biextension", d.b, d.a);
  j["f"] = table_to_json(fb, d.a, d.f, 3);
  j["g"] = table_to_json(fb, d.a, d.g, 3);
  j["weak"] = d.weak;
  return j;
}

BiextensionData biextension_from_json(const Json& j) {
  auto h = read_header(j, "biextension", {"f", "g", "weak"});
  require(j["weak"].is_boolean(), "biextension: weak must be true or false");
  BiextensionData d = BiextensionData::zero(h.b, h.a);
  d.f = table_from_json(h.fb, h.a, j["f"], 3);
  d.g = table_from_json(h.fb, h.a, j["g"], 3);
  d.weak = j["weak"].get<bool>();
  return d;
}

Json to_json(const SigmaData& d) {
  FiniteGroup fb(d.cube.b);
  Json j = header("sigma", d.cube.b, d.cube.a);
  j["f"] = table_to_json(fb, d.cube.a, d.cube.f, 3);
  j["lambda"] = table_to_json(fb, d.cube.a, d.lambda, 1);
  return j;
}

SigmaData sigma_from_json(const Json& j) {
  auto h = read_header(j, "sigma", {"f", "lambda"});
  return {symmetric_biextension(h.b, h.a, table_from_json(h.fb, h.a, j["f"], 3)),
          table_from_json(h.fb, h.a, j["lambda"], 1)};
}

Json to_json(const Gamma3Pair& p) {
  FiniteGroup fb(p.b);
  const std::size_t n = fb.size();
  Json j = header("gamma3_pair", p.b, p.a);
  Json family = Json::array();
  for (std::size_t y = 0; y < n; ++y) {
    const SigmaData s = p.sigma_member(y);
    family.push_back(Json{{"y", element_to_json(p.b, fb.element(y))},
                          {"theta", table_to_json(fb, p.a, s.cube.f, 3)},
                          {"lambda", table_to_json(fb, p.a, s.lambda, 1)}});
  }
  j["sigma_family"] = family;
  j["ext2"] = table_to_json(fb, p.a, p.ext2, 3);
  j["alpha"] = table_to_json(fb, p.a, p.alpha, 2);
  j["beta"] = table_to_json(fb, p.a, p.beta, 1);
  return j;
}

Gamma3Pair gamma3_from_json(const Json& j) {
  auto h = read_header(j, "gamma3_pair", {"sigma_family", "ext2", "alpha", "beta"});
  Gamma3Pair p = Gamma3Pair::zero(h.b, h.a);
  const std::size_t n = p.n;
  require(j["sigma_family"].is_array(), "gamma3_pair: sigma_family must be a list");
  std::set<std::size_t> seen;
  for (const auto& m : j["sigma_family"]) {
    expect_keys(m, {"y", "theta", "lambda"}, {"y", "theta", "lambda"}, "sigma_family member");
    const std::size_t y = h.fb.index_of_any(element_from_json(h.b, m["y"]));
    require(seen.insert(y).second, "gamma3_pair: sigma_family lists y = " + m["y"].dump() + " twice");
    const auto th = table_from_json(h.fb, h.a, m["theta"], 3);
    const auto la = table_from_json(h.fb, h.a, m["lambda"], 1);
    std::copy(th.begin(), th.end(), p.theta.begin() + static_cast<long>(y * n * n * n));
    std::copy(la.begin(), la.end(), p.lambda.begin() + static_cast<long>(y * n));
  }
  p.ext2 = table_from_json(h.fb, h.a, j["ext2"], 3);
  p.alpha = table_from_json(h.fb, h.a, j["alpha"], 2);
  p.beta = table_from_json(h.fb, h.a, j["beta"], 1);
  return p;
}

Json section_to_json(const Group& b, const Group& a, const std::vector<IntVector>& s) {
  FiniteGroup fb(b);
  Json j = header("section", b, a);
  j["s"] = table_to_json(fb, a, s, 2);
  return j;
}

std::vector<IntVector> section_from_json(const Json& j, const Group& b, const Group& a) {
  auto h = read_header(j, "section", {"s"});
  require(h.b.isomorphic(b) && h.a.isomorphic(a) && h.b.relations() == b.relations() &&
              h.a.relations() == a.relations(),
          "section: B and A must match the pair");
  return table_from_json(h.fb, h.a, j["s"], 2);
}

Json convention_to_json(const Convention& c) {
  return Json{{"sigma", sigma_convention_name(c.sigma)}, {"psi_sign", c.psi_sign}, {"gamma_sign", c.gamma_sign}};
}

Convention convention_from_json(const Json& j) {
  expect_keys(j, {"sigma", "psi_sign", "gamma_sign", "comment"}, {"sigma", "psi_sign", "gamma_sign"}, "convention");
  Convention c;
  require(j["sigma"].is_string(), "convention: sigma must be a string");
  c.sigma = parse_sigma_convention(j["sigma"].get<std::string>());
  for (auto [key, slot] : {std::pair{"psi_sign", &c.psi_sign}, std::pair{"gamma_sign", &c.gamma_sign}}) {
    require(j[key].is_number_integer() && (j[key] == 1 || j[key] == -1), std::string("convention: ") + key + " must be 1 or -1");
    *slot = j[key].get<int>();
  }
  return c;
}

Json to_json(const AxiomReport& r, const FiniteGroup& fb, const Group& a) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"axiom", x.axiom}, {"args", args_to_json(fb, x.args)}, {"defect", element_to_json(a, x.defect)}});
  return Json{{"pass", r.pass()}, {"counts", r.counts}, {"violations", v}};
}

Json to_json(const DiagramReport& r, const FiniteGroup& fb, const Group& a) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"args", args_to_json(fb, x.args)}, {"lhs", element_to_json(a, x.lhs)}, {"rhs", element_to_json(a, x.rhs)}});
  return Json{{"diagram", r.diagram}, {"pass", r.pass()}, {"failures", r.failures}, {"violations", v}};
}

Json to_json(const PairReport& r, const FiniteGroup& fb, const Group& a) {
  Json d = Json::array();
  for (const auto& x : r.diagrams) d.push_back(to_json(x, fb, a));
  return Json{{"pass", r.pass()}, {"invariants", to_json(r.invariants, fb, a)}, {"diagrams", d}};
}

Json group_summary(const Group& g) {
  Json torsion = Json::array();
  for (const auto& f : g.invariant_factors()) torsion.push_back(int_to_json(f));
  Json j{{"describe", g.describe()}, {"free_rank", g.free_rank()}, {"torsion", torsion},
         {"group", group_to_json(Group::from_invariants(g.free_rank(), g.invariant_factors()))}};
  j["order"] = g.is_finite() ? int_to_json(g.order()) : Json(nullptr);
  return j;
}

}  // namespace gammalab::io
