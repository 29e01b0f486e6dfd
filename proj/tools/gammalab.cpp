// Command-line front end. Every command prints one JSON document on stdout.
// Exit codes: 0 success, 1 verification failure, 2 input or schema error,
// 3 size guard.

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "gammalab/config.hpp"
#include "gammalab/derived.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/io.hpp"
#include "gammalab/plain_check.hpp"
#include "gammalab/polyfunctors.hpp"

using namespace gammalab;
using io::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kGuard = 3 };

int emit(const Json& j, bool pass = true) {
  std::cout << io::canonical(j) << '\n';
  return pass ? kOk : kFailed;
}

Group group_arg(const std::string& text, const Group* same = nullptr) {
  if (text == "same") {
    if (!same) throw InputError("'same' needs an earlier group");
    return *same;
  }
  return io::parse_group(text);
}

Json tables_of(const FiniteGroup& fb, const Group& a, const std::vector<IntVector>& t, std::size_t arity) {
  return io::table_to_json(fb, a, t, arity);
}

Json sequence_json(const std::vector<std::pair<std::string, Group>>& terms, const std::vector<ExactnessNode>& nodes) {
  Json t = Json::array(), d = Json::array();
  for (const auto& [name, g] : terms) t.push_back(Json{{"name", name}, {"group", g.describe()}});
  for (const auto& nd : nodes)
    d.push_back(Json{{"where", nd.where}, {"exact", nd.exact}, {"defect", nd.defect.describe()}});
  return Json{{"terms", t}, {"nodes", d}};
}

// ---------------------------------------------------------------------------

struct FuzzCase {
  Group b, a;
};

Json fuzz(std::uint64_t seed, std::size_t iterations, const Convention& conv) {
  const std::vector<FuzzCase> cases{{Group::cyclic(Int(2)), Group::cyclic(Int(2))},
                                    {Group::cyclic(Int(3)), Group::cyclic(Int(3))},
                                    {Group::cyclic(Int(2)), Group::cyclic(Int(4))}};
  std::mt19937_64 rng(seed);
  std::size_t generated = 0, verified = 0, round_trips = 0, gauge_trips = 0, mutants = 0, rejected = 0,
              accepted_valid = 0, false_accepts = 0, failures = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto& c = cases[i % cases.size()];
    FiniteGroup fa(c.a);
    Gamma3Pair p = random_pair(c.b, c.a, rng());
    ++generated;
    if (verify_pair(p, conv).pass()) ++verified; else ++failures;

    const std::string text = io::canonical(io::to_json(p));
    if (io::canonical(io::to_json(io::gamma3_from_json(io::parse(text)))) == text) ++round_trips; else ++failures;

    const std::size_t n = p.n;
    std::vector<IntVector> te(n * n, c.a.zero()), tl(n, c.a.zero()), nte(n * n), ntl(n);
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) te[x * n + y] = fa.element(rng() % fa.size());
      tl[x] = fa.element(rng() % fa.size());
    }
    for (std::size_t k = 0; k < n * n; ++k) nte[k] = c.a.neg(te[k]);
    for (std::size_t k = 0; k < n; ++k) ntl[k] = c.a.neg(tl[k]);
    const Gamma3Pair q = gauge(p, te, tl);
    if (verify_pair(q, conv).pass() && gauge(q, nte, ntl) == p) ++gauge_trips; else ++failures;

    for (int k = 0; k < 4; ++k) {
      Gamma3Pair m = p;
      auto slots = m.entries();
      IntVector* slot = slots[rng() % slots.size()];
      *slot = c.a.add(*slot, fa.element(1 + rng() % (fa.size() - 1)));
      ++mutants;
      if (!verify_pair(m, conv).pass()) {
        ++rejected;
      } else if (plain_pair_valid(m, conv)) {
        ++accepted_valid;
      } else {
        ++false_accepts;
      }
    }
  }
  return Json{{"seed", seed},           {"iterations", iterations},       {"generated", generated},
              {"verified", verified},   {"round_trips", round_trips},     {"gauge_round_trips", gauge_trips},
              {"mutants", mutants},     {"rejected", rejected},           {"accepted_valid", accepted_valid},
              {"false_accepts", false_accepts}, {"failures", failures}};
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Computations with K(B,2), braided categorical groups and Γ₃-torsor pairs"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  std::string convention_file;
  app.add_option("--threads", threads, "worker threads (default: available cores)");
  app.add_option("--convention", convention_file, "sign convention file (default: the values in conventions/default.json)");

  std::string gB, gA, fname, bundle, bundle2;
  int n = 0;
  std::size_t deg = 0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  bool oracle = false, check = false;

  auto need_ba = [&](CLI::App* c) {
    c->add_option("--B", gB, "group B (JSON or shorthand such as Z/2+Z/4)")->required();
    c->add_option("--A", gA, "group A, or 'same'")->required();
  };

  auto* group = app.add_subcommand("group", "abelian group operations")->require_subcommand(1);
  auto* g_canon = group->add_subcommand("canon", "canonical form");
  g_canon->add_option("--G", gB, "group")->required();
  auto* g_hom = group->add_subcommand("hom", "Hom(B, A)");
  auto* g_ext = group->add_subcommand("ext", "Ext¹(B, A)");
  auto* g_tor = group->add_subcommand("tor", "Tor₁(B, A)");
  for (auto* c : {g_hom, g_ext, g_tor}) need_ba(c);

  auto* functor = app.add_subcommand("functor", "polynomial functors")->require_subcommand(1);
  auto* f_apply = functor->add_subcommand("apply", "F(B)");
  f_apply->add_option("--F", fname, "Tensor2, Lambda2, Sym2, Gamma2 or Gamma3")->required();
  f_apply->add_option("--B", gB)->required();
  auto* f_seq = functor->add_subcommand("sequences", "exactness of the divided-power sequences");
  f_seq->add_option("--B", gB)->required();

  auto* derived = app.add_subcommand("derived", "derived functors")->require_subcommand(1);
  auto* d_l = derived->add_subcommand("l", "L_p F(B)");
  d_l->add_option("--F", fname)->required();
  d_l->add_option("--B", gB)->required();
  d_l->add_option("--p", deg)->required();
  auto* d_h = derived->add_subcommand("hyperext", "Ext^i(LF(B), A)");
  d_h->add_option("--F", fname)->required();
  need_ba(d_h);
  d_h->add_option("--i", deg)->required();
  auto* d_les = derived->add_subcommand("les", "long exact sequence of Γ₂ → ⊗² → Λ²");
  d_les->add_option("--B", gB)->required();

  auto* emh = app.add_subcommand("emh", "H_n(K(B,2))");
  emh->add_option("--B", gB)->required();
  emh->add_option("--n", n)->required();
  emh->add_flag("--oracle", oracle, "also run the bar-construction oracle");

  auto* classify = app.add_subcommand("classify", "H^n(K(B,2), A) and its pieces");
  need_ba(classify);
  classify->add_option("--n", n)->required();
  classify->add_flag("--check", check, "compare the total with the pieces");

  auto* quadratic = app.add_subcommand("quadratic", "quadratic maps")->require_subcommand(1);
  auto* q_enum = quadratic->add_subcommand("enum", "all quadratic maps B → A");
  need_ba(q_enum);
  auto* q_check = quadratic->add_subcommand("check", "check a quadratic bundle");
  q_check->add_option("bundle", bundle)->required();

  auto* braided = app.add_subcommand("braided", "abelian 3-cocycles")->require_subcommand(1);
  auto* b_verify = braided->add_subcommand("verify", "pentagon and hexagons");
  b_verify->add_option("bundle", bundle)->required();
  auto* b_classify = braided->add_subcommand("classify", "classes of cocycle pairs");
  need_ba(b_classify);
  auto* b_tau = braided->add_subcommand("tau", "the quadratic map of a pair");
  b_tau->add_option("bundle", bundle)->required();

  auto* biext = app.add_subcommand("biext", "biextensions")->require_subcommand(1);
  auto* x_verify = biext->add_subcommand("verify", "biextension axioms (or the torsor of a cocycle pair)");
  x_verify->add_option("bundle", bundle)->required();
  auto* x_comm = biext->add_subcommand("commutator", "commutators of a weak biextension");
  x_comm->add_option("bundle", bundle)->required();

  auto* sigma = app.add_subcommand("sigma", "Σ-structures")->require_subcommand(1);
  auto* s_verify = sigma->add_subcommand("verify", "check a sigma bundle");
  s_verify->add_option("bundle", bundle)->required();
  auto* s_classify = sigma->add_subcommand("classify", "count Σ-structures up to re-trivialization");
  need_ba(s_classify);

  auto* gamma3 = app.add_subcommand("gamma3", "Γ₃-torsor pairs")->require_subcommand(1);
  auto* t_verify = gamma3->add_subcommand("verify", "all diagrams of a pair");
  t_verify->add_option("pair", bundle)->required();
  auto* t_prop = gamma3->add_subcommand("prop42", "group law on L from a compatible section");
  t_prop->add_option("pair", bundle)->required();
  t_prop->add_option("section", bundle2)->required();
  auto* t_random = gamma3->add_subcommand("random", "seeded valid pair");
  need_ba(t_random);
  t_random->add_option("--seed", seed);
  auto* t_count = gamma3->add_subcommand("classify-count", "pairs up to gauge");
  need_ba(t_count);

  auto* fz = app.add_subcommand("fuzz", "random pairs, mutations and gauge round trips");
  fz->add_option("--seed", seed);
  fz->add_option("--iterations", iterations);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (threads) set_thread_count(threads);
  const Convention conv = convention_file.empty() ? Convention{} : io::convention_from_json(io::read_file(convention_file));
  auto both = [&] {
    Group b = group_arg(gB);
    return std::pair<Group, Group>(b, group_arg(gA, &b));
  };

  if (*g_canon) return emit(io::group_summary(group_arg(gB)));
  if (*g_hom) {
    auto [b, a] = both();
    return emit(Json{{"hom", io::group_summary(hom_group(b, a).group)}});
  }
  if (*g_ext) {
    auto [b, a] = both();
    return emit(Json{{"ext1", io::group_summary(ext1(b, a))}});
  }
  if (*g_tor) {
    auto [b, a] = both();
    return emit(Json{{"tor1", io::group_summary(tor1(b, a))}});
  }
  if (*f_apply) {
    const FunctorId f = parse_functor(fname);
    auto v = apply(f, group_arg(gB));
    return emit(Json{{"functor", functor_name(f)}, {"value", io::group_summary(v.group)}, {"tags", v.tags}});
  }
  if (*f_seq) {
    Json out = Json::array();
    bool all = true;
    for (const auto& s : check_sequences(group_arg(gB))) {
      Json j = sequence_json(s.terms, s.nodes);
      j["name"] = s.name;
      j["exact"] = s.exact();
      all = all && s.exact();
      out.push_back(j);
    }
    return emit(Json{{"sequences", out}, {"exact", all}}, all);
  }
  if (*d_l) {
    const FunctorId f = parse_functor(fname);
    return emit(Json{{"functor", functor_name(f)}, {"p", deg}, {"value", io::group_summary(l_derived(f, group_arg(gB), deg))}});
  }
  if (*d_h) {
    const FunctorId f = parse_functor(fname);
    auto [b, a] = both();
    return emit(Json{{"functor", functor_name(f)}, {"i", deg}, {"value", io::group_summary(hyper_ext(f, b, a, deg))}});
  }
  if (*d_les) {
    auto r = gamlam_les(group_arg(gB));
    Json j = sequence_json(r.terms, r.nodes);
    j["exact"] = r.exact();
    j["tensor_matches_tor"] = r.tensor_matches_tor;
    j["order_balance"] = r.order_balance ? Json(*r.order_balance) : Json(nullptr);
    return emit(j, r.exact() && r.tensor_matches_tor);
  }
  if (*emh) {
    const Group b = group_arg(gB);
    auto h = homology_K2(b, n);
    Json pieces = Json::array();
    for (const auto& p : h.pieces) pieces.push_back(Json{{"p", p.p}, {"q", p.q}, {"group", io::group_summary(p.group)}});
    Json j{{"n", n}, {"pieces", pieces}, {"assembled", io::group_summary(h.assembled)}};
    bool pass = true;
    if (oracle) {
      const Group o = bar_homology_oracle(b, n);
      j["oracle"] = io::group_summary(o);
      j["oracle_agrees"] = pass = o.isomorphic(h.assembled);
    }
    return emit(j, pass);
  }
  if (*classify) {
    auto [b, a] = both();
    auto r = cohomology_K2(b, a, n);
    Json pieces = Json::array();
    for (const auto& p : r.pieces)
      pieces.push_back(Json{{"label", p.label}, {"ext_degree", p.ext_degree}, {"q", p.q},
                            {"group", io::group_summary(p.group)}, {"sheaf_only", p.sheaf_only}});
    Json j{{"n", n}, {"total", io::group_summary(r.total)}, {"pieces", pieces}};
    bool pass = true;
    if (check) {
      auto c = consistency_check(b, a, n);
      j["consistency"] = Json{{"pass", c.pass}, {"total", c.total}, {"pieces_sum", c.pieces_sum}, {"detail", c.detail}};
      pass = c.pass;
    }
    return emit(j, pass);
  }
  if (*q_enum) {
    auto [b, a] = both();
    auto maps = enumerate_quadratic(b, a);
    Json list = Json::array();
    FiniteGroup fb(b);
    for (const auto& q : maps) list.push_back(tables_of(fb, a, q.q, 1));
    return emit(Json{{"count", maps.size()}, {"maps", list}});
  }
  if (*q_check) {
    auto q = io::quadratic_from_json(io::read_file(bundle));
    auto r = is_quadratic(q);
    return emit(io::to_json(r, FiniteGroup(q.b), q.a), r.pass());
  }
  if (*b_verify) {
    auto p = io::cocycle_pair_from_json(io::read_file(bundle));
    auto r = verify_cocycle(p);
    return emit(io::to_json(r, FiniteGroup(p.b), p.a), r.pass());
  }
  if (*b_classify) {
    auto [b, a] = both();
    auto cl = classify_cocycles(b, a);
    FiniteGroup fb(b);
    Json classes = Json::array();
    for (const auto& c : cl.class_list)
      classes.push_back(Json{{"tau", tables_of(fb, a, c.tau.q, 1)}, {"size", c.size},
                             {"has_zero_associator_member", c.has_zero_associator_member},
                             {"representative", io::to_json(c.representative)}});
    return emit(Json{{"exhaustive", cl.exhaustive}, {"valid_pairs", io::int_to_json(cl.valid_pairs)},
                     {"coboundaries", io::int_to_json(cl.coboundaries)}, {"classes", io::int_to_json(cl.classes)},
                     {"quadratic_maps", io::int_to_json(cl.quadratic_maps)},
                     {"tau_constant_on_classes", cl.tau_constant_on_classes}, {"tau_bijective", cl.tau_bijective},
                     {"class_list", classes}},
                cl.tau_bijective && cl.tau_constant_on_classes);
  }
  if (*b_tau) return emit(io::to_json(tau_of(io::cocycle_pair_from_json(io::read_file(bundle)))));
  if (*x_verify) {
    const Json j = io::read_file(bundle);
    if (io::bundle_kind(j) == "abelian_cocycle_pair") {
      auto e = biext_from_cocycle(io::cocycle_pair_from_json(j));
      FiniteGroup fb(e.biext.b);
      return emit(Json{{"standard", e.standard}, {"trivialized", e.trivialized}, {"biextension", io::to_json(e.biext)},
                       {"section", tables_of(fb, e.biext.a, e.section, 2)},
                       {"section_report", io::to_json(e.section_report, fb, e.biext.a)}},
                  e.standard && e.trivialized);
    }
    auto d = io::biextension_from_json(j);
    auto r = verify_biextension(d);
    return emit(io::to_json(r, FiniteGroup(d.b), d.a), r.pass());
  }
  if (*x_comm) {
    const Json j = io::read_file(bundle);
    BiextensionData d;
    if (io::bundle_kind(j) == "abelian_cocycle_pair") {
      auto p = io::cocycle_pair_from_json(j);
      d = weak_biext_from_associator(p.b, p.a, p.h);
    } else {
      d = io::biextension_from_json(j);
    }
    auto k = commutator_map(d);
    FiniteGroup fb(d.b);
    return emit(Json{{"first", tables_of(fb, d.a, k.first, 3)}, {"second", tables_of(fb, d.a, k.second, 3)},
                     {"trilinear", k.trilinear}, {"alternating", k.alternating}, {"vanishes", k.vanishes}},
                k.trilinear && k.alternating);
  }
  if (*s_verify) {
    auto d = io::sigma_from_json(io::read_file(bundle));
    auto r = verify_sigma(d, conv.sigma);
    Json j = io::to_json(r, FiniteGroup(d.cube.b), d.cube.a);
    j["convention"] = sigma_convention_name(conv.sigma);
    return emit(j, r.pass());
  }
  if (*s_classify) {
    auto [b, a] = both();
    auto s = classify_sigma(b, a, conv.sigma);
    return emit(Json{{"convention", sigma_convention_name(s.convention)}, {"solutions", io::int_to_json(s.solutions)},
                     {"gauge_orbit", io::int_to_json(s.gauge_orbit)}, {"classes", io::int_to_json(s.classes)},
                     {"gauge_invariant", s.gauge_invariant}, {"expected", io::int_to_json(s.expected)},
                     {"matches", s.matches()}},
                s.matches() && s.gauge_invariant);
  }
  if (*t_verify) {
    auto p = io::gamma3_from_json(io::read_file(bundle));
    auto r = verify_pair(p, conv);
    return emit(io::to_json(r, FiniteGroup(p.b), p.a), r.pass());
  }
  if (*t_prop) {
    auto p = io::gamma3_from_json(io::read_file(bundle));
    auto s = io::section_from_json(io::read_file(bundle2), p.b, p.a);
    FiniteGroup fb(p.b);
    try {
      auto r = prop42(p, s, conv);
      return emit(Json{{"extension", tables_of(fb, p.a, r.extension, 2)}, {"splitting", tables_of(fb, p.a, r.splitting, 1)},
                       {"associative", r.associative}, {"commutative", r.commutative},
                       {"splitting_verified", r.splitting_verified}},
                  r.ok());
    } catch (const IncompatibleSection& e) {
      Json w = Json::array();
      for (auto i : e.witness()) w.push_back(io::element_to_json(p.b, fb.element(i)));
      return emit(Json{{"error", "IncompatibleSection"}, {"message", e.what()}, {"witness", w}}, false);
    }
  }
  if (*t_random) {
    auto [b, a] = both();
    return emit(io::to_json(random_pair(b, a, seed)));
  }
  if (*t_count) {
    auto [b, a] = both();
    auto c = classify_count(b, a, conv);
    return emit(Json{{"solutions", io::int_to_json(c.solutions)}, {"gauge_image", io::int_to_json(c.gauge_image)},
                     {"classes", io::int_to_json(c.classes)}, {"gauge_invariant", c.gauge_invariant},
                     {"reference", io::int_to_json(c.reference)}},
                c.gauge_invariant);
  }
  if (*fz) {
    Json s = fuzz(seed, iterations, conv);
    return emit(s, s["false_accepts"] == 0 && s["failures"] == 0);
  }
  return kInput;
}

int report_error(const std::string& kind, const std::exception& e, int code) {
  std::cout << io::canonical(Json{{"error", kind}, {"message", e.what()}}) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SizeGuard& e) {
    return report_error("SizeGuard", e, kGuard);
  } catch (const AxiomFailure& e) {
    return report_error("AxiomFailure", e, kFailed);
  } catch (const InvalidCocycle& e) {
    return report_error("InvalidCocycle", e, kFailed);
  } catch (const NotQuadratic& e) {
    return report_error("NotQuadratic", e, kFailed);
  } catch (const IncompatibleSection& e) {
    return report_error("IncompatibleSection", e, kFailed);
  } catch (const NotFree& e) {
    return report_error("NotFree", e, kInput);
  } catch (const InfiniteGroup& e) {
    return report_error("InfiniteGroup", e, kInput);
  } catch (const InputError& e) {
    return report_error("InputError", e, kInput);
  } catch (const Json::exception& e) {
    return report_error("InputError", e, kInput);
  } catch (const Error& e) {
    return report_error("Error", e, kInput);
  }
}
