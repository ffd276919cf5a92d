// noether-forge: value-semigroup invariants of curve singularities and
// mechanical checks of the surjectivity, embedding-dimension, gonality,
// Clifford and Koszul statements on exact desk-scale curve models.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "nforge/corpus.hpp"
#include "nforge/curve_invariants.hpp"
#include "nforge/errors.hpp"
#include "nforge/json_io.hpp"
#include "nforge/koszul.hpp"
#include "nforge/linear_systems.hpp"
#include "nforge/noether.hpp"
#include "nforge/parallel.hpp"
#include "nforge/semigroup_ops.hpp"
#include "nforge/valuation_engine.hpp"

using namespace nforge;

namespace {

using Clock = std::chrono::steady_clock;

json coords(const ValueVector& v) { return json(v.coords()); }

json coords_list(const std::vector<ValueVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(coords(v));
  return out;
}

struct Report {
  std::string target;
  std::string status = "pass";  // pass | fail | inconclusive
  json witnesses = json::object();
  json input = json::object();
  long timing_ms = 0;

  json to_json() const {
    return json{{"target", target},
                {"status", status},
                {"witnesses", witnesses},
                {"input", input},
                {"timing_ms", timing_ms}};
  }
};

int emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.target << ": " << rep.status << " (" << rep.timing_ms << " ms)\n";
    if (!rep.witnesses.empty()) std::cout << rep.witnesses.dump(2) << "\n";
  }
  if (rep.status == "pass" || rep.status == "inconclusive") return 0;
  return 1;
}

json classification_json(const Classification& cls) {
  json j{{"delta", cls.delta}, {"eta", cls.eta},
         {"gorenstein", cls.gorenstein}, {"kunz", cls.kunz}};
  if (cls.mu) j["mu"] = *cls.mu;
  if (cls.almost_gorenstein) j["almost_gorenstein"] = *cls.almost_gorenstein;
  if (cls.blowup) j["blowup"] = semigroup_to_json(*cls.blowup);
  return j;
}

json invariants_json(const CurveInvariants& inv) {
  json points = json::array();
  for (const auto& pt : inv.points) {
    json p{{"delta", pt.delta},
           {"eta", pt.eta},
           {"dim_O_mod_conductor", pt.dim_O_mod_conductor},
           {"gorenstein", pt.gorenstein},
           {"kunz", pt.kunz},
           {"semigroup", semigroup_to_json(pt.semigroup)}};
    if (pt.mu) p["mu"] = *pt.mu;
    points.push_back(p);
  }
  json j{{"genus", inv.genus},
         {"eta", inv.eta},
         {"h0_O_mod_conductor", inv.h0_O_mod_conductor},
         {"nearly_normal", inv.nearly_normal},
         {"rho_minus_sigma", inv.rho_minus_sigma},
         {"rho_minus_sigma_literal", inv.rho_minus_sigma_literal},
         {"points", points}};
  if (inv.mu) j["mu"] = *inv.mu;
  if (inv.nearly_gorenstein) j["nearly_gorenstein"] = *inv.nearly_gorenstein;
  if (inv.nonhyperelliptic) j["nonhyperelliptic"] = *inv.nonhyperelliptic;
  return j;
}

json pencil_json(const PencilCandidate& c) {
  json gens = json::array();
  for (const auto& g : c.generators) gens.push_back(g.str());
  return json{{"r", c.r},
              {"generators", gens},
              {"degree", c.degree},
              {"h0", c.h0},
              {"deg_per_fiber", c.deg_per_fiber},
              {"deg_at_infinity", c.deg_at_infinity}};
}

json certificate_json(const NoetherCertificate& cert) {
  json seq = json::array();
  for (const auto& e : cert.sequence) {
    const char* source = e.source == SequenceEntry::Source::direct        ? "direct"
                         : e.source == SequenceEntry::Source::q_split     ? "q_split"
                         : e.source == SequenceEntry::Source::reindexed   ? "reindexed"
                                                                          : "brute_force";
    seq.push_back(json{{"value", coords(e.value)},
                       {"left", coords(e.left)},
                       {"right", coords(e.right)},
                       {"source", source}});
  }
  json j{{"empty", cert.empty},
         {"expected_length", cert.expected_length},
         {"r", cert.r},
         {"m", cert.m},
         {"sequence", seq}};
  if (!cert.empty) {
    j["alpha"] = coords(cert.alpha);
    j["beta"] = coords(cert.beta);
    j["u"] = coords(cert.u);
    j["alpha_powers"] = coords_list(cert.alpha_powers);
    json q = json::array();
    for (const auto& [q1, q2] : cert.q_table) q.push_back(json::array({q1, q2}));
    j["q_table"] = q;
  }
  if (cert.witness) {
    j["lemma_witness"] = json{{"d", coords(cert.witness->d)},
                              {"ell", cert.witness->ell},
                              {"complement", coords(cert.witness->complement)}};
  }
  return j;
}

GoodSemigroup semigroup_of(const LoadedInput& in) {
  if (in.semigroup) return *in.semigroup;
  if (in.curve->singular_fibers.size() != 1)
    fail(errc::invalid_argument, "expected one singular fiber for a semigroup-level check");
  return local_value_semigroup(*in.curve, in.curve->singular_fibers.front());
}

// ---- analyze ---------------------------------------------------------

int run_analyze(const std::string& file, const std::string& format) {
  const auto start = Clock::now();
  Report rep;
  rep.target = "analyze";
  const LoadedInput in = load_input_file(file);
  if (in.semigroup) {
    rep.input = semigroup_to_json(*in.semigroup);
    const auto axioms = validate(*in.semigroup);
    rep.witnesses["axioms"] = axioms.summary();
    if (!axioms.all_pass()) rep.status = "fail";
    rep.witnesses["classification"] = classification_json(classify(*in.semigroup));
    if (in.semigroup->branches() == 1)
      rep.witnesses["genus"] = numerical_genus(*in.semigroup);
  } else {
    rep.input = curve_to_json(*in.curve);
    CurveInvariants inv = curve_invariants(*in.curve);
    if (!inv.nonhyperelliptic && !in.curve->singular_fibers.empty()) {
      // settle the flag by the exact degree-2 pencil search
      const auto hyper = is_hyperelliptic_like(*in.curve);
      if (hyper.gon2)
        inv.nonhyperelliptic =
            hyper.reason == HyperellipticReport::Reason::rational_nearly_normal;
    }
    rep.witnesses["invariants"] = invariants_json(inv);
    rep.witnesses["gonality_bounds"] = [&] {
      const auto b = gonality_bounds(inv);
      json j{{"lower", b.lower},
             {"upper_general", b.upper_general},
             {"upper_refined", b.upper_refined}};
      if (b.upper_rational_unibranch) j["upper_rational_unibranch"] = *b.upper_rational_unibranch;
      return j;
    }();
  }
  rep.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return emit(rep, format);
}

// ---- verify ----------------------------------------------------------

int verify_noether(const LoadedInput& in, int level, Report& rep) {
  const GoodSemigroup S = semigroup_of(in);
  rep.input = semigroup_to_json(S);
  const auto cls = classify(S);
  if (cls.gorenstein) {
    rep.status = "inconclusive";
    rep.witnesses["note"] = "Gorenstein input: the surjectivity statement is classical";
    return 0;
  }
  const auto res = verify_theorem1(S);
  rep.witnesses["certificate"] = certificate_json(res.certificate);
  if (!res.verified) rep.status = "fail";
  if (S.branches() == 1) {
    const auto lvl = max_noether_level(S, level);
    rep.witnesses["level"] = json{{"n", level},
                                  {"surjective", lvl.surjective},
                                  {"h0", lvl.h0},
                                  {"deg_at_point", lvl.deg_at_point},
                                  {"deg_at_infinity", lvl.deg_at_infinity},
                                  {"deg_total", lvl.deg_total},
                                  {"missing", lvl.missing}};
    json products = json::object();
    for (const auto& [v, parts] : lvl.products) products[std::to_string(v)] = parts;
    rep.witnesses["products"] = products;
    if (!lvl.surjective) rep.status = "fail";
  }
  return 0;
}

int verify_corpus_noether(int genus_max, Report& rep) {
  const auto corpus = enumerate_numerical_semigroups(genus_max);
  std::vector<std::string> failures(corpus.size());
  parallel_for(corpus.size(), [&](size_t i) {
    const auto& S = corpus[i];
    if (classify(S).gorenstein) return;
    try {
      if (!verify_theorem1(S).verified)
        failures[i] = "theorem 1 fails on " + semigroup_to_json(S).dump();
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });
  long checked = 0;
  for (const auto& S : corpus)
    if (!classify(S).gorenstein) ++checked;
  json fails = json::array();
  for (const auto& f : failures)
    if (!f.empty()) fails.push_back(f);
  rep.witnesses["checked"] = checked;
  rep.witnesses["failures"] = fails;
  if (!fails.empty()) rep.status = "fail";
  return 0;
}

int verify_lemma(const LoadedInput* in, int genus_max, Report& rep) {
  if (in) {
    const GoodSemigroup S = semigroup_of(*in);
    rep.input = semigroup_to_json(S);
    const auto w = find_lemma_witness(S);
    rep.witnesses["witness"] = json{
        {"d", coords(w.d)}, {"ell", w.ell}, {"complement", coords(w.complement)}};
    return 0;
  }
  const auto corpus = enumerate_numerical_semigroups(genus_max);
  std::vector<std::string> failures(corpus.size());
  parallel_for(corpus.size(), [&](size_t i) {
    const auto& S = corpus[i];
    if (classify(S).gorenstein) return;
    try {
      find_lemma_witness(S);
    } catch (const Error& e) {
      failures[i] = std::string(e.what()) + " on " + semigroup_to_json(S).dump();
    }
  });
  json fails = json::array();
  for (const auto& f : failures)
    if (!f.empty()) fails.push_back(f);
  rep.witnesses["failures"] = fails;
  if (!fails.empty()) rep.status = "fail";
  return 0;
}

int verify_quadrics(const LoadedInput* in, int genus_max, long r, Report& rep) {
  auto record_json = [](const IrDimensionRecord& rec) {
    return json{{"r", rec.r},
                {"formula", rec.formula_value},
                {"direct", rec.direct_value},
                {"embedding_dimension", rec.embedding_dimension}};
  };
  if (in) {
    const GoodSemigroup S = semigroup_of(*in);
    rep.input = semigroup_to_json(S);
    const auto rec = check_Ir_hat(S, r);
    rep.witnesses["blowup_embedding"] = record_json(rec);
    if (!rec.agree()) rep.status = "fail";
    if (!classify(S).gorenstein) {
      const auto star = check_Ir_star(S, r);
      rep.witnesses["star_embedding"] = record_json(star);
      if (!star.agree()) rep.status = "fail";
    }
    return 0;
  }
  const auto corpus = enumerate_numerical_semigroups(genus_max);
  std::vector<std::string> failures(corpus.size());
  parallel_for(corpus.size(), [&](size_t i) {
    const auto& S = corpus[i];
    const auto cls = classify(S);
    if (cls.gorenstein || cls.delta < 3) return;
    try {
      for (long rr = 2; rr <= 4; ++rr)
        if (!check_Ir_hat(S, rr).agree()) failures[i] = "blowup formula mismatch";
      if (!check_Ir_star(S, r).agree()) failures[i] = "star formula mismatch";
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });
  json fails = json::array();
  for (const auto& f : failures)
    if (!f.empty()) fails.push_back(f);
  rep.witnesses["failures"] = fails;
  if (!fails.empty()) rep.status = "fail";
  return 0;
}

int verify_gonality_bounds(const LoadedInput* in, int genus_max, Report& rep) {
  if (in) {
    if (!in->curve) fail(errc::invalid_argument, "gonality bounds need a curve document");
    const auto inv = curve_invariants(*in->curve);
    const auto b = gonality_bounds(inv);
    const auto gon = gonality_upper(*in->curve);
    rep.witnesses["gonality"] = json{{"bound", gon.bound}, {"exact", gon.exact}};
    rep.witnesses["upper_general"] = b.upper_general;
    if (b.upper_rational_unibranch) {
      rep.witnesses["upper_rational_unibranch"] = *b.upper_rational_unibranch;
      if (gon.exact && gon.bound > *b.upper_rational_unibranch) rep.status = "fail";
    }
    if (gon.exact && gon.bound > b.upper_general + 1) rep.status = "fail";
    return 0;
  }
  const auto corpus = enumerate_numerical_semigroups(genus_max);
  std::vector<std::string> failures(corpus.size());
  parallel_for(corpus.size(), [&](size_t i) {
    const auto& S = corpus[i];
    const long g = numerical_genus(S);
    if (g == 0) return;
    try {
      const auto curve = CurveSpec::monomial(minimal_generators_of(S));
      const auto gon = gonality_upper(curve);
      if (!gon.exact || gon.bound > (g + 3) / 2)
        failures[i] = "bound violated on " + semigroup_to_json(S).dump();
      const auto cls = classify(S);
      if (!cls.gorenstein) {
        if (gon.bound > g) failures[i] = "gon > g on a non-Gorenstein curve";
        if (gon.bound == g && cls.eta != 1) failures[i] = "gon = g without Kunz";
      }
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });
  json fails = json::array();
  for (const auto& f : failures)
    if (!f.empty()) fails.push_back(f);
  rep.witnesses["failures"] = fails;
  if (!fails.empty()) rep.status = "fail";
  return 0;
}

int verify_equivalences(const LoadedInput& in, Report& rep) {
  GoodSemigroup S = semigroup_of(in);
  rep.input = semigroup_to_json(S);
  if (S.branches() != 1) {
    rep.status = "inconclusive";
    rep.witnesses["note"] = "multibranch equivalence checks are out of scope";
    return 0;
  }
  const long g = numerical_genus(S);
  if (g < 3) {
    rep.status = "inconclusive";
    rep.witnesses["note"] = "genus below 3: the Clifford side of the equivalence degenerates";
    return 0;
  }
  const auto curve = CurveSpec::monomial(minimal_generators_of(S));
  const bool gon2 = is_hyperelliptic_like(curve).gon2;
  const bool nearly_normal = dim_O_mod_conductor(S) == 1;
  const bool nonhyperelliptic = nearly_normal ? true : !gon2;
  const bool level2 = max_noether_level(S, 2).surjective;
  const bool koszul_zero = koszul_dimension(curve, 0, 2).dim_kpq == 0;
  rep.witnesses = json{{"nonhyperelliptic", nonhyperelliptic},
                       {"max_noether_level2", level2},
                       {"koszul_K02_zero", koszul_zero},
                       {"clifford_positive_or_nearly_normal", !gon2 || nearly_normal}};
  if (!(nonhyperelliptic == level2 && level2 == koszul_zero &&
        koszul_zero == (!gon2 || nearly_normal)))
    rep.status = "fail";
  return 0;
}

// ---- search ----------------------------------------------------------

int run_search(const std::string& file, bool want_gonality, bool want_clifford,
               const std::vector<int>& koszul_pq, long budget,
               const std::string& candidate_file, const std::string& format) {
  const auto start = Clock::now();
  Report rep;
  const LoadedInput in = load_input_file(file);
  CurveSpec curve;
  if (in.curve)
    curve = *in.curve;
  else
    curve = CurveSpec::monomial(minimal_generators_of(*in.semigroup));
  rep.input = curve_to_json(curve);
  validate_curve(curve);

  std::vector<SheafModel> candidates;
  if (!candidate_file.empty()) {
    candidates.push_back(sheaf_from_json(curve, load_json_file(candidate_file)));
  }

  if (want_gonality) {
    rep.target = "search:gonality";
    const auto res = gonality_upper(curve, budget, candidates);
    rep.witnesses = json{{"bound", res.bound},
                         {"exact", res.exact},
                         {"budget_exhausted", res.budget_exhausted},
                         {"witness", pencil_json(res.witness)}};
  } else if (want_clifford) {
    rep.target = "search:clifford";
    const auto res = clifford_upper(curve, budget, candidates);
    json j{{"exact", res.exact}, {"budget_exhausted", res.budget_exhausted}};
    if (res.value) j["upper_bound"] = *res.value;
    if (res.witness)
      j["witness"] = json{{"descriptor", res.witness->descriptor},
                          {"degree", res.witness->degree},
                          {"h0", res.witness->h0},
                          {"h1", res.witness->h1},
                          {"index", res.witness->index}};
    const auto cls = clifford_classify(curve, candidates);
    json cj{{"rule", cls.rule}, {"trigonal", cls.trigonal}};
    if (cls.clifford) cj["clifford"] = *cls.clifford;
    j["classification"] = cj;
    rep.witnesses = j;
  } else {
    rep.target = "search:koszul";
    const auto res = koszul_dimension(curve, koszul_pq[0], koszul_pq[1]);
    rep.witnesses = json{{"p", res.p},
                         {"q", res.q},
                         {"dim_domain", res.dim_domain},
                         {"dim_middle", res.dim_middle},
                         {"dim_codomain", res.dim_codomain},
                         {"rank_phi1", res.rank_phi1},
                         {"rank_phi2", res.rank_phi2},
                         {"dim_kpq", res.dim_kpq}};
  }
  rep.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return emit(rep, format);
}

// ---- corpus ----------------------------------------------------------

int run_corpus(int genus_max, int branches) {
  if (branches != 1)
    fail(errc::unsupported_branch_count, "only the numerical corpus is enumerable");
  const auto corpus = enumerate_numerical_semigroups(genus_max);
  for (const auto& S : corpus) std::cout << semigroup_to_json(S).dump() << "\n";
  std::cout << json{{"count", corpus.size()}, {"genus_max", genus_max}}.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"value-semigroup invariants and theorem checks for singular curve models"};
  app.require_subcommand(1);

  std::string format = "text";

  auto* analyze = app.add_subcommand("analyze", "invariant report for a curve or semigroup");
  std::string analyze_file;
  analyze->add_option("file", analyze_file, "input document")->required();
  analyze->add_option("--format", format, "text|json");

  auto* verify = app.add_subcommand("verify", "run a theorem check");
  std::string theorem, verify_file, corpus_filter;
  int level = 2;
  long quadrics_r = 2;
  int genus_max = 8;
  verify->add_option("--theorem", theorem,
                     "noether|lemma|quadrics|gonality-bounds|equivalences")
      ->required();
  verify->add_option("--level", level, "symmetric-power level for noether");
  verify->add_option("--r", quadrics_r, "form degree for quadrics");
  verify->add_option("--corpus", corpus_filter, "genus<=N corpus selector");
  verify->add_option("--genus-max", genus_max, "corpus genus bound");
  verify->add_option("file", verify_file, "input document");
  verify->add_option("--format", format, "text|json");

  auto* search = app.add_subcommand("search", "gonality / clifford / koszul searches");
  std::string search_file, candidate_file;
  bool want_gonality = false, want_clifford = false;
  std::vector<int> koszul_pq;
  long budget = 0;
  search->add_flag("--gonality", want_gonality, "pencil search");
  search->add_flag("--clifford", want_clifford, "Clifford index search");
  search->add_option("--koszul", koszul_pq, "p q")->expected(2);
  search->add_option("--budget", budget, "search budget");
  search->add_option("--candidate-sheaf", candidate_file, "extra sheaf document");
  search->add_option("file", search_file, "input document")->required();
  search->add_option("--format", format, "text|json");

  auto* corpus_cmd = app.add_subcommand("corpus", "enumerate numerical semigroups");
  int corpus_genus_max = 8;
  int corpus_branches = 1;
  corpus_cmd->add_option("--genus-max", corpus_genus_max, "genus bound")->required();
  corpus_cmd->add_option("--branches", corpus_branches, "branch count (1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_file, format);
    if (*verify) {
      if (!corpus_filter.empty()) {
        const auto pos = corpus_filter.find("<=");
        if (corpus_filter.rfind("genus", 0) != 0 || pos == std::string::npos)
          fail(errc::invalid_argument, "corpus selector looks like genus<=8");
        genus_max = std::stoi(corpus_filter.substr(pos + 2));
      }
      const auto start = Clock::now();
      Report rep;
      rep.target = "verify:" + theorem;
      std::optional<LoadedInput> in;
      if (!verify_file.empty()) in = load_input_file(verify_file);
      int rc = 0;
      if (theorem == "noether") {
        if (in)
          rc = verify_noether(*in, level, rep);
        else
          rc = verify_corpus_noether(genus_max, rep);
      } else if (theorem == "lemma") {
        rc = verify_lemma(in ? &*in : nullptr, genus_max, rep);
      } else if (theorem == "quadrics") {
        rc = verify_quadrics(in ? &*in : nullptr, genus_max, quadrics_r, rep);
      } else if (theorem == "gonality-bounds") {
        rc = verify_gonality_bounds(in ? &*in : nullptr, genus_max, rep);
      } else if (theorem == "equivalences") {
        if (!in) fail(errc::invalid_argument, "equivalences checks need an input document");
        rc = verify_equivalences(*in, rep);
      } else {
        fail(errc::invalid_argument, "unknown theorem id \"" + theorem + "\"");
      }
      rep.timing_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
      (void)rc;
      return emit(rep, format);
    }
    if (*search) {
      if (static_cast<int>(want_gonality) + static_cast<int>(want_clifford) +
              static_cast<int>(!koszul_pq.empty()) !=
          1)
        fail(errc::invalid_argument, "pick exactly one of --gonality, --clifford, --koszul");
      return run_search(search_file, want_gonality, want_clifford, koszul_pq, budget,
                        candidate_file, format);
    }
    if (*corpus_cmd) return run_corpus(corpus_genus_max, corpus_branches);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
