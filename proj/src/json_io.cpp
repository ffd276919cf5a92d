#include "nforge/json_io.hpp"

#include <fstream>

#include "nforge/errors.hpp"

namespace nforge {

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      Rat r(s);
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      fail(errc::parse_error, "bad rational literal \"" + s + "\"");
    }
  }
  fail(errc::parse_error, "expected an integer or a \"p/q\" string");
}

json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(r.get_str());
}

}  // namespace

json semigroup_to_json(const GoodSemigroup& S) {
  json j;
  j["branches"] = S.branches();
  j["conductor"] = S.conductor().coords();
  json els = json::array();
  for (const auto& a : S.small_elements()) els.push_back(a.coords());
  j["small_elements"] = els;
  return j;
}

GoodSemigroup semigroup_from_json(const json& j) {
  if (j.contains("numerical_generators")) {
    std::vector<long> gens;
    for (const auto& g : j.at("numerical_generators")) gens.push_back(g.get<long>());
    return from_numerical_generators(gens);
  }
  if (!j.contains("branches") || !j.contains("conductor") || !j.contains("small_elements"))
    fail(errc::parse_error, "semigroup document needs branches/conductor/small_elements");
  const int s = j.at("branches").get<int>();
  ValueVector beta(j.at("conductor").get<std::vector<long>>());
  if (beta.branches() != s) fail(errc::parse_error, "conductor arity mismatch");
  std::vector<ValueVector> small;
  for (const auto& e : j.at("small_elements")) {
    ValueVector v(e.get<std::vector<long>>());
    if (v.branches() != s) fail(errc::parse_error, "element arity mismatch");
    small.push_back(std::move(v));
  }
  return GoodSemigroup(s, std::move(beta), std::move(small), "literal");
}

json curve_to_json(const CurveSpec& curve) {
  json j;
  if (curve.kind == CurveSpec::Kind::monomial) {
    j["kind"] = "monomial";
    j["generators"] = curve.monomial_exponents;
  } else if (curve.kind == CurveSpec::Kind::multibranch) {
    j["kind"] = "multibranch";
    json gens = json::array();
    for (const auto& g : curve.branch_generators) {
      json comps = json::array();
      for (const auto& c : g) comps.push_back(c.str());
      gens.push_back(comps);
    }
    j["generators"] = gens;
  } else {
    j["kind"] = "parametrized";
    json gens = json::array();
    for (const auto& g : curve.generators) gens.push_back(g.str());
    j["generators"] = gens;
  }
  json fibers = json::array();
  for (const auto& fiber : curve.singular_fibers) {
    json f = json::array();
    for (const auto& c : fiber) f.push_back(rat_to_json(c));
    fibers.push_back(f);
  }
  j["singular_fibers"] = fibers;
  j["infinity_smooth"] = curve.infinity_smooth;
  return j;
}

CurveSpec curve_from_json(const json& j) {
  const std::string kind = j.value("kind", "monomial");
  CurveSpec curve;
  if (kind == "monomial") {
    std::vector<long> exps;
    for (const auto& e : j.at("generators")) exps.push_back(e.get<long>());
    curve = CurveSpec::monomial(std::move(exps));
    if (j.contains("singular_fibers")) {
      curve.singular_fibers.clear();
      for (const auto& f : j.at("singular_fibers")) {
        std::vector<Rat> fiber;
        for (const auto& c : f) fiber.push_back(rat_from_json(c));
        curve.singular_fibers.push_back(std::move(fiber));
      }
    }
  } else if (kind == "parametrized") {
    std::vector<Poly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_poly(g.get<std::string>()));
    std::vector<std::vector<Rat>> fibers;
    for (const auto& f : j.at("singular_fibers")) {
      std::vector<Rat> fiber;
      for (const auto& c : f) fiber.push_back(rat_from_json(c));
      fibers.push_back(std::move(fiber));
    }
    curve = CurveSpec::parametrized(std::move(gens), std::move(fibers));
  } else if (kind == "multibranch") {
    std::vector<std::vector<Poly>> gens;
    for (const auto& g : j.at("generators")) {
      std::vector<Poly> comps;
      for (const auto& c : g) comps.push_back(parse_poly(c.get<std::string>()));
      gens.push_back(std::move(comps));
    }
    const auto& fibers = j.at("singular_fibers");
    if (fibers.size() != 1) fail(errc::parse_error, "multibranch curves have one fiber");
    std::vector<Rat> fiber;
    for (const auto& c : fibers.front()) fiber.push_back(rat_from_json(c));
    curve = CurveSpec::multibranch(std::move(gens), std::move(fiber));
  } else {
    fail(errc::parse_error, "unknown curve kind \"" + kind + "\"");
  }
  curve.infinity_smooth = j.value("infinity_smooth", true);
  return curve;
}

SheafModel sheaf_from_json(const CurveSpec& curve, const json& j) {
  SheafModel F;
  F.curve = curve;
  const auto& gens = j.at("generators");
  const bool tuple_form = !gens.empty() && gens.front().is_array();
  if (tuple_form) {
    for (const auto& g : gens) {
      std::vector<Poly> comps;
      for (const auto& c : g) comps.push_back(parse_poly(c.get<std::string>()));
      F.branch_generators.push_back(std::move(comps));
    }
    if (!j.contains("pole_at_infinity"))
      fail(errc::parse_error, "per-branch sheaf generators need \"pole_at_infinity\"");
    F.pole_infinity = j.at("pole_at_infinity").get<long>();
    bool has_one = false;
    for (const auto& g : F.branch_generators) {
      bool all_one = true;
      for (const auto& c : g)
        if (!(c == Poly(Rat(1)))) all_one = false;
      if (all_one) has_one = true;
    }
    if (!has_one)
      fail(errc::parse_error, "sheaf generators must contain 1 (O inside F normalization)");
    return F;
  }
  for (const auto& g : gens) {
    if (g.is_string())
      F.generators.push_back(parse_poly(g.get<std::string>()));
    else if (g.is_number_integer())
      F.generators.push_back(Poly(Rat(g.get<long>())));
    else
      fail(errc::parse_error, "sheaf generators are polynomial strings");
  }
  bool has_one = false;
  for (const auto& g : F.generators)
    if (g == Poly(Rat(1))) has_one = true;
  if (!has_one)
    fail(errc::parse_error, "sheaf generators must contain 1 (O inside F normalization)");
  return F;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

LoadedInput load_input_file(const std::string& path) {
  const json j = load_json_file(path);
  LoadedInput out;
  try {
    if (j.contains("kind"))
      out.curve = curve_from_json(j);
    else if (j.contains("numerical_generators") || j.contains("small_elements"))
      out.semigroup = semigroup_from_json(j);
    else
      fail(errc::parse_error, path + " is neither a curve nor a semigroup document");
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  return out;
}

}  // namespace nforge
