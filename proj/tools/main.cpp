// cofrob: exact computations with finite-dimensional coalgebras and
// Frobenius extension checks. Exit codes: 0 success / yes / true,
// 1 fail / no / false, 2 unknown, 3 malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cofrob/io.hpp"
#include "cofrob/zoo.hpp"

namespace {

using cofrob::io::json;

constexpr std::size_t kDimensionCap = 64;

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cofrob::io::ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw cofrob::io::ParseError(path + ": " + e.what());
  }
}

void emit(const json& doc) { std::cout << cofrob::io::canonical_dump(doc); }

json violations_to_json(const cofrob::ValidationReport& rep) {
  json out = json::array();
  for (const auto& v : rep.violations)
    out.push_back({{"identity", v.identity}, {"basis_index", v.basis_index}});
  return out;
}

void check_dimension(std::size_t dim) {
  if (dim > kDimensionCap)
    throw cofrob::io::ParseError("dimension " + std::to_string(dim) +
                                 " exceeds the cap of " +
                                 std::to_string(kDimensionCap));
}

cofrob::AffineFamilyConfig make_config(std::uint64_t seed,
                                       std::uint64_t budget) {
  cofrob::AffineFamilyConfig cfg;
  cfg.seed = seed;
  cfg.budget = budget;
  return cfg;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("COFROB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw cofrob::io::ParseError("COFROB_BUDGET is not a number");
    }
  }
  return cofrob::AffineFamilyConfig{}.budget;
}

int cmd_validate(const std::string& path) {
  json doc = load_file(path);
  cofrob::ValidationReport rep;
  std::string kind;
  if (doc.contains("coaction")) {
    kind = "comodule";
    rep = cofrob::validate_comodule(cofrob::io::comodule_from_json(doc));
  } else if (doc.contains("matrix")) {
    kind = "morphism";
    cofrob::CoalgebraMorphism m = cofrob::io::morphism_from_json(doc);
    rep = cofrob::validate_morphism(m);
    auto src = cofrob::validate_coalgebra(m.source);
    auto tgt = cofrob::validate_coalgebra(m.target);
    for (const auto& v : src.violations)
      rep.fail("source " + v.identity, v.basis_index);
    for (const auto& v : tgt.violations)
      rep.fail("target " + v.identity, v.basis_index);
  } else {
    kind = "coalgebra";
    rep = cofrob::validate_coalgebra(cofrob::io::coalgebra_from_json(doc));
  }
  emit(json{{"kind", kind},
            {"pass", rep.pass},
            {"violations", violations_to_json(rep)}});
  return rep.pass ? 0 : 1;
}

int cmd_check(const std::string& path, std::uint64_t seed,
              std::uint64_t budget, const std::string& cert_out,
              bool primal) {
  cofrob::CoalgebraMorphism lambda =
      cofrob::io::morphism_from_json(load_file(path));
  check_dimension(lambda.source.dim());
  check_dimension(lambda.target.dim());
  cofrob::Verdict v;
  try {
    v = primal ? cofrob::check_frobenius_extension_primal(
                     lambda, make_config(seed, budget))
               : cofrob::check_frobenius_extension(lambda,
                                                   make_config(seed, budget));
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  emit(cofrob::io::verdict_to_json(v, lambda));
  if (v.certificate && !cert_out.empty()) {
    std::ofstream out(cert_out);
    out << cofrob::io::canonical_dump(
        cofrob::io::certificate_to_json(lambda, *v.certificate));
  }
  switch (v.kind) {
    case cofrob::Verdict::Kind::yes: return 0;
    case cofrob::Verdict::Kind::no: return 1;
    case cofrob::Verdict::Kind::unknown: return 2;
  }
  return 3;
}

int cmd_verify(const std::string& ext_path, const std::string& cert_path) {
  cofrob::CoalgebraMorphism lambda =
      cofrob::io::morphism_from_json(load_file(ext_path));
  cofrob::FrobeniusCertificate cert =
      cofrob::io::certificate_from_json(load_file(cert_path), lambda);
  bool ok;
  try {
    ok = cofrob::verify_certificate(lambda, cert);
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  emit(json{{"verified", ok}});
  return ok ? 0 : 1;
}

int cmd_cotensor(const std::string& left, const std::string& right) {
  cofrob::Comodule m = cofrob::io::comodule_from_json(load_file(left));
  cofrob::Comodule n = cofrob::io::comodule_from_json(load_file(right));
  cofrob::CotensorSpace sp;
  try {
    sp = cofrob::cotensor(m, n);
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  emit(json{{"ambient_dim", sp.ambient_dim},
            {"dim", sp.dim()},
            {"basis", cofrob::io::matrix_to_json(sp.basis)}});
  return 0;
}

int cmd_hom(const std::string& left, const std::string& right) {
  cofrob::Comodule m = cofrob::io::comodule_from_json(load_file(left));
  cofrob::Comodule n = cofrob::io::comodule_from_json(load_file(right));
  cofrob::HomSpace hs;
  try {
    hs = cofrob::hom_space(m, n);
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  json basis = json::array();
  for (const auto& b : hs.basis) basis.push_back(cofrob::io::matrix_to_json(b));
  emit(json{{"description", hs.description},
            {"dimension", hs.dimension()},
            {"basis", std::move(basis)}});
  return 0;
}

int cmd_dualize(const std::string& path) {
  json doc = load_file(path);
  if (doc.contains("matrix")) {
    cofrob::AlgebraMorphism phi = cofrob::dualize_extension(
        cofrob::io::morphism_from_json(doc));
    emit(json{{"source_dim", phi.source.dim()},
              {"target_dim", phi.target.dim()},
              {"source_mult", cofrob::io::matrix_to_json(phi.source.mult())},
              {"source_unit", cofrob::io::matrix_to_json(phi.source.unit())},
              {"target_mult", cofrob::io::matrix_to_json(phi.target.mult())},
              {"target_unit", cofrob::io::matrix_to_json(phi.target.unit())},
              {"matrix", cofrob::io::matrix_to_json(phi.matrix)}});
  } else {
    cofrob::Algebra a =
        cofrob::dualize_coalgebra(cofrob::io::coalgebra_from_json(doc));
    emit(json{{"dim", a.dim()},
              {"mult", cofrob::io::matrix_to_json(a.mult())},
              {"unit", cofrob::io::matrix_to_json(a.unit())}});
  }
  return 0;
}

int cmd_injective(const std::string& path) {
  cofrob::Comodule m = cofrob::io::comodule_from_json(load_file(path));
  bool inj;
  try {
    inj = cofrob::is_injective_comodule(m);
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  emit(json{{"injective", inj}});
  return 0;
}

int cmd_frobenius_system(const std::string& path, std::uint64_t seed,
                         std::uint64_t budget) {
  cofrob::Coalgebra c = cofrob::io::coalgebra_from_json(load_file(path));
  check_dimension(c.dim());
  cofrob::FrobeniusSystemResult res;
  try {
    res = cofrob::frobenius_system(c, make_config(seed, budget));
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  json out;
  out["present"] = res.system.has_value();
  out["verdict"] = res.verdict.kind == cofrob::Verdict::Kind::yes
                       ? "yes"
                       : res.verdict.kind == cofrob::Verdict::Kind::no
                             ? "no"
                             : "unknown";
  if (res.system) {
    out["e"] = cofrob::io::matrix_to_json(res.system->e);
    out["pi"] = cofrob::io::matrix_to_json(res.system->pi);
  }
  emit(out);
  return 0;
}

int cmd_zoo(const std::string& preset, const std::vector<long>& params,
            std::uint64_t prime) {
  cofrob::FieldSpec f = prime == 0 ? cofrob::FieldSpec::rationals()
                                   : cofrob::FieldSpec::prime(prime);
  cofrob::zoo::Bundle b;
  try {
    b = cofrob::zoo::build(preset, params, f);
  } catch (const std::invalid_argument& e) {
    throw cofrob::io::ParseError(e.what());
  }
  json out;
  for (const auto& [name, c] : b.coalgebras)
    out["coalgebras"][name] = cofrob::io::coalgebra_to_json(c);
  for (const auto& [name, m] : b.morphisms)
    out["morphisms"][name] = cofrob::io::morphism_to_json(m);
  for (const auto& [name, m] : b.comodules)
    out["comodules"][name] = cofrob::io::comodule_to_json(m);
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Frobenius-extension toolkit for finite-dimensional "
               "coalgebras"};
  app.require_subcommand(1);

  std::string path, second, cert_out;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool primal = false;
  std::uint64_t prime = 0;
  std::vector<long> params;
  std::string preset;

  auto* validate = app.add_subcommand("validate", "check structure axioms");
  validate->add_option("file", path)->required();

  auto* check = app.add_subcommand("check-frobenius",
                                   "decide a coalgebra extension");
  check->add_option("file", path)->required();
  check->add_option("--seed", seed);
  check->add_option("--budget", budget);
  check->add_option("--certificate", cert_out);
  check->add_flag("--primal", primal, "use the primal search route");

  auto* verify = app.add_subcommand("verify", "replay a certificate");
  verify->add_option("extension", path)->required();
  verify->add_option("certificate", second)->required();

  auto* cot = app.add_subcommand("cotensor", "cotensor product of comodules");
  cot->add_option("right-comodule", path)->required();
  cot->add_option("left-comodule", second)->required();

  auto* hom = app.add_subcommand("hom", "comodule morphism space");
  hom->add_option("from", path)->required();
  hom->add_option("to", second)->required();

  auto* dual = app.add_subcommand("dualize",
                                  "convolution dual of a coalgebra or "
                                  "extension");
  dual->add_option("file", path)->required();

  auto* inj = app.add_subcommand("injective", "comodule injectivity test");
  inj->add_option("file", path)->required();

  auto* fs = app.add_subcommand("frobenius-system",
                                "Frobenius system of a coalgebra");
  fs->add_option("file", path)->required();
  fs->add_option("--seed", seed);
  fs->add_option("--budget", budget);

  auto* zoo = app.add_subcommand("zoo", "build a named example bundle");
  zoo->add_option("preset", preset)->required();
  zoo->add_option("params", params);
  zoo->add_option("--prime", prime, "use F_p instead of Q");

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget == 0) budget = default_budget();
    if (app.got_subcommand(validate)) return cmd_validate(path);
    if (app.got_subcommand(check))
      return cmd_check(path, seed, budget, cert_out, primal);
    if (app.got_subcommand(verify)) return cmd_verify(path, second);
    if (app.got_subcommand(cot)) return cmd_cotensor(path, second);
    if (app.got_subcommand(hom)) return cmd_hom(path, second);
    if (app.got_subcommand(dual)) return cmd_dualize(path);
    if (app.got_subcommand(inj)) return cmd_injective(path);
    if (app.got_subcommand(fs)) return cmd_frobenius_system(path, seed, budget);
    if (app.got_subcommand(zoo)) return cmd_zoo(preset, params, prime);
  } catch (const cofrob::io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
