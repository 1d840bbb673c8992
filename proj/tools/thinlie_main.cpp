#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thinlie/freelie_oracle.hpp"
#include "thinlie/identity_verifier.hpp"
#include "thinlie/presets.hpp"
#include "thinlie/thinanalysis.hpp"

using namespace thinlie;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::uint64_t p = 0, q = 0, s = 1;
  unsigned k = 1;
  std::string lambda = "0";
  std::string presentation_file;
  unsigned max_degree = 0;  // 0 = default
  bool full_consistency = false;
  std::string label;
  std::string output;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_params = true) {
  auto* pres = cmd->add_option("--presentation", o.presentation_file,
                               "presentation file (header + one relator per line)");
  if (with_params) {
    auto* p = cmd->add_option("--p", o.p, "characteristic (prime > 3)");
    auto* q = cmd->add_option("--q", o.q, "second diamond degree (power of p, > 5)");
    auto* s = cmd->add_option("--s", o.s, "pattern period exponent (>= 1)");
    auto* l = cmd->add_option("--lambda", o.lambda,
                              "finite diamond type: integer or field element text");
    auto* k = cmd->add_option("--k", o.k, "field extension degree for lambda");
    for (auto* opt : {p, q, s, l, k}) pres->excludes(opt);
  }
  cmd->add_option("--max-degree,-D", o.max_degree, "compute the algebra up to this degree");
  cmd->add_flag("--full-consistency", o.full_consistency,
                "impose the redundant antisymmetry consistency rows as well");
  cmd->add_option("--label", o.label, "label recorded in reports");
  cmd->add_option("--output,-o", o.output, "write the JSON report here (default: stdout)");
  cmd->add_flag("--timings", o.timings,
                "include wall-clock timings (omitted by default so reports are byte-identical)");
}

struct Resolved {
  Presentation pres;
  unsigned max_degree;
  bool pattern_known = false;  // preset parameters available for matching
};

Resolved resolve(const CommonOpts& o) {
  Resolved r;
  if (!o.presentation_file.empty()) {
    r.pres = read_presentation_file(o.presentation_file);
  } else {
    if (o.p == 0 || o.q == 0)
      throw CLI::ValidationError("--p and --q are required without --presentation");
    auto field = Field::make(o.p, o.k);
    const Fel lam = field->parse(o.lambda);
    if (lam.is_zero())
      r.pres = nottingham_mixed_lambda0(o.p, o.q, o.s, field);
    else
      r.pres = nottingham_mixed({o.p, o.q, o.s, lam, field});
  }
  if (!o.label.empty()) r.pres.label = o.label;
  r.pattern_known = r.pres.s >= 1 && r.pres.q >= 7;
  if (o.max_degree != 0) {
    r.max_degree = o.max_degree;
  } else {
    // two finite-type periods plus room for the extra relator of the
    // lambda = 0 variant
    std::uint64_t ps = 1;
    for (std::uint64_t i = 0; i < r.pres.s; ++i) ps *= r.pres.field->p();
    const std::uint64_t qq = r.pres.q >= 3 ? r.pres.q : 7;
    r.max_degree = unsigned((2 * ps + 2) * (qq - 1) + 6);
  }
  unsigned max_rel = 0;
  for (const auto& rel : r.pres.relators)
    if (!rel.is_zero()) max_rel = std::max(max_rel, rel.degree());
  if (r.max_degree < max_rel + 2)
    std::cerr << "warning: max degree " << r.max_degree
              << " is below the highest relator degree + 2 (" << max_rel + 2
              << "); the analysis will be horizon-limited\n";
  return r;
}

ordered_json params_json(const Presentation& p) {
  return ordered_json{{"p", p.field->p()},
                      {"q", p.q},
                      {"k", p.field->k()},
                      {"s", p.s},
                      {"lambda", p.lambda ? p.lambda->str() : "0"},
                      {"modulus", p.field->modulus()}};
}

void emit(const ordered_json& j, const CommonOpts& o) {
  if (o.output.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw std::runtime_error("cannot write " + o.output);
  f << j.dump(2) << "\n";
}

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_build(const CommonOpts& o, const std::string& dump_path) {
  const auto t0 = std::chrono::steady_clock::now();
  Resolved r = resolve(o);
  auto alg = GradedAlgebra::create(r.pres, {o.full_consistency, 4096});
  alg.extend_to(r.max_degree);
  ordered_json j;
  j["version"] = 1;
  j["command"] = "build";
  j["params"] = params_json(r.pres);
  j["label"] = r.pres.label;
  j["max_degree"] = r.max_degree;
  j["dims"] = alg.dims();
  j["finite_at"] = alg.finite_at() ? ordered_json(*alg.finite_at()) : ordered_json(nullptr);
  if (o.timings) j["timings"] = {{"total_s", secs_since(t0)}};
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw std::runtime_error("cannot write " + dump_path);
    f << alg.dump().dump(2) << "\n";
  }
  emit(j, o);
  return 0;
}

struct Analyzed {
  GradedAlgebra n;
  GradedAlgebra l;
  ThinReport rep;
  bool pattern_known;
};

Analyzed analyze_pipeline(const CommonOpts& o, unsigned iterations) {
  Resolved r = resolve(o);
  auto n = GradedAlgebra::create(r.pres, {o.full_consistency, 4096});
  n.extend_to(r.max_degree);
  auto l = n.central_quotient(r.max_degree - 1, iterations);
  auto rep = diamond_report(l, r.pres.q);
  if (r.pattern_known)
    match_expected_pattern(rep, r.pres.field->p(), r.pres.q, r.pres.s,
                           r.pres.lambda ? *r.pres.lambda : r.pres.field->zero());
  return {std::move(n), std::move(l), std::move(rep), r.pattern_known};
}

int cmd_analyze(const CommonOpts& o, unsigned iterations) {
  const auto t0 = std::chrono::steady_clock::now();
  Analyzed a = analyze_pipeline(o, iterations);
  ordered_json j = report_to_json(a.rep);
  j["n_dims"] = a.n.dims();
  if (o.timings) j["timings"] = {{"total_s", secs_since(t0)}};
  emit(j, o);
  const bool ok = a.rep.verdicts.thin && (!a.pattern_known || a.rep.verdicts.pattern);
  return ok ? 0 : 1;
}

int cmd_verify(const CommonOpts& o, unsigned iterations, std::vector<std::string> suites,
               std::optional<unsigned> at) {
  const auto t0 = std::chrono::steady_clock::now();
  Analyzed a = analyze_pipeline(o, iterations);
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
  std::vector<SuiteResult> results;
  std::size_t failures = 0;
  for (const auto& s : suites) {
    results.push_back(verify_suite(a.l, &a.n, a.rep, s, at));
    failures += results.back().failures();
  }
  ordered_json j = report_to_json(a.rep);
  j["checks"]["suites"] = suites_to_json(results);
  if (o.timings) j["timings"] = {{"total_s", secs_since(t0)}};
  emit(j, o);
  const bool ok = failures == 0 && a.rep.verdicts.thin && (!a.pattern_known || a.rep.verdicts.pattern);
  return ok ? 0 : 1;
}

int cmd_oracle_check(const CommonOpts& o, unsigned maxd) {
  if (maxd > 12) throw CLI::ValidationError("--maxd is capped at 12");
  Resolved r = resolve(o);
  auto alg = GradedAlgebra::create(r.pres, {o.full_consistency, 4096});
  alg.extend_to(maxd);
  auto oracle = brute_quotient_dims(r.pres, maxd);
  ordered_json j;
  j["version"] = 1;
  j["command"] = "oracle-check";
  j["params"] = params_json(r.pres);
  j["maxd"] = maxd;
  bool equal = true;
  ordered_json engine = ordered_json::array(), brute = ordered_json::array();
  for (unsigned d = 1; d <= maxd; ++d) {
    engine.push_back(alg.dim(d));
    brute.push_back(oracle[d]);
    equal = equal && alg.dim(d) == oracle[d];
  }
  j["engine_dims"] = engine;
  j["oracle_dims"] = brute;
  j["equal"] = equal;
  emit(j, o);
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for graded Lie algebras presented on two degree-1 generators:\n"
               "degree-by-degree construction over GF(p^k), central quotients, diamond\n"
               "classification and identity checking"};
  app.require_subcommand(1);

  CommonOpts bo, ao, vo, oo;
  std::string dump_path;
  unsigned iterations = 1, v_iterations = 1, maxd = 12;
  std::vector<std::string> suites;
  std::optional<unsigned> at;
  unsigned at_raw = 0;

  auto* build = app.add_subcommand("build", "construct the graded algebra and report dimensions");
  add_common(build, bo);
  build->add_option("--dump", dump_path, "write the full algebra (dims, definitions, actions)");

  auto* analyze =
      app.add_subcommand("analyze", "build, take the central quotient, classify diamonds");
  add_common(analyze, ao);
  analyze->add_option("--quotient-iterations", iterations, "central quotients to apply (default 1)");

  auto* verify = app.add_subcommand("verify", "analyze and machine-check the identity suites");
  add_common(verify, vo);
  verify->add_option("--quotient-iterations", v_iterations,
                     "central quotients to apply (default 1)");
  verify->add_option("--suite", suites, "suite name (repeatable) or 'all'");
  auto* at_opt = verify->add_option("--at", at_raw, "restrict suites to one site index k");

  auto* oracle = app.add_subcommand("oracle-check",
                                    "compare engine dimensions against the brute-force oracle");
  add_common(oracle, oo);
  oracle->add_option("--maxd", maxd, "top degree for the comparison (<= 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(bo, dump_path);
    if (analyze->parsed()) return cmd_analyze(ao, iterations);
    if (verify->parsed()) {
      if (at_opt->count() > 0) at = at_raw;
      return cmd_verify(vo, v_iterations, suites, at);
    }
    if (oracle->parsed()) return cmd_oracle_check(oo, maxd);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    // bad --at sites, horizons, degree caps: configuration errors
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
