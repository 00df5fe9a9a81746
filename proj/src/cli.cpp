#include "lpfbinom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "lpfbinom/binomial_kernel.hpp"
#include "lpfbinom/errors.hpp"
#include "lpfbinom/factorizer.hpp"
#include "lpfbinom/lpf_identity.hpp"
#include "lpfbinom/pell_conic.hpp"
#include "lpfbinom/torsion_poly.hpp"
#include "lpfbinom/verify.hpp"

namespace lpf::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dec(std::uint64_t v) { return std::to_string(v); }
std::string dec(std::int64_t v) { return std::to_string(v); }
std::string dec(const BigInt& v) { return to_decimal(v); }

Json coeff_array(const IntPolynomial& poly) {
  Json arr = Json::array();
  for (const BigInt& c : poly.coeffs()) arr.push_back(dec(c));
  if (poly.is_zero()) arr.push_back("0");
  return arr;
}

Json record(std::string_view command, Json inputs, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json point_json(const ConicPoint& p) { return Json{{"x", dec(p.x())}, {"y", dec(p.y())}}; }

struct Options {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  std::uint64_t modulus = 0;
  std::int64_t delta = 0;
  std::uint64_t x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  std::uint64_t seed = 1234567;
  std::uint64_t n_min = 0, n_max = 0;
  unsigned shards = 1;
  std::string out_path;
  std::string suite;
  std::uint64_t bound = 0;
  bool confirm = false;
  bool no_trial_division = false;
};

void require_odd_modulus(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw UsageError("n must be an odd integer >= 3, got " + dec(n));
}

int cmd_alpha(const Options& o, std::ostream& out) {
  require_odd_modulus(o.n);
  if (o.r < 2) throw UsageError("r must be >= 2");
  const Classification c = classify(OddModulus(o.n), o.r);
  Json res;
  res["beta"] = dec(c.eval.beta);
  res["alpha"] = dec(c.eval.alpha);
  res["p"] = dec(c.least_prime);
  res["class"] = to_string(c.cls.tag);
  res["expected"] = c.cls.expected ? Json(dec(*c.cls.expected)) : Json(nullptr);
  res["consistent"] = c.consistent ? Json(*c.consistent) : Json(nullptr);
  emit(out, record("alpha", {{"n", dec(o.n)}, {"r", dec(o.r)}}, std::move(res)));
  return kOk;
}

int cmd_beta(const Options& o, std::ostream& out) {
  require_odd_modulus(o.n);
  if (o.r < 2) throw UsageError("r must be >= 2");
  const SymbolEval e = evaluate(OddModulus(o.n), o.r);
  emit(out, record("beta", {{"n", dec(o.n)}, {"r", dec(o.r)}}, {{"beta", dec(e.beta)}, {"alpha", dec(e.alpha)}}));
  return kOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const IntPolynomial psi = psi_recurrence(o.n);
  const bool agree = psi == psi_from_dickson(o.n) && psi == psi_closed_form(o.n);
  Json inputs{{"n", dec(o.n)}};
  Json res;
  res["degree"] = dec(static_cast<std::uint64_t>(psi.degree()));
  res["coeffs"] = coeff_array(psi);
  res["agree"] = agree;
  if (o.modulus != 0) {
    if (o.modulus < 2) throw UsageError("--mod must be >= 2");
    inputs["mod"] = dec(o.modulus);
    Json reduced = Json::array();
    for (const BigInt& c : psi.coeffs()) reduced.push_back(dec(reduce(c, o.modulus)));
    res["coeffs_mod"] = std::move(reduced);
    const IntPolynomial diff = psi - pow_x_minus_2(o.n / 2);
    bool congruent = true;
    for (const BigInt& c : diff.coeffs()) congruent = congruent && reduce(c, o.modulus) == 0;
    res["congruent_to_x_minus_2_power"] = congruent;
  }
  emit(out, record("psi", std::move(inputs), std::move(res)));
  return kOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
  require_odd_modulus(o.n);
  const ResiduePolynomial d = diff_mod(OddModulus(o.n));
  Json coeffs = Json::array();
  for (std::uint64_t c : d.coeffs) coeffs.push_back(dec(c));
  Json res;
  res["coeffs"] = std::move(coeffs);
  const long top = d.top_nonzero_degree();
  res["top_degree"] = top < 0 ? Json(nullptr) : Json(std::to_string(top));
  res["top_value"] = top < 0 ? Json(nullptr) : Json(dec(d.coeffs[static_cast<std::size_t>(top)]));
  emit(out, record("diff", {{"n", dec(o.n)}}, std::move(res)));
  return kOk;
}

ConicContext conic_from(const Options& o) {
  if (o.modulus == 0) throw UsageError("--mod is required");
  return ConicContext(o.delta, o.modulus);
}

Json conic_inputs(const Options& o) { return Json{{"delta", dec(o.delta)}, {"mod", dec(o.modulus)}}; }

int cmd_conic_add(const Options& o, std::ostream& out) {
  const ConicContext ctx = conic_from(o);
  const ConicPoint sum = add(ConicPoint(o.x1, o.y1, ctx), ConicPoint(o.x2, o.y2, ctx));
  Json inputs = conic_inputs(o);
  inputs["p1"] = {{"x", dec(o.x1)}, {"y", dec(o.y1)}};
  inputs["p2"] = {{"x", dec(o.x2)}, {"y", dec(o.y2)}};
  emit(out, record("conic-add", std::move(inputs), point_json(sum)));
  return kOk;
}

int cmd_conic_mul(const Options& o, std::ostream& out) {
  const ConicContext ctx = conic_from(o);
  const ConicPoint prod = scalar_mul(o.k, ConicPoint(o.x1, o.y1, ctx));
  Json inputs = conic_inputs(o);
  inputs["k"] = dec(o.k);
  inputs["p"] = {{"x", dec(o.x1)}, {"y", dec(o.y1)}};
  emit(out, record("conic-mul", std::move(inputs), point_json(prod)));
  return kOk;
}

int cmd_torsion(const Options& o, std::ostream& out) {
  const ConicContext ctx = conic_from(o);
  const ConicPoint p(o.x1, o.y1, ctx);
  const bool holds = torsion_x_identity_check(o.n, p);
  Json inputs = conic_inputs(o);
  inputs["n"] = dec(o.n);
  inputs["p"] = {{"x", dec(o.x1)}, {"y", dec(o.y1)}};
  Json res{{"multiple", point_json(scalar_mul(o.n, p))}, {"holds", holds}};
  emit(out, record("torsion-check", std::move(inputs), std::move(res)));
  return kOk;
}

int cmd_fleck(const Options& o, std::ostream& out) {
  require_odd_modulus(o.n);
  const bool holds = fleck_holds(OddModulus(o.n), o.r);
  emit(out, record("fleck", {{"n", dec(o.n)}, {"r", dec(o.r)}}, {{"holds", holds}}));
  return kOk;
}

int cmd_wilson(const Options& o, std::ostream& out) {
  if (o.n < 2) throw UsageError("n must be >= 2");
  emit(out, record("wilson", {{"n", dec(o.n)}}, {{"holds", wilson_holds(o.n)}}));
  return kOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  if (o.n < 9 || o.n % 2 == 0) throw UsageError("n must be an odd integer >= 9, got " + dec(o.n));
  const FactorReport rep =
      binary_search_factor(o.n, o.no_trial_division ? TrialDivision::Forbidden : TrialDivision::Permitted);
  Json trace = Json::array();
  for (const auto& [a1, a2] : rep.interval_trace) trace.push_back(Json::array({dec(a1), dec(a2)}));
  Json res;
  res["outcome"] = to_string(rep.outcome);
  res["factor"] = rep.factor ? Json(dec(*rep.factor)) : Json(nullptr);
  res["alpha_evaluations"] = dec(rep.alpha_evaluations);
  res["interval_trace"] = std::move(trace);
  if (rep.confirmation) {
    const FactorConfirmation& c = *rep.confirmation;
    res["precondition"] = c.precondition;
    if (o.confirm) {
      res["confirmation"] = {{"least_prime_factor", dec(c.least_prime)},
                             {"n_is_prime", c.n_is_prime},
                             {"agrees", c.agrees}};
    }
  } else {
    res["precondition"] = nullptr;
  }
  Json inputs{{"n", dec(o.n)}, {"confirm", o.confirm}, {"trial_division", !o.no_trial_division}};
  emit(out, record("factor", std::move(inputs), std::move(res)));
  return kOk;
}

Json scan_record_json(const ScanRecord& rec) {
  Json viol = Json::array();
  for (std::uint64_t r : rec.violations) viol.push_back(dec(r));
  Json res;
  res["kind"] = "record";
  res["p"] = dec(rec.p);
  res["precondition_met"] = rec.precondition_met;
  res["r_lo"] = dec(rec.r_lo);
  res["r_hi"] = dec(rec.r_hi);
  res["vacuous"] = rec.vacuous();
  res["violations"] = std::move(viol);
  return record("scan", {{"n", dec(rec.n)}}, std::move(res));
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.n_min < 3 || o.n_min > o.n_max) throw UsageError("scan needs 3 <= n_min <= n_max");
  if (o.n_min % 2 == 0 || o.n_max % 2 == 0) throw UsageError("scan bounds must be odd");
  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file = std::make_unique<std::ofstream>(o.out_path, std::ios::binary | std::ios::trunc);
    if (!*file) throw IoError("cannot open " + o.out_path + " for writing");
    sink = file.get();
  }
  const ScanSummary s =
      scan_conjecture(o.n_min, o.n_max, o.shards, [&](const ScanRecord& rec) { emit(*sink, scan_record_json(rec)); });
  Json res;
  res["kind"] = "summary";
  res["records"] = dec(s.records);
  res["nonvacuous"] = dec(s.nonvacuous);
  res["alpha_evaluations"] = dec(s.alpha_evaluations);
  res["violations"] = dec(s.violations);
  emit(*sink, record("scan", {{"n_min", dec(o.n_min)}, {"n_max", dec(o.n_max)}}, std::move(res)));
  if (file) {
    file->flush();
    if (!*file) throw IoError("write to " + o.out_path + " failed");
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto result = run_suite(o.suite, o.bound, o.seed);
  if (!result) throw UsageError("unknown suite " + o.suite);
  Json res;
  res["pass"] = result->passed;
  res["checked"] = dec(result->checked);
  if (result->counterexample) {
    Json ce;
    for (const auto& [k, v] : *result->counterexample) ce[k] = v;
    res["counterexample"] = std::move(ce);
  } else {
    res["counterexample"] = nullptr;
  }
  emit(out, record("verify", {{"suite", o.suite}, {"bound", dec(o.bound)}, {"seed", dec(o.seed)}}, std::move(res)));
  return result->passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Least-prime-factor binomial symbol toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* alpha_cmd = app.add_subcommand("alpha", "beta, alpha and theorem classification of (n, r)");
  alpha_cmd->add_option("n", o.n)->required();
  alpha_cmd->add_option("r", o.r)->required();

  auto* beta_cmd = app.add_subcommand("beta", "exact beta(n, r) and its residue");
  beta_cmd->add_option("n", o.n)->required();
  beta_cmd->add_option("r", o.r)->required();

  auto* psi_cmd = app.add_subcommand("psi", "coefficients of Psi_n, ascending degree");
  psi_cmd->add_option("n", o.n)->required();
  psi_cmd->add_option("--mod", o.modulus, "reduce coefficients modulo M");

  auto* diff_cmd = app.add_subcommand("diff", "Psi_n - (X-2)^((n-1)/2) reduced mod n");
  diff_cmd->add_option("n", o.n)->required();

  auto add_conic_flags = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "conic parameter Delta")->required();
    sub->add_option("--mod", o.modulus, "odd modulus m")->required();
  };
  auto* cadd = app.add_subcommand("conic-add", "sum of two conic points");
  cadd->add_option("x1", o.x1)->required();
  cadd->add_option("y1", o.y1)->required();
  cadd->add_option("x2", o.x2)->required();
  cadd->add_option("y2", o.y2)->required();
  add_conic_flags(cadd);

  auto* cmul = app.add_subcommand("conic-mul", "k-fold multiple of a conic point");
  cmul->add_option("k", o.k)->required();
  cmul->add_option("x", o.x1)->required();
  cmul->add_option("y", o.y1)->required();
  add_conic_flags(cmul);

  auto* tors = app.add_subcommand("torsion-check", "X(nP) against (X-2) Psi_n(X)^2 + 2");
  tors->add_option("n", o.n)->required();
  tors->add_option("x", o.x1)->required();
  tors->add_option("y", o.y1)->required();
  add_conic_flags(tors);

  auto* fleck = app.add_subcommand("fleck", "Fleck's congruence for (n, r)");
  fleck->add_option("n", o.n)->required();
  fleck->add_option("r", o.r)->required();

  auto* wilson = app.add_subcommand("wilson", "Wilson's theorem for n");
  wilson->add_option("n", o.n)->required();

  auto* factor = app.add_subcommand("factor", "binary search for the least prime factor");
  factor->add_option("n", o.n)->required();
  factor->add_flag("--confirm", o.confirm, "report a trial-division cross-check");
  factor->add_flag("--no-trial-division", o.no_trial_division, "never consult trial division");

  auto* scan = app.add_subcommand("scan", "check the conjecture over an odd range");
  scan->add_option("n_min", o.n_min)->required();
  scan->add_option("n_max", o.n_max)->required();
  scan->add_option("--out", o.out_path, "write records to PATH instead of stdout");
  scan->add_option("--shards", o.shards, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(
      std::vector<std::string>(suite_names().begin(), suite_names().end())));
  verify->add_option("bound", o.bound)->required();
  verify->add_option("--seed", o.seed, "seed for sampled suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*alpha_cmd) return cmd_alpha(o, out);
    if (*beta_cmd) return cmd_beta(o, out);
    if (*psi_cmd) return cmd_psi(o, out);
    if (*diff_cmd) return cmd_diff(o, out);
    if (*cadd) return cmd_conic_add(o, out);
    if (*cmul) return cmd_conic_mul(o, out);
    if (*tors) return cmd_torsion(o, out);
    if (*fleck) return cmd_fleck(o, out);
    if (*wilson) return cmd_wilson(o, out);
    if (*factor) return cmd_factor(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace lpf::cli
