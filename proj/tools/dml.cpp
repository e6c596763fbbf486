// dml: exact determinantal moments of random density matrices, probability
// reconstruction from moment sequences, and the Monte Carlo harness that
// cross-checks them, exposed as reproducible machine-readable runs.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dml/densities.hpp"
#include "dml/legendre.hpp"
#include "dml/mnatsakanov.hpp"
#include "dml/moment_sequence.hpp"
#include "dml/moments.hpp"
#include "dml/quadrature.hpp"
#include "dml/reference_tables.hpp"
#include "dml/sampler.hpp"

namespace {

using json = nlohmann::ordered_json;
using dml::BigReal;
using dml::Rational;

constexpr const char* kVersion = "0.1.0";
constexpr int kMinPrecision = 16;

int default_precision() {
  if (const char* env = std::getenv("DML_PRECISION_DIGITS")) {
    return std::stoi(env);
  }
  return 64;
}

void check_precision(int digits) {
  if (digits < kMinPrecision)
    throw std::invalid_argument("precision must be at least 16 digits");
}

json tool_header() { return json{{"name", "dml"}, {"version", kVersion}}; }

void emit(const json& artifact, const std::string& output) {
  const std::string text = artifact.dump(2) + "\n";
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw std::runtime_error("cannot open output file '" + output + "'");
    f << text;
  }
  std::cout << text;
}

std::string decimal(const Rational& q, int digits) { return BigReal(q, digits).str(digits); }

struct MomentArgs {
  std::string alpha = "1/2";
  long n = 1, k = 0;
  std::string variable = "bivariate";
  std::string family = "general";  // general | sixbysix | nongeneric
  std::string kind = "rebit_retrit";
  long beta = 2;
  int precision = default_precision();
  std::string output;
};

int run_moment(const MomentArgs& a) {
  check_precision(a.precision);
  const Rational alpha = Rational::from_string(a.alpha);
  Rational value;
  if (a.family == "general") {
    if (a.variable == "det") {
      value = dml::f0_det_moment(alpha, a.k);
    } else if (a.variable == "ptdet") {
      value = dml::pt_moment(alpha, a.n);
    } else if (a.variable == "product") {
      value = dml::product_moment(alpha, a.n);
    } else if (a.variable == "bivariate") {
      value = dml::bivariate_moment(alpha, a.n, a.k);
    } else {
      throw std::invalid_argument("unknown variable '" + a.variable + "'");
    }
  } else if (a.family == "sixbysix") {
    dml::SixBySixKind kind;
    if (a.kind == "rebit_retrit")
      kind = dml::SixBySixKind::rebit_retrit;
    else if (a.kind == "qubit_qutrit")
      kind = dml::SixBySixKind::qubit_qutrit;
    else
      throw std::invalid_argument("unknown kind '" + a.kind + "'");
    value = dml::sixbysix_adjustment(kind, a.n, a.k);
  } else if (a.family == "nongeneric") {
    value = dml::nongeneric_moment(a.beta, a.n, a.k);
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }

  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "moment"},   {"family", a.family}, {"alpha", a.alpha},
                   {"n", a.n},              {"k", a.k},           {"variable", a.variable},
                   {"kind", a.kind},        {"beta", a.beta},     {"precision_digits", a.precision},
                   {"output", a.output}};
  out["result"] = {{"exact", value.str()}, {"decimal", decimal(value, a.precision)}};
  emit(out, a.output);
  return 0;
}

struct TableArgs {
  std::string id = "rebit_pt";
  long n = 1;
  int precision = default_precision();
  std::string output;
};

int run_table(const TableArgs& a) {
  check_precision(a.precision);
  dml::ReferenceTableId id;
  if (a.id == "rebit_pt")
    id = dml::ReferenceTableId::rebit_pt;
  else if (a.id == "rebit_product")
    id = dml::ReferenceTableId::rebit_product;
  else if (a.id == "rebit_degenerate")
    id = dml::ReferenceTableId::rebit_degenerate;
  else
    throw std::invalid_argument("unknown table id '" + a.id + "'");
  const Rational value = dml::table_lookup(id, a.n);
  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "table"},
                   {"id", a.id},
                   {"n", a.n},
                   {"precision_digits", a.precision},
                   {"output", a.output}};
  out["result"] = {{"exact", value.str()}, {"decimal", decimal(value, a.precision)}};
  emit(out, a.output);
  return 0;
}

struct NumeratorArgs {
  std::string family = "rebit";
  long n = 1;
  std::string alpha = "1/2";
  std::string output;
};

int run_numerator(const NumeratorArgs& a) {
  dml::NumeratorFamily fam;
  if (a.family == "rebit")
    fam = dml::NumeratorFamily::rebit;
  else if (a.family == "qubit")
    fam = dml::NumeratorFamily::qubit;
  else if (a.family == "general")
    fam = dml::NumeratorFamily::general;
  else
    throw std::invalid_argument("unknown family '" + a.family + "'");
  const auto poly = dml::numerator_polynomial(fam, a.n, Rational::from_string(a.alpha));
  json coeffs = json::array();
  for (const auto& c : poly.coefficients()) coeffs.push_back(c.str());
  json out;
  out["tool"] = tool_header();
  out["config"] = {
      {"command", "numerator"}, {"family", a.family}, {"n", a.n}, {"alpha", a.alpha}, {"output", a.output}};
  out["result"] = {{"degree", poly.degree()}, {"coefficients_ascending", coeffs}};
  emit(out, a.output);
  return 0;
}

struct EstimateArgs {
  std::string alpha = "1/2";
  std::string variable = "ptdet";
  long num_moments = 100;
  int precision = default_precision();
  std::string method = "legendre";
  std::string output;
};

int run_estimate(const EstimateArgs& a) {
  check_precision(a.precision);
  const auto rec = dml::separability_estimate(
      Rational::from_string(a.alpha), dml::sequence_variable_from_string(a.variable), a.num_moments,
      a.precision, dml::reconstruction_method_from_string(a.method));
  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "estimate"},
                   {"alpha", a.alpha},
                   {"variable", a.variable},
                   {"num_moments", a.num_moments},
                   {"precision_digits", a.precision},
                   {"method", a.method},
                   {"output", a.output}};
  out["result"] = {{"alpha", rec.alpha.str()},
                   {"variable", a.variable},
                   {"n_moments", rec.n_moments},
                   {"precision_digits", rec.precision_digits},
                   {"method", rec.method},
                   {"estimate", rec.estimate.str(a.precision)},
                   {"threshold", rec.threshold.str()}};
  emit(out, a.output);
  return 0;
}

struct QuadratureArgs {
  std::string alpha = "1/2";
  std::string variable = "ptdet";
  int nodes = 20;
  int precision = default_precision();
  bool recurrence_route = false;
  std::string output = "quadrature-rule.csv";
};

int run_quadrature(const QuadratureArgs& a) {
  check_precision(a.precision);
  const auto variable = dml::sequence_variable_from_string(a.variable);
  if (variable == dml::SequenceVariable::det)
    throw std::invalid_argument("quadrature: variable must carry a threshold");
  auto ms = dml::build_moment_sequence(Rational::from_string(a.alpha), variable, 2L * a.nodes + 1,
                                       a.precision);
  const auto rule = dml::gauss_rule(ms, a.nodes, a.precision, a.recurrence_route);
  const BigReal prob = dml::quadrature_threshold_probability(rule, *ms.threshold);

  std::ofstream csv(a.output);
  if (!csv) throw std::runtime_error("cannot open output file '" + a.output + "'");
  csv << "node,weight\n";
  for (int i = 0; i < a.nodes; ++i) {
    csv << rule.nodes[static_cast<std::size_t>(i)].str(a.precision) << ','
        << rule.weights[static_cast<std::size_t>(i)].str(a.precision) << '\n';
  }
  csv << "epsilon_max," << rule.max_abs_eps().str(6) << '\n';

  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "quadrature"},
                   {"alpha", a.alpha},
                   {"variable", a.variable},
                   {"nodes", a.nodes},
                   {"precision_digits", a.precision},
                   {"recurrence_route", a.recurrence_route},
                   {"output", a.output}};
  out["result"] = {{"prob_above_threshold", prob.str(a.precision)},
                   {"threshold", ms.threshold->str()},
                   {"epsilon_max", rule.max_abs_eps().str(6)},
                   {"csv_path", a.output}};
  emit(out, "");
  return 0;
}

struct McArgs {
  std::string ring = "real";
  std::string measure = "hs";
  int n = 1, k = 0, d = 4;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool separability = false;
  long nongeneric_beta = 0;
  std::string output;
};

int run_mc(const McArgs& a) {
  const dml::McOptions opt{a.samples, a.seed, a.threads};
  dml::SampleStats st;
  if (a.nongeneric_beta > 0) {
    st = dml::mc_nongeneric_separability(static_cast<int>(a.nongeneric_beta), opt);
  } else if (a.separability) {
    st = dml::mc_separability_probability(dml::ring_from_string(a.ring),
                                          dml::measure_from_string(a.measure), opt);
  } else {
    st = dml::mc_moment(dml::ring_from_string(a.ring), dml::measure_from_string(a.measure), a.n,
                        a.k, opt, a.d);
  }
  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "mc"},
                   {"ring", a.ring},
                   {"measure", a.measure},
                   {"n", a.n},
                   {"k", a.k},
                   {"d", a.d},
                   {"samples", a.samples},
                   {"seed", a.seed},
                   {"threads", a.threads},
                   {"separability", a.separability},
                   {"nongeneric_beta", a.nongeneric_beta},
                   {"output", a.output}};
  out["result"] = {{"mean", st.mean},   {"stderr", st.stderror}, {"ci_lo", st.ci_lo},
                   {"ci_hi", st.ci_hi}, {"count", st.count},     {"seed", a.seed}};
  emit(out, a.output);
  return 0;
}

struct HistArgs {
  std::string ring = "real";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int bins = 100;
  int threads = 1;
  std::string output = "histogram.csv";
};

int run_hist(const HistArgs& a) {
  const auto h =
      dml::joint_histogram(dml::ring_from_string(a.ring), {a.samples, a.seed, a.threads}, a.bins);
  std::ofstream csv(a.output);
  if (!csv) throw std::runtime_error("cannot open output file '" + a.output + "'");
  dml::write_histogram_csv(h, csv);
  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "hist"}, {"ring", a.ring}, {"samples", a.samples},
                   {"seed", a.seed},    {"bins", a.bins}, {"threads", a.threads},
                   {"output", a.output}};
  out["result"] = {{"total", h.total}, {"csv_path", a.output}};
  emit(out, "");
  return 0;
}

struct DensityArgs {
  std::string metric = "both";
  int grid = 200;
  std::string output = "densities.csv";
};

int run_density(const DensityArgs& a) {
  if (a.grid < 2) throw std::invalid_argument("density: grid must have at least 2 points");
  std::ofstream csv(a.output);
  if (!csv) throw std::runtime_error("cannot open output file '" + a.output + "'");
  csv << "t,f_hs,f_bures\n";
  csv.precision(17);
  for (int i = 1; i <= a.grid; ++i) {
    const double t = static_cast<double>(i) / a.grid;
    csv << t << ',' << dml::hs_det_density(t) << ',' << dml::bures_det_density(t) << '\n';
  }
  json out;
  out["tool"] = tool_header();
  out["config"] = {{"command", "density"}, {"metric", a.metric}, {"grid", a.grid}, {"output", a.output}};
  out["result"] = {{"crossing", dml::hs_bures_crossing()}, {"csv_path", a.output}};
  emit(out, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact determinantal moments, density reconstruction, and sampling for 4x4 and 6x6 random "
      "states"};
  app.require_subcommand(1);

  MomentArgs ma;
  auto* moment = app.add_subcommand("moment", "evaluate an exact closed-form moment");
  moment->add_option("--alpha", ma.alpha, "family parameter as p/q")->capture_default_str();
  moment->add_option("--n", ma.n, "PT-determinant exponent")->capture_default_str();
  moment->add_option("--k", ma.k, "determinant exponent")->capture_default_str();
  moment->add_option("--variable", ma.variable, "det|ptdet|product|bivariate")->capture_default_str();
  moment->add_option("--family", ma.family, "general|sixbysix|nongeneric")->capture_default_str();
  moment->add_option("--kind", ma.kind, "rebit_retrit|qubit_qutrit (sixbysix)")->capture_default_str();
  moment->add_option("--beta", ma.beta, "nongeneric family parameter")->capture_default_str();
  moment->add_option("--precision", ma.precision, "decimal digits")->capture_default_str();
  moment->add_option("--output", ma.output, "also write the JSON artifact here");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "look up a frozen reference-table row");
  table->add_option("--id", ta.id, "rebit_pt|rebit_product|rebit_degenerate")->capture_default_str();
  table->add_option("--n", ta.n, "row (1-based)")->capture_default_str();
  table->add_option("--precision", ta.precision, "decimal digits")->capture_default_str();
  table->add_option("--output", ta.output, "also write the JSON artifact here");

  NumeratorArgs na;
  auto* numerator = app.add_subcommand("numerator", "extract a numerator polynomial");
  numerator->add_option("--family", na.family, "rebit|qubit|general")->capture_default_str();
  numerator->add_option("--n", na.n, "order")->capture_default_str();
  numerator->add_option("--alpha", na.alpha, "family parameter (general)")->capture_default_str();
  numerator->add_option("--output", na.output, "also write the JSON artifact here");

  EstimateArgs ea;
  auto* estimate = app.add_subcommand("estimate", "separability probability from a moment sequence");
  estimate->add_option("--alpha", ea.alpha, "family parameter as p/q")->capture_default_str();
  estimate->add_option("--variable", ea.variable, "ptdet|product")->capture_default_str();
  estimate->add_option("--num-moments", ea.num_moments, "moments (or nodes) to use")
      ->capture_default_str();
  estimate->add_option("--precision", ea.precision, "decimal digits")->capture_default_str();
  estimate->add_option("--method", ea.method, "legendre|mnatsakanov|quadrature")->capture_default_str();
  estimate->add_option("--output", ea.output, "also write the JSON artifact here");

  QuadratureArgs qa;
  auto* quadrature = app.add_subcommand("quadrature", "Gaussian rule from exact moments");
  quadrature->add_option("--alpha", qa.alpha, "family parameter as p/q")->capture_default_str();
  quadrature->add_option("--variable", qa.variable, "ptdet|product")->capture_default_str();
  quadrature->add_option("--nodes", qa.nodes, "rule order")->capture_default_str();
  quadrature->add_option("--precision", qa.precision, "decimal digits")->capture_default_str();
  quadrature->add_flag("--recurrence-route", qa.recurrence_route,
                       "derive the three-term recurrence directly from moments");
  quadrature->add_option("--output", qa.output, "CSV path for the rule")->capture_default_str();

  McArgs ca;
  auto* mc = app.add_subcommand("mc", "Monte Carlo verification runs");
  mc->add_option("--ring", ca.ring, "real|complex|quaternion")->capture_default_str();
  mc->add_option("--measure", ca.measure, "hs|bures")->capture_default_str();
  mc->add_option("--n", ca.n, "PT-determinant exponent")->capture_default_str();
  mc->add_option("--k", ca.k, "determinant exponent")->capture_default_str();
  mc->add_option("--d", ca.d, "matrix dimension (4 or 6)")->capture_default_str();
  mc->add_option("--samples", ca.samples, "sample count")->capture_default_str();
  mc->add_option("--seed", ca.seed, "64-bit decimal seed")->capture_default_str();
  mc->add_option("--threads", ca.threads, "worker cap")->capture_default_str();
  mc->add_flag("--sep", ca.separability, "estimate the separability probability");
  mc->add_option("--nongeneric-beta", ca.nongeneric_beta,
                 "sample the non-generic family with this beta instead");
  mc->add_option("--output", ca.output, "also write the JSON artifact here");

  HistArgs ha;
  auto* hist = app.add_subcommand("hist", "joint (det, PT-det) histogram export");
  hist->add_option("--ring", ha.ring, "real|complex")->capture_default_str();
  hist->add_option("--samples", ha.samples, "sample count")->capture_default_str();
  hist->add_option("--seed", ha.seed, "64-bit decimal seed")->capture_default_str();
  hist->add_option("--bins", ha.bins, "bins per axis")->capture_default_str();
  hist->add_option("--threads", ha.threads, "worker cap")->capture_default_str();
  hist->add_option("--output", ha.output, "CSV path")->capture_default_str();

  DensityArgs da;
  auto* density = app.add_subcommand("density", "closed-form density grid export");
  density->add_option("--metric", da.metric, "hs|bures|both")->capture_default_str();
  density->add_option("--grid", da.grid, "grid points")->capture_default_str();
  density->add_option("--output", da.output, "CSV path")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*moment) return run_moment(ma);
    if (*table) return run_table(ta);
    if (*numerator) return run_numerator(na);
    if (*estimate) return run_estimate(ea);
    if (*quadrature) return run_quadrature(qa);
    if (*mc) return run_mc(ca);
    if (*hist) return run_hist(ha);
    if (*density) return run_density(da);
  } catch (const std::exception& e) {
    json err;
    err["tool"] = tool_header();
    err["error"] = {{"message", e.what()}};
    std::cerr << err.dump(2) << std::endl;
    return 1;
  }
  return 2;
}
