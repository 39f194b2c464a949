// shiftcharge: exact-arithmetic analysis of weighted shifts whose moment
// sequences come from signed atomic representing charges. Subcommands expose
// the library pipelines; all numeric work happens in the library.
//
// Exit codes: 0 success, 1 usage/parse/validation error, 2 negative
// mathematical verdict (NotPSD scan, no multiplier, failed alternation,
// negative asymptotic sign).

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftcharge/charge.hpp"
#include "shiftcharge/charge_json.hpp"
#include "shiftcharge/che.hpp"
#include "shiftcharge/cpd.hpp"
#include "shiftcharge/errors.hpp"
#include "shiftcharge/grws.hpp"
#include "shiftcharge/hankel.hpp"
#include "shiftcharge/rational.hpp"
#include "shiftcharge/seqcalc.hpp"

namespace {

using nlohmann::ordered_json;
using namespace shiftcharge;

Rat parse_rat(const std::string& text, const char* flag) {
  try {
    return rat_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Charge load_charge(const std::string& path) {
  return charge_from_json_string(read_text(path));
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

ordered_json witness_json(const std::optional<MinorWitness>& w) {
  if (!w) return nullptr;
  ordered_json j;
  j["indices"] = w->index_set;
  j["det"] = rat_to_string(w->det);
  return j;
}

ordered_json report_json(const HankelReport& report) {
  ordered_json j;
  j["k"] = report.k;
  j["m_range"] = report.m_range;
  j["overall"] = psd_verdict_name(report.overall);
  if (report.first_failure) {
    j["first_failure"] = *report.first_failure;
  } else {
    j["first_failure"] = nullptr;
  }
  ordered_json per_m = ordered_json::array();
  for (std::size_t m = 0; m < report.per_m.size(); ++m) {
    ordered_json row;
    row["m"] = m;
    row["verdict"] = psd_verdict_name(report.per_m[m].verdict);
    row["witness"] = witness_json(report.per_m[m].witness);
    per_m.push_back(std::move(row));
  }
  j["per_m"] = std::move(per_m);
  return j;
}

ordered_json dominance_json(const DominanceBound& d) {
  ordered_json j;
  j["B"] = rat_to_string(d.B);
  j["s"] = rat_to_string(d.s);
  j["L"] = rat_to_string(d.L);
  j["n_star"] = d.n_star;
  return j;
}

ordered_json certificate_json(const KhypCertificate& cert) {
  ordered_json j;
  j["kind"] = certificate_kind_name(cert.kind);
  if (cert.failing_size) {
    j["failing_size"] = *cert.failing_size;
  } else {
    j["failing_size"] = nullptr;
  }
  if (cert.threshold) {
    j["threshold"] = *cert.threshold;
  } else {
    j["threshold"] = nullptr;
  }
  return j;
}

std::string sign_str(Sign s) { return std::string(1, sign_char(s)); }

std::size_t sweep_thread_count(std::size_t rows) {
  std::size_t count = std::thread::hardware_concurrency();
  if (count == 0) count = 1;
  if (const char* env = std::getenv("SHIFTCHARGE_THREADS")) {
    char* end = nullptr;
    unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      count = static_cast<std::size_t>(parsed);
    }
  }
  if (count > rows) count = rows;
  if (count == 0) count = 1;
  return count;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::string p, N, D;
  unsigned long depth = 12;
  bool as_json = false;
};

int run_classify(const ClassifyArgs& args) {
  GrwsParams params{parse_rat(args.p, "--p"), parse_rat(args.N, "--N"),
                    parse_rat(args.D, "--D")};
  validate_params(params);
  Sector sector = classify_sector(params);
  std::optional<SignPattern> expected =
      expected_sign_pattern(sector, args.depth + 1);
  if (args.as_json) {
    ordered_json j;
    j["sector"] = sector_name(sector);
    if (sector.special_line) {
      j["special_line"] = *sector.special_line;
    } else {
      j["special_line"] = nullptr;
    }
    if (sector.iv_band) {
      j["iv_band"] = *sector.iv_band;
    } else {
      j["iv_band"] = nullptr;
    }
    if (expected) {
      j["expected_pattern"] = expected->str();
    } else {
      j["expected_pattern"] = nullptr;
    }
    write_text("", j.dump() + "\n");
  } else {
    std::ostringstream out;
    out << "sector: " << sector_name(sector) << "\n";
    out << "special_line: ";
    if (sector.special_line) {
      out << "j=" << *sector.special_line;
    } else {
      out << "none";
    }
    out << "\n";
    out << "expected_pattern: " << (expected ? expected->str() : "unknown")
        << "\n";
    write_text("", out.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// khyp

struct KhypArgs {
  std::string charge_path;
  std::string p, N, D;
  std::string epsilon = "1/1000000000000";
  unsigned long min_depth = 12;
  std::size_t k = 2;
  std::size_t m_range = 10;
};

int run_khyp(const KhypArgs& args) {
  Charge charge = Charge(std::vector<Atom>{Atom{Rat(1), Rat(1)}});
  std::optional<MomentSeq> exact;
  if (!args.charge_path.empty()) {
    charge = load_charge(args.charge_path);
  } else {
    GrwsParams params{parse_rat(args.p, "--p"), parse_rat(args.N, "--N"),
                      parse_rat(args.D, "--D")};
    GrwsCharge built =
        grws_charge(params, parse_rat(args.epsilon, "--epsilon"),
                    args.min_depth);
    charge = built.charge;
    exact = moments_from_weights(grws_weights(params));
  }

  CertifiedKhypReport certified = k_hyponormality_certified(
      charge, args.k, args.m_range, exact ? &*exact : nullptr);

  ordered_json j = report_json(certified.report);
  std::size_t det_size = args.k + 1;
  j["asymptotic_det_size"] = det_size;
  try {
    j["asymptotic_sign"] = sign_str(asymptotic_k_det_sign(charge, det_size));
  } catch (const TooFewAtomsError&) {
    j["asymptotic_sign"] = nullptr;
  }
  try {
    j["dominance"] = dominance_json(dominance_threshold(charge, det_size));
  } catch (const TooFewAtomsError&) {
    j["dominance"] = nullptr;
  }
  j["certificate"] = certificate_json(certified.certificate);
  write_text("", j.dump() + "\n");
  return certified.report.overall == PsdVerdict::NotPSD ? 2 : 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string p;
  std::string N_lo, N_hi, D_lo, D_hi;
  std::size_t N_steps = 1, D_steps = 1;
  unsigned long depth = 12;
  std::size_t khyp_max = 3;
  std::size_t m_range = 10;
  std::string epsilon = "1/1000000000000";
  std::string out;
};

std::vector<Rat> grid_axis(const Rat& lo, const Rat& hi, std::size_t steps,
                           const char* axis) {
  if (steps < 1) throw InvalidParamsError(std::string(axis) + ": steps >= 1");
  if (lo > hi) throw InvalidParamsError(std::string(axis) + ": lo > hi");
  if (rat_abs(lo) >= 1 || rat_abs(hi) >= 1) {
    throw InvalidParamsError(std::string(axis) +
                             ": range must stay inside the open unit square");
  }
  std::vector<Rat> points;
  points.reserve(steps);
  if (steps == 1) {
    points.push_back(lo);
    return points;
  }
  Rat span = (hi - lo) / Rat(static_cast<unsigned long>(steps - 1));
  for (std::size_t i = 0; i < steps; ++i) {
    points.push_back(Rat(lo + Rat(static_cast<unsigned long>(i)) * span));
  }
  return points;
}

std::string sweep_row(const GrwsParams& params, unsigned long depth,
                      std::size_t khyp_max, std::size_t m_range,
                      const Rat& epsilon) {
  Sector sector = classify_sector(params);
  SignPattern pattern = grws_density_signs(params, depth + 1);

  MomentSeq moments = moments_from_weights(grws_weights(params));
  std::size_t max_passing = 0;
  std::string verdicts;
  bool chain_alive = true;
  for (std::size_t k = 1; k <= khyp_max; ++k) {
    HankelReport report = k_hyponormality_test(moments, k, m_range);
    if (!verdicts.empty()) verdicts += ';';
    verdicts += psd_verdict_name(report.overall);
    if (chain_alive && report.overall != PsdVerdict::NotPSD) {
      max_passing = k;
    } else {
      chain_alive = false;
    }
  }

  std::string cpd_field = "cpd=";
  try {
    GrwsCharge built = grws_charge(params, epsilon, depth);
    CpdVerdict verdict = find_cpd_weight_multipliers(built.charge);
    cpd_field += cpd_status_name(verdict.status);
    if (!verdict.k_values.empty()) {
      cpd_field += '(';
      for (std::size_t i = 0; i < verdict.k_values.size(); ++i) {
        if (i > 0) cpd_field += '|';
        cpd_field += rat_to_string(verdict.k_values[i]);
      }
      cpd_field += ')';
    }
  } catch (const Error&) {
    cpd_field += "Error";
  }
  if (!verdicts.empty()) verdicts += ';';
  verdicts += cpd_field;

  std::ostringstream row;
  row << rat_to_string(params.p) << ',' << rat_to_string(params.N) << ','
      << rat_to_string(params.D) << ',' << sector_name(sector) << ',';
  if (sector.special_line) {
    row << *sector.special_line;
  } else {
    row << '-';
  }
  row << ',' << depth << ',' << pattern.str() << ',' << max_passing << ','
      << verdicts << '\n';
  return row.str();
}

int run_sweep(const SweepArgs& args) {
  Rat p = parse_rat(args.p, "--p");
  if (p <= 1) throw InvalidParamsError("p must exceed 1");
  Rat epsilon = parse_rat(args.epsilon, "--epsilon");
  std::vector<Rat> n_axis = grid_axis(parse_rat(args.N_lo, "--N-lo"),
                                      parse_rat(args.N_hi, "--N-hi"),
                                      args.N_steps, "N");
  std::vector<Rat> d_axis = grid_axis(parse_rat(args.D_lo, "--D-lo"),
                                      parse_rat(args.D_hi, "--D-hi"),
                                      args.D_steps, "D");

  std::vector<GrwsParams> grid;
  grid.reserve(n_axis.size() * d_axis.size());
  for (const Rat& n : n_axis) {
    for (const Rat& d : d_axis) {
      grid.push_back(GrwsParams{p, n, d});
    }
  }

  std::vector<std::string> rows(grid.size());
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      try {
        rows[i] =
            sweep_row(grid[i], args.depth, args.khyp_max, args.m_range, epsilon);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::size_t thread_count = sweep_thread_count(grid.size());
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::string csv =
      "p,N,D,sector,special_line_j,depth,sign_pattern,khyp_max_tested,"
      "verdicts\n";
  for (const std::string& row : rows) csv += row;
  write_text(args.out, csv);
  return 0;
}

// ---------------------------------------------------------------------------
// thin commands

struct ChargeArgs {
  std::string p, N, D;
  std::string epsilon = "1/1000000000000";
  unsigned long min_depth = 0;
  std::string out;
};

int run_charge(const ChargeArgs& args) {
  GrwsParams params{parse_rat(args.p, "--p"), parse_rat(args.N, "--N"),
                    parse_rat(args.D, "--D")};
  GrwsCharge built =
      grws_charge(params, parse_rat(args.epsilon, "--epsilon"), args.min_depth);
  write_text(args.out, charge_to_json_string(built.charge) + "\n");
  return 0;
}

struct MomentsArgs {
  std::string charge_path;
  std::size_t count = 16;
  bool weights = false;
};

int run_moments(const MomentsArgs& args) {
  Charge charge = load_charge(args.charge_path);
  ordered_json j;
  if (args.weights) {
    try {
      WeightSeq w = weights_from_moments(moments_of_charge(charge), args.count);
      ordered_json values = ordered_json::array();
      for (std::size_t n = 0; n + 1 < args.count; ++n) {
        values.push_back(rat_to_string(w.square_at(n)));
      }
      j["weight_squares"] = std::move(values);
    } catch (const ZeroMomentError& e) {
      j["error"] = e.what();
      write_text("", j.dump() + "\n");
      return 2;
    } catch (const NonpositiveRatioError& e) {
      j["error"] = e.what();
      write_text("", j.dump() + "\n");
      return 2;
    }
  } else {
    ordered_json values = ordered_json::array();
    for (std::size_t n = 0; n < args.count; ++n) {
      values.push_back(
          rat_to_string(moment(charge, static_cast<unsigned long>(n))));
    }
    j["moments"] = std::move(values);
  }
  write_text("", j.dump() + "\n");
  return 0;
}

struct ConvolveArgs {
  std::string a_path, b_path;
  std::string out;
};

int run_convolve(const ConvolveArgs& args) {
  Charge a = load_charge(args.a_path);
  Charge b = load_charge(args.b_path);
  write_text(args.out, charge_to_json_string(convolve(a, b)) + "\n");
  return 0;
}

struct CpdMultArgs {
  std::string charge_path;
};

int run_cpd_mult(const CpdMultArgs& args) {
  Charge charge = load_charge(args.charge_path);
  CpdVerdict verdict = find_cpd_weight_multipliers(charge);
  ordered_json j;
  j["status"] = cpd_status_name(verdict.status);
  ordered_json ks = ordered_json::array();
  for (const Rat& k : verdict.k_values) ks.push_back(rat_to_string(k));
  j["k_values"] = std::move(ks);
  j["tail_caveat"] = verdict.tail_caveat;
  ordered_json certs = ordered_json::array();
  for (const Charge& cert : verdict.certificates) {
    certs.push_back(charge_to_json(cert));
  }
  j["certificates"] = std::move(certs);
  write_text("", j.dump() + "\n");
  return verdict.status == CpdStatus::NoMultiplier ? 2 : 0;
}

struct CheBuildArgs {
  std::string sigma_path;
  std::string out;
};

int run_che_build(const CheBuildArgs& args) {
  Charge sigma = load_charge(args.sigma_path);
  write_text(args.out, charge_to_json_string(che_charge_from_sigma(sigma)) + "\n");
  return 0;
}

struct CheCheckArgs {
  std::string charge_path;
  std::size_t depth = 8;
  std::size_t horizon = 16;
};

int run_che_check(const CheCheckArgs& args) {
  Charge charge = load_charge(args.charge_path);
  MomentSeq moments = moments_of_charge(charge);
  CheckVerdict ca = completely_alternating_check(moments, args.depth,
                                                 args.horizon);
  ordered_json j;
  j["completely_alternating"] = ordered_json();
  j["completely_alternating"]["pass"] = ca.pass;
  if (ca.witness) {
    j["completely_alternating"]["witness"] = {ca.witness->first,
                                              ca.witness->second};
  } else {
    j["completely_alternating"]["witness"] = nullptr;
  }
  try {
    LevyKhinchinData data = levy_khinchin_of_charge(charge);
    ordered_json lk;
    lk["a"] = rat_to_string(data.a);
    lk["b"] = rat_to_string(data.b);
    lk["nu"] = charge_to_json(data.nu);
    j["levy_khinchin"] = std::move(lk);
    j["shape_error"] = nullptr;
    DeltaMeasure dm = delta_measure_of_charge(charge);
    Integrability integ = integrability_test(dm);
    ordered_json ij;
    ij["finite"] = integ.finite;
    ij["value"] = rat_to_string(integ.value);
    ij["error_bound"] = rat_to_string(integ.error_bound);
    j["integrability"] = std::move(ij);
  } catch (const WrongShapeError& e) {
    j["levy_khinchin"] = nullptr;
    j["shape_error"] = e.what();
    j["integrability"] = nullptr;
  } catch (const AtomAtOneError& e) {
    j["levy_khinchin"] = nullptr;
    j["shape_error"] = e.what();
    j["integrability"] = nullptr;
  }
  write_text("", j.dump() + "\n");
  return ca.pass ? 0 : 2;
}

struct AsympSignArgs {
  std::string charge_path;
  std::size_t k = 2;
};

int run_asymp_sign(const AsympSignArgs& args) {
  Charge charge = load_charge(args.charge_path);
  Sign sign = asymptotic_k_det_sign(charge, args.k);
  ordered_json j;
  j["k"] = args.k;
  j["sign"] = sign_str(sign);
  try {
    j["dominance"] = dominance_json(dominance_threshold(charge, args.k));
  } catch (const TooFewAtomsError&) {
    j["dominance"] = nullptr;
  }
  write_text("", j.dump() + "\n");
  return sign == Sign::Minus ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of weighted shifts via signed atomic representing "
      "charges"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand(
      "classify", "Locate (N, D) in the parameter square and report the "
                  "expected density sign pattern");
  classify->add_option("--p", classify_args.p, "ratio p > 1")->required();
  classify->add_option("--N", classify_args.N, "numerator offset, |N| < 1")
      ->required();
  classify->add_option("--D", classify_args.D, "denominator offset, |D| < 1")
      ->required();
  classify->add_option("--depth", classify_args.depth,
                       "pattern length is depth + 1");
  classify->add_flag("--json", classify_args.as_json, "emit JSON");

  KhypArgs khyp_args;
  CLI::App* khyp = app.add_subcommand(
      "khyp", "Scan (k+1)x(k+1) moment matrices for positive semidefiniteness "
              "and certify the verdict");
  khyp->add_option("--charge", khyp_args.charge_path, "charge JSON file");
  khyp->add_option("--p", khyp_args.p, "ratio p > 1");
  khyp->add_option("--N", khyp_args.N, "numerator offset");
  khyp->add_option("--D", khyp_args.D, "denominator offset");
  khyp->add_option("--epsilon", khyp_args.epsilon, "truncation tail bound");
  khyp->add_option("--depth", khyp_args.min_depth,
                   "minimum truncation depth for --p/--N/--D input");
  khyp->add_option("--k", khyp_args.k, "hyponormality level")->required();
  khyp->add_option("--m-range", khyp_args.m_range, "bases m = 0..m_range");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Classify a rational grid of (N, D) points and emit CSV");
  sweep->add_option("--p", sweep_args.p, "ratio p > 1")->required();
  sweep->add_option("--N-lo", sweep_args.N_lo, "N axis start")->required();
  sweep->add_option("--N-hi", sweep_args.N_hi, "N axis end")->required();
  sweep->add_option("--N-steps", sweep_args.N_steps, "N axis point count")
      ->required();
  sweep->add_option("--D-lo", sweep_args.D_lo, "D axis start")->required();
  sweep->add_option("--D-hi", sweep_args.D_hi, "D axis end")->required();
  sweep->add_option("--D-steps", sweep_args.D_steps, "D axis point count")
      ->required();
  sweep->add_option("--depth", sweep_args.depth, "sign pattern depth");
  sweep->add_option("--khyp-max", sweep_args.khyp_max,
                    "test k-hyponormality for k = 1..khyp_max");
  sweep->add_option("--m-range", sweep_args.m_range, "bases m = 0..m_range");
  sweep->add_option("--epsilon", sweep_args.epsilon, "truncation tail bound");
  sweep->add_option("--out", sweep_args.out, "output CSV path (default stdout)");

  ChargeArgs charge_args;
  CLI::App* charge_cmd = app.add_subcommand(
      "charge", "Emit the representing charge of a shift with weights "
                "sqrt((p^n + N)/(p^n + D)) as JSON");
  charge_cmd->add_option("--p", charge_args.p, "ratio p > 1")->required();
  charge_cmd->add_option("--N", charge_args.N, "numerator offset")->required();
  charge_cmd->add_option("--D", charge_args.D, "denominator offset")
      ->required();
  charge_cmd->add_option("--epsilon", charge_args.epsilon,
                         "truncation tail bound");
  charge_cmd->add_option("--depth", charge_args.min_depth,
                         "minimum truncation depth");
  charge_cmd->add_option("--out", charge_args.out,
                         "output path (default stdout)");

  MomentsArgs moments_args;
  CLI::App* moments_cmd = app.add_subcommand(
      "moments", "Evaluate the moment sequence of a charge");
  moments_cmd->add_option("--charge", moments_args.charge_path,
                          "charge JSON file")
      ->required();
  moments_cmd->add_option("--count", moments_args.count,
                          "number of moments to emit");
  moments_cmd->add_flag("--weights", moments_args.weights,
                        "emit weight squares gamma_{n+1}/gamma_n instead");

  ConvolveArgs convolve_args;
  CLI::App* convolve_cmd = app.add_subcommand(
      "convolve", "Multiplicative convolution of two charges");
  convolve_cmd->add_option("--a", convolve_args.a_path, "first charge JSON")
      ->required();
  convolve_cmd->add_option("--b", convolve_args.b_path, "second charge JSON")
      ->required();
  convolve_cmd->add_option("--out", convolve_args.out,
                           "output path (default stdout)");

  CpdMultArgs cpd_args;
  CLI::App* cpd_cmd = app.add_subcommand(
      "cpd-mult", "Weight-square multipliers k whose second difference "
                  "charge is single-signed");
  cpd_cmd->add_option("--charge", cpd_args.charge_path, "charge JSON file")
      ->required();

  CheBuildArgs che_build_args;
  CLI::App* che_build_cmd = app.add_subcommand(
      "che-build", "Build the charge (1 + |sigma|) delta_1 - sigma from a "
                   "positive sigma on [0, 1)");
  che_build_cmd->add_option("--sigma", che_build_args.sigma_path,
                            "sigma charge JSON")
      ->required();
  che_build_cmd->add_option("--out", che_build_args.out,
                            "output path (default stdout)");

  CheCheckArgs che_check_args;
  CLI::App* che_check_cmd = app.add_subcommand(
      "che-check", "Check complete alternation of a charge's moments and "
                   "extract its representation data");
  che_check_cmd->add_option("--charge", che_check_args.charge_path,
                            "charge JSON file")
      ->required();
  che_check_cmd->add_option("--depth", che_check_args.depth,
                            "difference depth");
  che_check_cmd->add_option("--horizon", che_check_args.horizon,
                            "index horizon");

  AsympSignArgs asymp_args;
  CLI::App* asymp_cmd = app.add_subcommand(
      "asymp-sign", "Eventual sign of the k x k moment determinants, with "
                    "dominance threshold");
  asymp_cmd->add_option("--charge", asymp_args.charge_path, "charge JSON file")
      ->required();
  asymp_cmd->add_option("--k", asymp_args.k, "determinant size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify) return run_classify(classify_args);
    if (*khyp) {
      bool have_charge = !khyp_args.charge_path.empty();
      bool have_grws = !khyp_args.p.empty();
      if (have_charge == have_grws) {
        std::cerr << "khyp: provide either --charge or --p/--N/--D\n";
        return 1;
      }
      if (have_grws && (khyp_args.N.empty() || khyp_args.D.empty())) {
        std::cerr << "khyp: --p requires --N and --D\n";
        return 1;
      }
      return run_khyp(khyp_args);
    }
    if (*sweep) return run_sweep(sweep_args);
    if (*charge_cmd) return run_charge(charge_args);
    if (*moments_cmd) return run_moments(moments_args);
    if (*convolve_cmd) return run_convolve(convolve_args);
    if (*cpd_cmd) return run_cpd_mult(cpd_args);
    if (*che_build_cmd) return run_che_build(che_build_args);
    if (*che_check_cmd) return run_che_check(che_check_args);
    if (*asymp_cmd) return run_asymp_sign(asymp_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
