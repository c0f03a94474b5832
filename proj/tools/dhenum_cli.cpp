// Command-line front end: exact and asymptotic counting, uniform sampling,
// family sweeps and the identity verification suite.

#include <dhenum/asymptotics.hpp>
#include <dhenum/core_model.hpp>
#include <dhenum/exact_oracle.hpp>
#include <dhenum/families.hpp>
#include <dhenum/json_io.hpp>
#include <dhenum/rng.hpp>
#include <dhenum/sampler.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;
using namespace dhenum;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitEmptyEnsemble = 4;

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::budget_exceeded:
    case errc::reject_budget_exceeded:
      return kExitBudget;
    case errc::empty_ensemble:
      return kExitEmptyEnsemble;
    case errc::not_divisible:
    case errc::dead_end:
      return 1;  // internal consistency failure
    default:
      return kExitValidation;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ostream& open_output(const std::string& out_path, std::ofstream& file) {
  if (out_path.empty()) return std::cout;
  file.open(out_path);
  if (!file) fail(errc::parse_error, "cannot open output file: " + out_path);
  return file;
}

std::string rational_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

json error_bundle_json(const ErrorBundle& b) {
  auto side = [](const PairErrorParams& p) {
    return json{{"xi", p.xi},           {"xi_s", p.xi_s},
                {"xi_t", p.xi_t},       {"xi_star_st", p.xi_star_st},
                {"delta", p.delta},     {"delta_tilde", p.delta_tilde}};
  };
  return json{{"eta", b.eta},
              {"eta_plus", b.eta_plus},
              {"eta_minus", b.eta_minus},
              {"eta_star_plus", b.eta_star_plus},
              {"eta_star_minus", b.eta_star_minus},
              {"forward", side(b.fwd)},
              {"reverse", side(b.rev)}};
}

json applicability_json(const ApplicabilityReport& report) {
  json theorems = json::array();
  for (const TheoremApplicability& t : report.theorems)
    theorems.push_back({{"name", t.name},
                        {"error_quantity", t.error_quantity},
                        {"side_quantity", t.side_quantity},
                        {"kappa_ok", t.kappa_ok},
                        {"applicable", t.applicable}});
  return json{{"kappa", report.kappa}, {"threshold", report.threshold}, {"theorems", theorems}};
}

int cmd_count(const std::string& instance_file, const std::string& mode, std::uint64_t budget,
              double threshold, const std::string& out_path) {
  const Instance inst = parse_instance(read_file(instance_file));
  const KVectors kv = build_k_vectors(inst.mu);

  json report;
  report["instance"] = json::parse(instance_to_json(inst));
  json timings;

  std::optional<BigInt> h_exact;
  if (mode == "exact" || mode == "both") {
    const auto start = std::chrono::steady_clock::now();
    ExactOracle oracle({budget});
    json exact;
    const BigInt h = oracle.count_dihypergraphs(inst);
    h_exact = h;
    exact["H"] = h.get_str();
    exact["L"] = oracle.count_labelled(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus).get_str();
    const BigInt bp = oracle.count_bipartite_pairs(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    exact["BP"] = bp.get_str();
    exact["B_plus"] = oracle.count_bipartite(inst.d_plus, kv.k_plus).get_str();
    exact["B_minus"] = oracle.count_bipartite(inst.d_minus, kv.k_minus).get_str();
    exact["Q"] = oracle.count_q(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus).get_str();
    if (bp > 0)
      exact["P"] =
          rational_string(oracle.prob_no_repeat(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus));
    report["exact"] = std::move(exact);
    timings["exact_ms"] = elapsed_ms(start);
  }

  std::optional<double> log_f;
  if (mode == "asymptotic" || mode == "both") {
    const auto start = std::chrono::steady_clock::now();
    json asym;
    const LogValue f = eval_f(inst);
    const LogValue fhat = eval_fhat(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    log_f = f.log_value;
    asym["log_f"] = f.log_value;
    asym["log_fhat"] = fhat.log_value;
    asym["error_bundle"] = error_bundle_json(compute_error_bundle(inst));
    report["asymptotic"] = std::move(asym);
    report["applicability"] = applicability_json(applicability_report(inst, threshold));
    timings["asymptotic_ms"] = elapsed_ms(start);
  }

  if (h_exact && *h_exact > 0 && log_f)
    report["relative_error_log"] = std::fabs(log_of(*h_exact) - *log_f);
  report["timings"] = std::move(timings);

  std::ofstream file;
  open_output(out_path, file) << report.dump(2) << "\n";
  return 0;
}

int cmd_sample(const std::string& instance_file, int count, std::uint64_t seed,
               std::uint64_t budget, std::uint64_t max_rejects, const std::string& out_path) {
  const Instance inst = parse_instance(read_file(instance_file));
  ExactOracle oracle({budget});
  if (oracle.count_dihypergraphs(inst) == 0)
    fail(errc::empty_ensemble, "no dihypergraph realizes this instance");

  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
    const Dihypergraph h = sample_dihypergraph(inst, rng, oracle, max_rejects);
    out << dihypergraph_to_json(h) << "\n";
  }
  return 0;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

struct SweepRow {
  std::string param;
  std::function<Instance()> make;  // parsing and validation happen per row
};

std::vector<SweepRow> parse_family_spec(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed family spec");
  std::vector<SweepRow> rows;
  if (j.is_object() && j.contains("generator")) {
    const std::string name = j.at("generator").get<std::string>();
    for (const auto& p : j.at("params")) {
      const int m = p.get<int>();
      SweepRow row;
      row.param = name + ":m=" + std::to_string(m);
      if (name == "disjoint_support")
        row.make = [m] { return disjoint_support_instance(m); };
      else if (name == "irregular_tail")
        row.make = [m] { return irregular_tail_instance(m); };
      else
        fail(errc::parse_error, "unknown generator: " + name);
      rows.push_back(std::move(row));
    }
  } else if (j.is_object() && j.contains("rows")) {
    for (const auto& r : j["rows"]) {
      SweepRow row;
      row.param = r.contains("param") ? r["param"].dump() : std::to_string(rows.size());
      if (row.param.size() >= 2 && row.param.front() == '"' && row.param.back() == '"')
        row.param = row.param.substr(1, row.param.size() - 2);
      const std::string body = r.at("instance").dump();
      row.make = [body] { return parse_instance(body); };
      rows.push_back(std::move(row));
    }
  } else {
    fail(errc::parse_error, "family spec needs either generator/params or rows");
  }
  return rows;
}

int cmd_sweep(const std::string& family_file, std::uint64_t budget, const std::string& out_path) {
  const std::vector<SweepRow> rows = parse_family_spec(read_file(family_file));
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  out << "param,m_plus,m_minus,log_h_exact,log_f,abs_log_ratio,eta,eta_min,eta_star_minus,"
         "eta_star_plus,ratio_to_bound\n";
  int succeeded = 0;
  for (const SweepRow& row : rows) {
    try {
      const Instance inst = row.make();
      const ErrorBundle b = compute_error_bundle(inst);
      const LogValue f = eval_f(inst);
      std::string log_h = "NA", abs_ratio = "NA", ratio_to_bound = "NA";
      try {
        ExactOracle oracle({budget});
        const BigInt h = oracle.count_dihypergraphs(inst);
        if (h > 0) {
          const double lh = log_of(h);
          log_h = fmt_double(lh);
          const double ratio = std::fabs(lh - f.log_value);
          abs_ratio = fmt_double(ratio);
          const double bound = b.near_regular_error();
          if (bound > 0) ratio_to_bound = fmt_double(ratio / bound);
        } else {
          log_h = "-inf";
        }
      } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) throw;
        std::cerr << "row " << row.param << ": budget exhausted, exact fields left NA\n";
      }
      out << csv_escape(row.param) << ',' << mu_mass_plus(inst.mu) << ','
          << mu_mass_minus(inst.mu) << ',' << log_h << ',' << fmt_double(f.log_value) << ','
          << abs_ratio << ',' << fmt_double(b.eta) << ','
          << fmt_double(std::min(b.eta_plus, b.eta_minus)) << ','
          << fmt_double(b.eta_star_minus) << ',' << fmt_double(b.eta_star_plus) << ','
          << ratio_to_bound << "\n";
      ++succeeded;
    } catch (const error& e) {
      std::cerr << "row " << row.param << " failed: " << e.what() << "\n";
      out << csv_escape(row.param) << ",NA,NA,NA,NA,NA,NA,NA,NA,NA,NA\n";
    }
  }
  return succeeded > 0 ? 0 : 1;
}

int cmd_verify(std::uint64_t budget, int max_n, int max_edges, int max_degree, int max_mass) {
  CorpusLimits limits{max_n, max_edges, max_degree, max_mass};
  const std::vector<Instance> corpus = enumerate_instances(limits);
  std::cerr << "verifying " << corpus.size() << " instances\n";

  ExactOracle oracle({budget});
  long long checked = 0;
  bool all_ok = true;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    all_ok = all_ok && ok;
  };

  bool conversion_ok = true, pair_product_ok = true, symmetry_ok = true, sum_route_ok = true,
       route_match_ok = true, q_complement_ok = true;
  for (const Instance& inst : corpus) {
    const KVectors kv = build_k_vectors(inst.mu);
    const BigInt l = oracle.count_labelled(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    const BigInt bp_sum = oracle.count_bipartite_pairs(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    const BigInt bp_direct =
        oracle.count_bipartite_pairs_direct(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    const BigInt bp_swapped =
        oracle.count_bipartite_pairs(inst.d_minus, kv.k_minus, inst.d_plus, kv.k_plus);
    const BigInt q = oracle.count_q(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);

    sum_route_ok = sum_route_ok && bp_sum == bp_direct;
    symmetry_ok = symmetry_ok && bp_sum == bp_swapped;
    q_complement_ok = q_complement_ok && bp_sum - l == q;
    if (bp_sum > 0) {
      BigRat p(l, bp_sum);
      p.canonicalize();
      pair_product_ok = pair_product_ok && BigRat(l) == BigRat(bp_sum) * p;
    }
    BigInt orderings = 1;
    for (const auto& [key, cnt] : inst.mu) {
      BigInt fc;
      mpz_fac_ui(fc.get_mpz_t(), static_cast<unsigned long>(cnt));
      orderings *= fc;
    }
    const BigInt h = oracle.count_dihypergraphs_direct(inst);
    conversion_ok = conversion_ok && l == h * orderings;
    try {
      route_match_ok = route_match_ok && oracle.count_dihypergraphs(inst) == h;
    } catch (const error&) {
      route_match_ok = false;
    }
    ++checked;
  }
  std::cerr << "checked " << checked << " instances\n";
  report("labelled equals pair count times no-repeat probability", pair_product_ok);
  report("labelled equals dihypergraph count times profile orderings", conversion_ok);
  report("pair count symmetric under side swap", symmetry_ok);
  report("ensemble-sum pair count equals direct pair count", sum_route_ok);
  report("backtracking count matches labelled-pair route", route_match_ok);
  report("duplicate-pair count complements the labelled count", q_complement_ok);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting, asymptotic estimation and uniform sampling of "
               "directed hypergraphs with given degrees and hyperedge sizes"};
  app.require_subcommand(1);

  std::string instance_file, out_path, mode = "both", family_file;
  std::uint64_t budget = 500'000'000;
  std::uint64_t seed = 0;
  std::uint64_t max_rejects = 1'000'000;
  double threshold = 0.1;
  int count = 1;
  int max_n = 4, max_edges = 3, max_degree = 3, max_mass = 10;

  CLI::App* c_count = app.add_subcommand("count", "count dihypergraphs for an instance");
  c_count->add_option("instance", instance_file, "instance JSON file")->required();
  c_count->add_option("--mode", mode, "exact | asymptotic | both")
      ->check(CLI::IsMember({"exact", "asymptotic", "both"}));
  c_count->add_option("--budget", budget, "work budget for exact counting");
  c_count->add_option("--threshold", threshold, "applicability threshold");
  c_count->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_sample = app.add_subcommand("sample", "sample dihypergraphs uniformly");
  c_sample->add_option("instance", instance_file, "instance JSON file")->required();
  c_sample->add_option("--count", count, "number of samples");
  c_sample->add_option("--seed", seed, "RNG seed");
  c_sample->add_option("--budget", budget, "work budget for the counting oracle");
  c_sample->add_option("--max-rejects", max_rejects, "rejection budget per sample");
  c_sample->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_sweep = app.add_subcommand("sweep", "evaluate a family and emit a CSV table");
  c_sweep->add_option("family", family_file, "family spec JSON file")->required();
  c_sweep->add_option("--budget", budget, "work budget per row");
  c_sweep->add_option("--out", out_path, "output CSV file (default stdout)");

  CLI::App* c_verify = app.add_subcommand("verify", "run the exact identity suite");
  c_verify->add_option("--budget", budget, "total work budget");
  c_verify->add_option("--max-n", max_n, "corpus vertex bound");
  c_verify->add_option("--max-edges", max_edges, "corpus hyperedge bound");
  c_verify->add_option("--max-degree", max_degree, "corpus degree bound");
  c_verify->add_option("--max-mass", max_mass, "corpus bound on the sum of both degree sums");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_count->parsed()) return cmd_count(instance_file, mode, budget, threshold, out_path);
    if (c_sample->parsed())
      return cmd_sample(instance_file, count, seed, budget, max_rejects, out_path);
    if (c_sweep->parsed()) return cmd_sweep(family_file, budget, out_path);
    if (c_verify->parsed()) return cmd_verify(budget, max_n, max_edges, max_degree, max_mass);
  } catch (const dhenum::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
