// Acceptance suite: one line per criterion, PASS only at the stated
// tolerance. Exit code is the number of failed criteria.

#include <dhenum/asymptotics.hpp>
#include <dhenum/core_model.hpp>
#include <dhenum/exact_oracle.hpp>
#include <dhenum/families.hpp>
#include <dhenum/rng.hpp>
#include <dhenum/sampler.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace dhenum;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number),
        title_(std::move(title)),
        exceptions_at_entry_(std::uncaught_exceptions()),
        start_(std::chrono::steady_clock::now()) {}

  void fail(const std::string& why) {
    ok_ = false;
    if (!why_.empty()) why_ += "; ";
    why_ += why;
  }
  void require(bool condition, const std::string& why) {
    if (!condition) fail(why);
  }
  void note(const std::string& text) { notes_ = notes_.empty() ? text : notes_ + ", " + text; }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  ~Criterion() {
    if (std::uncaught_exceptions() > exceptions_at_entry_) fail("exception escaped the criterion");
    std::ostringstream line;
    line << (ok_ ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": " << title_;
    if (!notes_.empty()) line << " (" << notes_ << ")";
    if (!ok_) line << " -- " << why_;
    char timing[32];
    std::snprintf(timing, sizeof timing, " [%.1fs]", seconds());
    line << timing;
    std::puts(line.str().c_str());
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string why_;
  std::string notes_;
  int exceptions_at_entry_;
  std::chrono::steady_clock::time_point start_;
};

BigInt mu_orderings(const Mu& mu) {
  BigInt orderings = 1;
  for (const auto& [key, cnt] : mu) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(cnt));
    orderings *= f;
  }
  return orderings;
}

void criterion_1_identity_suite() {
  Criterion c(1, "exact identity suite over the exhaustive corpus");
  const CorpusLimits limits{5, 3, 3, 14};
  const std::vector<Instance> corpus = enumerate_instances(limits);
  ExactOracle oracle({std::uint64_t{1} << 62});

  long long checked = 0, identity_side_checks = 0;
  for (const Instance& inst : corpus) {
    const KVectors kv = build_k_vectors(inst.mu);
    const BigInt labelled =
        oracle.count_labelled(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    const BigInt bp_sum =
        oracle.count_bipartite_pairs(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
    const BigInt bp_direct =
        oracle.count_bipartite_pairs_direct(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);

    // (a) labelled = pairs * no-repeat probability; the probability comes
    // from the ensemble-sum route and multiplies the direct pair count, so
    // the product is not a tautology.
    if (bp_direct > 0) {
      const BigRat p = oracle.prob_no_repeat(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
      if (BigRat(labelled) != BigRat(bp_direct) * p) {
        c.fail("pair-probability product mismatch");
        return;
      }
      bool repeatable = false;
      for (const auto& [key, cnt] : inst.mu) repeatable = repeatable || cnt >= 2;
      if (!repeatable && p != 1) {
        c.fail("no-repeat probability below 1 without a repeatable shape");
        return;
      }
    } else if (labelled != 0) {
      c.fail("labelled count without any pair");
      return;
    }

    // (b) labelled = dihypergraph count * profile orderings.
    const BigInt h_direct = oracle.count_dihypergraphs_direct(inst);
    if (labelled != h_direct * mu_orderings(inst.mu)) {
      c.fail("labelled/unlabelled conversion mismatch");
      return;
    }

    // (c) side-swap symmetry of the pair count.
    if (bp_sum != oracle.count_bipartite_pairs(inst.d_minus, kv.k_minus, inst.d_plus, kv.k_plus)) {
      c.fail("pair count not symmetric");
      return;
    }

    // (e) ensemble-sum route equals direct pair enumeration.
    if (bp_sum != bp_direct) {
      c.fail("sum route disagrees with direct route");
      return;
    }

    // (f) backtracking equals the labelled-pair route, divisibility included.
    try {
      if (oracle.count_dihypergraphs(inst) != h_direct) {
        c.fail("checked count differs from backtracking");
        return;
      }
    } catch (const error& e) {
      c.fail(std::string("count_dihypergraphs raised: ") + e.what());
      return;
    }

    // Duplicate-pair complement, same predicate written independently.
    if (bp_sum - labelled !=
        oracle.count_q(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus)) {
      c.fail("duplicate-pair complement mismatch");
      return;
    }

    // (d) include/avoid identity on superposition degrees, every X with at
    // most 6 edges on the minus side.
    if (mu_mass_minus(inst.mu) <= 6) {
      Seq s_sup(inst.d_plus), t_sup(kv.k_plus);
      for (size_t i = 0; i < s_sup.size(); ++i) s_sup[i] += inst.d_minus[i];
      for (size_t j = 0; j < t_sup.size(); ++j) t_sup[j] += kv.k_minus[j];
      for (const BipartiteGraph& x : oracle.enumerate_bipartite(inst.d_minus, kv.k_minus)) {
        const BigInt incl = oracle.count_bipartite_constrained(s_sup, t_sup, {x.edges, {}});
        const BigInt avoid =
            oracle.count_bipartite_constrained(inst.d_plus, kv.k_plus, {{}, x.edges});
        ++identity_side_checks;
        if (incl != avoid) {
          c.fail("include/avoid reduction identity violated");
          return;
        }
      }
    }
    ++checked;
  }
  c.note(std::to_string(checked) + " instances, " + std::to_string(identity_side_checks) +
         " forced-set identities");
  c.require(c.seconds() <= 120.0, "runtime above 120 s");
}

void criterion_2_sequential_exactness() {
  Criterion c(2, "sequential generator: exact normalization and sequence law");
  const std::vector<std::pair<Seq, Seq>> instances = {
      {{1, 1}, {1, 1}},          {{2}, {1, 1}},          {{2, 1}, {1, 1, 1}},
      {{2, 1}, {2, 1}},          {{2, 2}, {2, 1, 1}},    {{3, 2, 1}, {2, 2, 2}},
      {{1, 1, 1, 1}, {2, 2}},    {{2, 2, 1}, {3, 1, 1}}, {{3, 1}, {1, 1, 1, 1}},
      {{2, 2, 2}, {3, 2, 1}}};
  ExactOracle oracle;
  long long sequences = 0;
  for (const auto& [x, y] : instances) {
    if (sum_of(x) > 8) {
      c.fail("instance exceeds the stated mass bound");
      return;
    }
    BigInt denom = oracle.count_bipartite(x, y);
    for (int v : x) {
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
      denom *= f;
    }
    BigRat law(1, denom);
    law.canonicalize();

    std::function<void(SamplerState&, const BigRat&)> walk = [&](SamplerState& state,
                                                                 const BigRat& acc) {
      if (state.finished()) {
        if (acc != law) c.fail("sequence probability differs from the uniform law");
        ++sequences;
        return;
      }
      const EdgeDistribution dist = rho_distribution(state, x, y, oracle);
      BigRat total(0);
      for (const auto& [u, p] : dist.support) total += p;
      if (total != 1) c.fail("distribution does not normalize exactly");
      for (const auto& [u, p] : dist.support) {
        SamplerState next = state;
        next.push({next.current_vertex, u});
        walk(next, acc * p);
      }
    };
    SamplerState root = SamplerState::initial(x, y);
    walk(root, BigRat(1));
  }
  c.note(std::to_string(sequences) + " full sequences across 10 instances");
  c.require(c.seconds() <= 60.0, "runtime above 60 s");
}

void criterion_3_sampler_uniformity() {
  Criterion c(3, "sampler uniformity at significance 0.001 with a pinned seed");
  constexpr std::uint64_t kSeed = 20240801;
  constexpr long long kDraws = 100000;
  ExactOracle oracle;

  // Chi-square statistic against the uniform law over all cells.
  auto chi_square = [](const std::map<std::string, long long>& counts, long long cells,
                       long long draws) {
    const double expected = static_cast<double>(draws) / static_cast<double>(cells);
    double stat = 0.0;
    for (const auto& [key, count] : counts) {
      const double diff = static_cast<double>(count) - expected;
      stat += diff * diff / expected;
    }
    stat += static_cast<double>(cells - static_cast<long long>(counts.size())) * expected;
    return stat;
  };

  {
    const Seq x{2, 1}, y{1, 1, 1};
    if (oracle.count_bipartite(x, y) != 3) {
      c.fail("unexpected ensemble size");
      return;
    }
    std::map<std::string, long long> counts;
    std::vector<std::string> replay_head;
    for (long long i = 0; i < kDraws; ++i) {
      Rng rng = Rng::substream(kSeed, static_cast<std::uint64_t>(i));
      const BipartiteGraph g = sample_bipartite_uniform(x, y, rng, oracle);
      std::string key;
      for (const Edge& e : g.edges) {
        key += static_cast<char>('0' + e.left);
        key += static_cast<char>('0' + e.right);
      }
      ++counts[key];
      if (i < 64) replay_head.push_back(key);
    }
    const double stat = chi_square(counts, 3, kDraws);
    c.note("graph chi2=" + std::to_string(stat));
    c.require(stat < 13.815510557964274, "bipartite chi-square at df=2 failed");
    for (long long i = 0; i < 64; ++i) {
      Rng rng = Rng::substream(kSeed, static_cast<std::uint64_t>(i));
      const BipartiteGraph g = sample_bipartite_uniform(x, y, rng, oracle);
      std::string key;
      for (const Edge& e : g.edges) {
        key += static_cast<char>('0' + e.left);
        key += static_cast<char>('0' + e.right);
      }
      if (key != replay_head[static_cast<size_t>(i)]) {
        c.fail("replay with the pinned seed diverged");
        return;
      }
    }
  }

  {
    const Instance inst = disjoint_support_instance(2);
    if (oracle.count_dihypergraphs(inst) != 6) {
      c.fail("family count is not 6");
      return;
    }
    std::map<std::string, long long> counts;
    std::vector<Dihypergraph> replay_head;
    for (long long i = 0; i < kDraws; ++i) {
      Rng rng = Rng::substream(kSeed + 1, static_cast<std::uint64_t>(i));
      const Dihypergraph h = sample_dihypergraph(inst, rng, oracle);
      if (i < 16) replay_head.push_back(h);
      std::string key;
      for (const DirectedEdge& e : h.edges) {
        for (int v : e.tail) key += static_cast<char>('a' + v);
        key += '>';
        for (int v : e.head) key += static_cast<char>('a' + v);
        key += '|';
      }
      ++counts[key];
    }
    for (long long i = 0; i < 16; ++i) {
      Rng rng = Rng::substream(kSeed + 1, static_cast<std::uint64_t>(i));
      if (sample_dihypergraph(inst, rng, oracle) != replay_head[static_cast<size_t>(i)]) {
        c.fail("dihypergraph replay with the pinned seed diverged");
        return;
      }
    }
    const double stat = chi_square(counts, 6, kDraws);
    c.note("dihypergraph chi2=" + std::to_string(stat));
    c.require(counts.size() == 6, "support smaller than the full family");
    c.require(stat < 20.515005652432873, "dihypergraph chi-square at df=5 failed");
  }
  c.require(c.seconds() <= 120.0, "runtime above 120 s");
}

void criterion_4_switching_identity() {
  Criterion c(4, "switching double count, zero tolerance");
  const Seq x{2, 1, 1}, y{2, 1, 1};
  ExactOracle oracle;
  long long configurations = 0;

  // Prefixes reachable by the generator up to the second step: the empty
  // prefix and every extendable single first edge at vertex 0.
  std::vector<std::vector<Edge>> prefixes{{}};
  for (int u = 0; u < 3; ++u) {
    const std::vector<Edge> prefix{{0, u}};
    if (oracle.count_bipartite_constrained(x, y, {prefix, {}}) > 0) prefixes.push_back(prefix);
  }

  for (const auto& prefix : prefixes) {
    Seq deficit = y;
    for (const Edge& e : prefix) --deficit[static_cast<size_t>(e.right)];
    const BipartiteGraph prefix_graph{3, 3, prefix};
    for (int u = 0; u < 3; ++u) {
      for (int u_alt = 0; u_alt < 3; ++u_alt) {
        if (u == u_alt) continue;
        const Edge f{0, u}, f_alt{0, u_alt};
        bool in_prefix = false;
        for (const Edge& e : prefix) in_prefix = in_prefix || e == f || e == f_alt;
        if (in_prefix) continue;
        // Both continuations must be extendable for the pair to be admissible.
        std::vector<Edge> with_f = prefix, with_alt = prefix;
        with_f.push_back(f);
        with_alt.push_back(f_alt);
        if (oracle.count_bipartite_constrained(x, y, {with_f, {}}) == 0) continue;
        if (oracle.count_bipartite_constrained(x, y, {with_alt, {}}) == 0) continue;

        const auto [star, star_alt] = oracle.enumerate_switching_sets(prefix_graph, f, f_alt, x, y);
        const BigInt left = to_big(deficit[static_cast<size_t>(u_alt)]) *
                            BigInt(static_cast<long>(star.size()));
        const BigInt right = to_big(deficit[static_cast<size_t>(u)]) *
                             BigInt(static_cast<long>(star_alt.size()));
        ++configurations;
        if (left != right) {
          c.fail("deficit-weighted class sizes differ");
          return;
        }
      }
    }
  }
  c.note(std::to_string(configurations) + " admissible configurations");
  c.require(configurations > 0, "no admissible configuration found");
}

void criterion_5_exact_family() {
  Criterion c(5, "closed-form family: exact count and exact estimate");
  ExactOracle oracle;
  for (int m = 1; m <= 4; ++m) {
    const Instance inst = disjoint_support_instance(m);
    BigInt expected;
    mpz_fac_ui(expected.get_mpz_t(), static_cast<unsigned long>(2 * m));
    expected >>= m;
    const BigInt h = oracle.count_dihypergraphs(inst);
    if (h != expected) {
      c.fail("exact count differs from the closed form at m=" + std::to_string(m));
      return;
    }
    const double gap = std::fabs(eval_f(inst).log_value - log_of(h));
    if (gap > 1e-9) {
      c.fail("estimate gap " + std::to_string(gap) + " above 1e-9 at m=" + std::to_string(m));
      return;
    }
  }
  c.note("m=1..4");
}

void criterion_6_convergence_diagnostic() {
  Criterion c(6, "irregular family: bounded constant and shrinking gap");
  ExactOracle oracle;
  double fitted = 0.0, prev_gap = 1e300;
  for (int m = 2; m <= 4; ++m) {
    const Instance inst = irregular_tail_instance(m);
    const BigInt h = oracle.count_dihypergraphs(inst);
    if (h <= 0) {
      c.fail("family member is infeasible");
      return;
    }
    const double gap = std::fabs(log_of(h) - eval_f(inst).log_value);
    const ErrorBundle b = compute_error_bundle(inst);
    const double bound = b.near_regular_error();
    fitted = std::max(fitted, gap / bound);
    if (gap > prev_gap + 1e-12) {
      c.fail("log-ratio gap grew at m=" + std::to_string(m));
      return;
    }
    prev_gap = gap;
  }
  char note[64];
  std::snprintf(note, sizeof note, "fitted C=%.6f over m=2..4", fitted);
  c.note(note);
  c.require(fitted <= 10.0, "fitted constant above 10");
}

void criterion_7_avoid_estimate_tracking() {
  Criterion c(7, "avoidance-count estimate tracks the oracle across 20 instances");
  // One recorded constant for the whole suite; worst measured ratio on this
  // fixed list is 0.007768 (instance 9), frozen with headroom.
  constexpr double kRecordedConstant = 0.01;
  ExactOracle oracle;

  struct Item {
    Seq s, t;
    std::vector<Edge> x_edges;
  };
  const std::vector<Item> suite = {
      {{1, 1}, {1, 1}, {}},
      {{1, 1}, {1, 1}, {{0, 0}}},
      {{2, 1}, {1, 1, 1}, {}},
      {{2, 1}, {1, 1, 1}, {{0, 0}}},
      {{2, 1}, {1, 1, 1}, {{0, 0}, {1, 1}}},
      {{2, 2}, {2, 1, 1}, {}},
      {{2, 2}, {2, 1, 1}, {{0, 1}, {1, 2}}},
      {{2, 2, 1}, {2, 2, 1}, {}},
      {{2, 2, 1}, {2, 2, 1}, {{0, 0}}},
      {{2, 2, 1}, {2, 2, 1}, {{2, 0}, {0, 2}}},
      {{3, 2, 1}, {2, 2, 2}, {}},
      {{3, 2, 1}, {2, 2, 2}, {{1, 0}, {2, 1}}},
      {{2, 2, 2}, {3, 2, 1}, {{0, 2}}},
      {{3, 3}, {2, 2, 1, 1}, {}},
      {{3, 3}, {2, 2, 1, 1}, {{0, 2}, {1, 3}}},
      {{2, 2, 2, 2}, {2, 2, 2, 2}, {}},
      {{2, 2, 2, 2}, {2, 2, 2, 2}, {{0, 0}, {1, 1}}},
      {{3, 2, 2, 1}, {2, 2, 2, 2}, {{0, 0}}},
      {{2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}, {}},
      {{3, 3, 2, 2}, {2, 2, 2, 2, 2}, {{0, 0}, {2, 1}}}};

  double worst = 0.0;
  int index = 0;
  for (const Item& item : suite) {
    ++index;
    if (sum_of(item.s) > 12) {
      c.fail("suite instance above the stated mass bound");
      return;
    }
    BipartiteGraph x{static_cast<int>(item.s.size()), static_cast<int>(item.t.size()),
                     item.x_edges};
    x.normalize();
    const BigInt exact = oracle.count_bipartite_constrained(item.s, item.t, {{}, item.x_edges});
    if (exact <= 0) {
      c.fail("suite instance " + std::to_string(index) + " has no avoiding graph");
      return;
    }
    const LogValue estimate = eval_bipartite_avoid_estimate(item.s, item.t, x);
    const double ratio = std::fabs(estimate.log_value - log_of(exact)) /
                         estimate.err_params.at("delta_sq_over_m");
    worst = std::max(worst, ratio);
    if (ratio > kRecordedConstant) {
      c.fail("instance " + std::to_string(index) + " ratio " + std::to_string(ratio) +
             " above the recorded constant");
      return;
    }
  }
  char note[64];
  std::snprintf(note, sizeof note, "worst ratio %.5f <= C=%.2f", worst, kRecordedConstant);
  c.note(note);
}

void criterion_8_monte_carlo_crosscheck() {
  Criterion c(8, "Monte Carlo weighted mean within 4 standard errors of the exact value");
  ExactOracle oracle;
  struct Item {
    Seq s, t, x, y;
    std::uint64_t seed;
  };
  const std::vector<Item> suite = {
      {{2, 1, 1}, {2, 1, 1}, {1, 1, 1}, {1, 1, 1}, 101},
      {{1, 2, 1}, {1, 1, 2}, {2, 1, 1}, {2, 1, 1}, 102},
      {{2, 2}, {2, 1, 1}, {1, 1}, {1, 1, 0}, 103},
      {{3, 1}, {2, 2}, {1, 1}, {1, 1}, 104},
      {{2, 2, 2}, {3, 2, 1}, {1, 1, 1}, {2, 1, 0}, 105}};
  for (const Item& item : suite) {
    const double m_st = static_cast<double>(sum_of(item.s));
    double exact_sum = 0.0;
    long long cells = 0;
    for (const BipartiteGraph& g : oracle.enumerate_bipartite(item.x, item.y)) {
      double phi = 0.0;
      for (const Edge& e : g.edges)
        phi += static_cast<double>(item.s[static_cast<size_t>(e.left)]) *
               static_cast<double>(item.t[static_cast<size_t>(e.right)]) / m_st;
      exact_sum += std::exp(-phi);
      ++cells;
    }
    if (cells == 0) {
      c.fail("empty ensemble in the suite");
      return;
    }
    const double exact_mean = exact_sum / static_cast<double>(cells);
    const MonteCarloEstimate est =
        estimate_exp_neg_phi(item.s, item.t, item.x, item.y, 10000, item.seed, oracle);
    const double slack = est.std_error > 0 ? 4.0 * est.std_error : 1e-12;
    if (std::fabs(est.estimate - exact_mean) > slack) {
      c.fail("estimate off by more than 4 standard errors (seed " + std::to_string(item.seed) +
             ")");
      return;
    }
  }
  c.note("5 instances, 10000 samples each");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      criterion_1_identity_suite,   criterion_2_sequential_exactness,
      criterion_3_sampler_uniformity, criterion_4_switching_identity,
      criterion_5_exact_family,     criterion_6_convergence_diagnostic,
      criterion_7_avoid_estimate_tracking, criterion_8_monte_carlo_crosscheck};
  for (const auto& criterion : criteria) {
    try {
      criterion();
    } catch (const std::exception& e) {
      std::printf("(escaped exception: %s)\n", e.what());
    }
  }
  if (g_failures == 0)
    std::puts("all acceptance criteria passed");
  else
    std::printf("%d acceptance criteria failed\n", g_failures);
  return g_failures;
}
