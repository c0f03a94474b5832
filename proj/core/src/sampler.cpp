#include <dhenum/sampler.hpp>

#include <dhenum/core_model.hpp>

#include <algorithm>
#include <cmath>

namespace dhenum {

SamplerState SamplerState::initial(const Seq& x, const Seq& y) {
  SamplerState st;
  st.remaining_left = x;
  st.remaining_right = y;
  st.current_vertex = 0;
  st.current_slot = 1;
  while (st.current_vertex < static_cast<int>(x.size()) &&
         x[static_cast<size_t>(st.current_vertex)] == 0)
    ++st.current_vertex;
  return st;
}

bool SamplerState::finished() const {
  return current_vertex >= static_cast<int>(remaining_left.size());
}

void SamplerState::push(Edge e) {
  if (finished()) fail(errc::precondition_violated, "sequence already complete");
  if (e.left != current_vertex)
    fail(errc::precondition_violated, "edges must be added at the current vertex");
  prefix.push_back(e);
  --remaining_left[static_cast<size_t>(e.left)];
  --remaining_right[static_cast<size_t>(e.right)];
  if (remaining_right[static_cast<size_t>(e.right)] < 0)
    fail(errc::precondition_violated, "right capacity exhausted");
  ++current_slot;
  if (remaining_left[static_cast<size_t>(e.left)] == 0) {
    ++current_vertex;
    current_slot = 1;
    while (current_vertex < static_cast<int>(remaining_left.size()) &&
           remaining_left[static_cast<size_t>(current_vertex)] == 0)
      ++current_vertex;
  }
}

EdgeDistribution rho_distribution(const SamplerState& state, const Seq& x, const Seq& y,
                                  ExactOracle& oracle) {
  if (state.finished()) fail(errc::precondition_violated, "no next edge: sequence complete");
  const int v = state.current_vertex;
  const BigInt prefix_count = oracle.count_bipartite_constrained(x, y, {state.prefix, {}});
  // Unreachable when states come from valid sequences; any occurrence means
  // the counting oracle is wrong.
  if (prefix_count == 0) fail(errc::dead_end, "prefix is not extendable");

  const int slots_left = x[static_cast<size_t>(v)] - state.current_slot + 1;
  EdgeDistribution dist;
  BigRat total = 0;
  for (int u = 0; u < static_cast<int>(y.size()); ++u) {
    if (std::find(state.prefix.begin(), state.prefix.end(), Edge{v, u}) != state.prefix.end())
      continue;
    std::vector<Edge> with_edge = state.prefix;
    with_edge.push_back({v, u});
    const BigInt inc = oracle.count_bipartite_constrained(x, y, {with_edge, {}});
    if (inc == 0) continue;
    BigRat p(inc, prefix_count * slots_left);
    p.canonicalize();
    total += p;
    dist.support.push_back({u, std::move(p)});
  }
  if (total != 1) fail(errc::dead_end, "next-edge probabilities do not sum to 1");
  return dist;
}

namespace {

// Draws a right vertex with probability proportional to the inclusion count
// of its edge. The weights sum to slots_left * prefix_count, so this realizes
// the exact next-edge distribution without rational arithmetic.
int draw_next_right(const SamplerState& state, const Seq& x, const Seq& y, Rng& rng,
                    ExactOracle& oracle) {
  const int v = state.current_vertex;
  std::vector<std::pair<int, BigInt>> weights;
  BigInt total = 0;
  for (int u = 0; u < static_cast<int>(y.size()); ++u) {
    if (std::find(state.prefix.begin(), state.prefix.end(), Edge{v, u}) != state.prefix.end())
      continue;
    std::vector<Edge> with_edge = state.prefix;
    with_edge.push_back({v, u});
    BigInt inc = oracle.count_bipartite_constrained(x, y, {with_edge, {}});
    if (inc == 0) continue;
    total += inc;
    weights.push_back({u, std::move(inc)});
  }
  if (weights.empty()) fail(errc::dead_end, "prefix is not extendable");

  // Uniform big integer in [0, total): draw exactly bit-length-of-total
  // random bits and reject overshoot; acceptance is at least 1/2 per round.
  const unsigned long bits = mpz_sizeinbase(total.get_mpz_t(), 2);
  const unsigned long words = (bits + 63) / 64;
  BigInt draw;
  for (;;) {
    draw = 0;
    for (unsigned long w = 0; w < words; ++w) {
      draw <<= 64;
      draw += BigInt(static_cast<unsigned long>(rng.next()));
    }
    draw >>= (words * 64 - bits);
    if (draw < total) break;
  }
  for (auto& [u, weight] : weights) {
    if (draw < weight) return u;
    draw -= weight;
  }
  fail(errc::dead_end, "weight walk overran the total");
}

}  // namespace

std::vector<Edge> sample_edge_sequence(const Seq& x, const Seq& y, Rng& rng, ExactOracle& oracle) {
  for (const Seq* q : {&x, &y})
    for (int v : *q)
      if (v < 0) fail(errc::invalid_argument, "degree sequences must be nonnegative");
  if (oracle.count_bipartite(x, y) == 0)
    fail(errc::empty_ensemble, "no bipartite graph has these degrees");
  SamplerState state = SamplerState::initial(x, y);
  while (!state.finished()) {
    const int u = draw_next_right(state, x, y, rng, oracle);
    state.push({state.current_vertex, u});
  }
  return state.prefix;
}

BipartiteGraph sample_bipartite_uniform(const Seq& x, const Seq& y, Rng& rng, ExactOracle& oracle) {
  BipartiteGraph g{static_cast<int>(x.size()), static_cast<int>(y.size()),
                   sample_edge_sequence(x, y, rng, oracle)};
  g.normalize();
  return g;
}

Dihypergraph sample_dihypergraph(const Instance& inst, Rng& rng, ExactOracle& oracle,
                                 std::uint64_t max_rejects, RejectionStats* stats) {
  validate_instance(inst);
  const KVectors kv = build_k_vectors(inst.mu);
  for (std::uint64_t attempt = 0; attempt <= max_rejects; ++attempt) {
    if (stats) stats->attempts = attempt + 1;
    BipartitePair pair;
    pair.g_plus = sample_bipartite_uniform(inst.d_plus, kv.k_plus, rng, oracle);
    pair.g_minus = sample_bipartite_uniform(inst.d_minus, kv.k_minus, rng, oracle);
    // Cheap disjointness test first, the repeated-edge scan only afterwards.
    bool disjoint = true;
    for (const Edge& e : pair.g_plus.edges) {
      if (pair.g_minus.has_edge(e.left, e.right)) {
        disjoint = false;
        break;
      }
    }
    if (!disjoint) continue;
    if (!check_no_repeated_edges(pair)) continue;
    return from_bipartite_pair(pair);
  }
  fail(errc::reject_budget_exceeded, "rejection budget exhausted");
}

MonteCarloEstimate estimate_exp_neg_phi(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                        std::size_t num_samples, std::uint64_t seed,
                                        ExactOracle& oracle) {
  if (num_samples == 0) fail(errc::invalid_argument, "need at least one sample");
  if (s.size() != x.size() || t.size() != y.size())
    fail(errc::invalid_argument, "side sequences must have matching lengths");
  if (oracle.count_bipartite(x, y) == 0)
    fail(errc::empty_ensemble, "no bipartite graph has these degrees");
  const double m_st = static_cast<double>(sum_of(s));

  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < num_samples; ++i) {
    Rng rng = Rng::substream(seed, i);
    const BipartiteGraph g = sample_bipartite_uniform(x, y, rng, oracle);
    double phi = 0.0;
    if (m_st > 0) {
      for (const Edge& e : g.edges)
        phi += static_cast<double>(s[static_cast<size_t>(e.left)]) *
               static_cast<double>(t[static_cast<size_t>(e.right)]) / m_st;
    }
    const double value = std::exp(-phi);
    sum += value;
    sum_sq += value * value;
  }
  MonteCarloEstimate out;
  out.samples = num_samples;
  out.estimate = sum / static_cast<double>(num_samples);
  const double variance =
      std::max(0.0, (sum_sq / static_cast<double>(num_samples) - out.estimate * out.estimate) *
                        static_cast<double>(num_samples) / std::max<double>(1.0, num_samples - 1));
  out.std_error = std::sqrt(variance / static_cast<double>(num_samples));
  return out;
}

}  // namespace dhenum
