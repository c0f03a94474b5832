#pragma once

#include <dhenum/exact_oracle.hpp>
#include <dhenum/rng.hpp>
#include <dhenum/types.hpp>

#include <cstdint>
#include <vector>

namespace dhenum {

/// State of the sequential edge generator: the prefix built so far, the
/// remaining capacities on both sides and the position (vertex, slot within
/// its degree) of the next edge. Left vertices are processed in index order;
/// vertex i receives exactly x_i edges before i+1 starts.
struct SamplerState {
  std::vector<Edge> prefix;
  Seq remaining_left;
  Seq remaining_right;
  int current_vertex = 0;
  int current_slot = 1;  // 1-based slot within the current vertex

  static SamplerState initial(const Seq& x, const Seq& y);
  bool finished() const;
  void push(Edge e);
};

/// Exact next-edge distribution on the right vertices: each probability is
/// the inclusion-count ratio divided by the remaining slot count of the
/// current left vertex. Probabilities are exact rationals summing to 1; the
/// support lists only positive entries.
struct EdgeDistribution {
  std::vector<std::pair<int, BigRat>> support;
};

EdgeDistribution rho_distribution(const SamplerState& state, const Seq& x, const Seq& y,
                                  ExactOracle& oracle);

/// Runs the sequential generator to completion. The output sequence is
/// exactly uniform over all degree-ordered edge sequences, so the edge set is
/// a uniform graph with degrees (x, y).
std::vector<Edge> sample_edge_sequence(const Seq& x, const Seq& y, Rng& rng, ExactOracle& oracle);

BipartiteGraph sample_bipartite_uniform(const Seq& x, const Seq& y, Rng& rng, ExactOracle& oracle);

struct RejectionStats {
  std::uint64_t attempts = 0;
};

/// Uniform dihypergraph with the instance's degrees and profile: draws the
/// two bipartite graphs independently and uniformly, then rejects pairs that
/// share an edge or encode a repeated hyperedge.
Dihypergraph sample_dihypergraph(const Instance& inst, Rng& rng, ExactOracle& oracle,
                                 std::uint64_t max_rejects = 1'000'000,
                                 RejectionStats* stats = nullptr);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo mean of exp(-sum_{vu in Y} s_v t_u / M_st) over uniform graphs
/// Y with degrees (x, y). Sample i uses Rng::substream(seed, i).
MonteCarloEstimate estimate_exp_neg_phi(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                        std::size_t num_samples, std::uint64_t seed,
                                        ExactOracle& oracle);

}  // namespace dhenum
