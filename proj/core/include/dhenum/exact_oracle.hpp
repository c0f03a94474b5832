#pragma once

#include <dhenum/types.hpp>

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dhenum {

/// Forced / forbidden edge sets for constrained bipartite counting. The two
/// sets must be disjoint.
struct ForcedAvoidConstraint {
  std::vector<Edge> include;
  std::vector<Edge> avoid;
};

struct OracleLimits {
  /// Node-expansion cap shared by all operations of one oracle. Exhausting it
  /// raises errc::budget_exceeded instead of running unbounded.
  std::uint64_t work_budget = 500'000'000;
};

/// Exact brute-force counting of bipartite graphs, bipartite pairs and
/// dihypergraphs with given degree sequences, in arbitrary-precision
/// integers. Everything here is exponential-time and meant for desk-scale
/// inputs; the work budget is the guardrail.
///
/// Counting results are cached. Public methods serialize on an internal
/// lock, so concurrent calls return the same values as serial ones.
class ExactOracle {
 public:
  explicit ExactOracle(OracleLimits limits = {}) : limits_(limits) {}

  /// Number of simple bipartite graphs with exact left degrees x and right
  /// degrees y; 0 when the sums differ or the sequences are infeasible.
  BigInt count_bipartite(const Seq& x, const Seq& y);

  /// Same, restricted to graphs containing every include edge and none of
  /// the avoid edges.
  BigInt count_bipartite_constrained(const Seq& s, const Seq& t, const ForcedAvoidConstraint& c);

  /// Number of edge-disjoint ordered pairs (G+, G-) where G+ has degrees
  /// (s, t) and G- has degrees (x, y). Computed by summing avoid-constrained
  /// counts over the enumerated (x, y) ensemble.
  BigInt count_bipartite_pairs(const Seq& s, const Seq& t, const Seq& x, const Seq& y);
  /// Same quantity by direct enumeration of both ensembles; the two routes
  /// are cross-checked in the tests.
  BigInt count_bipartite_pairs_direct(const Seq& s, const Seq& t, const Seq& x, const Seq& y);

  /// Number of edge-labelled dihypergraphs: edge-disjoint pairs that also
  /// have no two right vertices with identical neighborhoods in both graphs.
  BigInt count_labelled(const Seq& d_plus, const Seq& k_plus, const Seq& d_minus, const Seq& k_minus);

  /// Number of dihypergraphs with the given degree sequences and size
  /// profile. Runs the hyperedge backtracking and the labelled-pair route and
  /// raises errc::not_divisible if they disagree.
  BigInt count_dihypergraphs(const Instance& inst);
  /// Backtracking route only (hyperedges placed in canonical order).
  BigInt count_dihypergraphs_direct(const Instance& inst);

  /// Exact probability that a uniform edge-disjoint pair has no two right
  /// vertices with identical neighborhoods in both graphs.
  BigRat prob_no_repeat(const Seq& d_plus, const Seq& k_plus, const Seq& d_minus, const Seq& k_minus);

  /// Number of edge-disjoint pairs (X, Y), X with degrees (x, y) and Y with
  /// degrees (s, t), for which some two right vertices have identical
  /// neighborhoods in both X and Y.
  BigInt count_q(const Seq& s, const Seq& t, const Seq& x, const Seq& y);

  /// All graphs with degrees (x, y), in a deterministic order.
  std::vector<BipartiteGraph> enumerate_bipartite(const Seq& x, const Seq& y);

  /// The two switching classes for edges f = vu and f_alt = vu' on top of an
  /// extendable prefix: graphs with degrees (x, y) containing prefix plus the
  /// first edge, avoiding the second, and containing no common neighbor w > v
  /// of u and u'. Returns (class of f over f_alt, class of f_alt over f).
  std::pair<std::vector<BipartiteGraph>, std::vector<BipartiteGraph>> enumerate_switching_sets(
      const BipartiteGraph& prefix, Edge f, Edge f_alt, const Seq& x, const Seq& y);

  std::uint64_t work_used() const { return work_used_; }
  void reset_work() { work_used_ = 0; }
  void set_work_budget(std::uint64_t budget) { limits_.work_budget = budget; }

 private:
  using Mask = std::uint64_t;

  void tick();
  BigInt count_bipartite_locked(const Seq& x, const Seq& y);
  BigInt count_constrained_locked(const Seq& s, const Seq& t, const std::vector<Edge>& include,
                                  const std::vector<Edge>& avoid);
  BigInt count_labelled_locked(const Seq& d_plus, const Seq& k_plus, const Seq& d_minus,
                               const Seq& k_minus);
  BigInt count_pairs_sum_locked(const Seq& s, const Seq& t, const Seq& x, const Seq& y);
  std::vector<Mask> enumerate_masks_locked(const Seq& x, const Seq& y);

  OracleLimits limits_;
  std::uint64_t work_used_ = 0;
  std::unordered_map<std::string, BigInt> cache_;
  std::recursive_mutex mutex_;
};

/// Degree-preserving 4-edge swap: removes vu and wu_alt, adds vu_alt and wu.
/// Requires vu, wu_alt present, vu_alt, wu absent and w > v.
BipartiteGraph apply_switching(const BipartiteGraph& g, int v, int u, int u_alt, int w);

}  // namespace dhenum
