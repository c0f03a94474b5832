#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dhenum {

/// Arbitrary-precision nonnegative count. All enumeration results use this
/// type; there is no overflow path anywhere in the counting code.
using BigInt = mpz_class;
/// Exact rational, used wherever a probability must be exact.
using BigRat = mpq_class;

// gmpxx has no long long constructor.
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

using Seq = std::vector<int>;

/// Head/tail size profile: (tail_size, head_size) -> number of hyperedges.
/// Only positive counts are stored; map iteration order is the deterministic
/// serialization order.
using SizePair = std::pair<int, int>;
using Mu = std::map<SizePair, long long>;

enum class errc {
  sum_mismatch,
  empty_side,
  zero_mass,
  empty_profile,
  not_divisible,
  empty_ensemble,
  budget_exceeded,
  reject_budget_exceeded,
  precondition_violated,
  invalid_prefix,
  dead_end,
  invalid_argument,
  parse_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

/// Degree sequences plus hyperedge size profile. Vertices are 0-indexed here;
/// the JSON layer speaks 1-indexed.
struct Instance {
  int n = 0;
  Seq d_plus;
  Seq d_minus;
  Mu mu;
};

/// Per-hyperedge tail/head sizes in the canonical order: descending
/// lexicographic on (tail_size, head_size).
struct KVectors {
  Seq k_plus;
  Seq k_minus;
  int m = 0;
};

/// Sum, second falling-factorial moment, maximum and absolute deviation from
/// the mean of an integer sequence.
struct Moments {
  long long m = 0;       // sum
  long long m2 = 0;      // sum of a*(a-1)
  int max = 0;
  double n1 = 0.0;       // sum |a_i - mean|
};

/// One directed hyperedge: disjoint nonempty vertex sets, each sorted.
struct DirectedEdge {
  std::vector<int> tail;
  std::vector<int> head;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct Dihypergraph {
  int n = 0;
  std::vector<DirectedEdge> edges;
  friend auto operator<=>(const Dihypergraph&, const Dihypergraph&) = default;
};

/// Edge of a bipartite graph over (V, U); left indexes V, right indexes U.
struct Edge {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple bipartite graph stored as a sorted edge list.
struct BipartiteGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<Edge> edges;

  Seq left_degrees() const;
  Seq right_degrees() const;
  bool has_edge(int left, int right) const;
  /// Sorts and checks the edge list (ranges, duplicates).
  void normalize();
  friend auto operator<=>(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Two bipartite graphs over the same bipartition with disjoint edge sets.
struct BipartitePair {
  BipartiteGraph g_plus;
  BipartiteGraph g_minus;
};

}  // namespace dhenum
