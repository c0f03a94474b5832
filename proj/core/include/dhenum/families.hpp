#pragma once

#include <dhenum/types.hpp>

#include <vector>

namespace dhenum {

/// m hyperedges, each a unit tail with a two-vertex head, all on disjoint
/// unit-degree supports: n = 3m, vertices 0..m-1 carry the tails. The exact
/// count is (2m)! / 2^m and every correction term of the estimate vanishes.
Instance disjoint_support_instance(int m);

/// Irregular family: one tail vertex of out-degree 2, unit degrees elsewhere,
/// profile one (2,1) hyperedge plus m-1 (1,2) hyperedges, n = 3m - 1.
/// Needs m >= 2 (a lone hyperedge cannot revisit a tail vertex).
Instance irregular_tail_instance(int m);

/// Exhaustive-enumeration bounds for the identity test corpus. Instances are
/// canonical representatives: degree pairs sorted descending and no isolated
/// vertices, since relabeling and zero-degree padding change no count.
struct CorpusLimits {
  int max_n = 5;
  int max_edges = 3;
  int max_degree = 3;
  int max_total_mass = 14;  // sum of both degree sums
};

std::vector<Instance> enumerate_instances(const CorpusLimits& limits);

}  // namespace dhenum
