#pragma once

#include <dhenum/types.hpp>

namespace dhenum {

/// Checks all Instance invariants: degree sums match the profile on both
/// sides, every profile entry has nonempty tail and head sizes, and both edge
/// masses are positive. Infeasible (count zero) instances are still valid.
void validate_instance(const Instance& inst);

/// Total tail mass sum(a+ * mu) and head mass sum(a- * mu) of a profile.
long long mu_mass_plus(const Mu& mu);
long long mu_mass_minus(const Mu& mu);
long long mu_edge_count(const Mu& mu);

/// Expands the profile into per-hyperedge size vectors, sorted descending
/// lexicographically on (tail_size, head_size). Any fixed order gives the
/// same value in every symmetric formula; this one is frozen for
/// reproducibility.
KVectors build_k_vectors(const Mu& mu);

Moments moments_of(const Seq& seq);

/// Minimum hyperedge size min(a+ + a-) over the profile support.
int kappa_of(const Mu& mu);

int max_of(const Seq& seq);
long long sum_of(const Seq& seq);
/// Dot product sum(a_i * b_i); sequences must have equal length.
long long dot_of(const Seq& a, const Seq& b);

void validate_dihypergraph(const Dihypergraph& h);

/// Degree sequences and size profile realized by a dihypergraph.
Instance instance_of(const Dihypergraph& h);

/// Encodes the dihypergraph as the pair (G+, G-): U-vertex j is joined to the
/// tail (resp. head) vertices of edge_order[j]. edge_order must be a
/// permutation of h.edges.
BipartitePair to_bipartite_pair(const Dihypergraph& h, const std::vector<DirectedEdge>& edge_order);

/// Inverse of to_bipartite_pair: reads off tails and heads from the columns,
/// forgetting labels. The pair must be edge-disjoint with every column
/// nonempty on at least one side, disjoint per column, and no two columns may
/// have identical neighborhoods in both graphs.
Dihypergraph from_bipartite_pair(const BipartitePair& p);

/// True iff no two distinct U-vertices have identical neighborhoods in both
/// graphs of the pair, i.e. the pair encodes a duplicate-free edge set.
bool check_no_repeated_edges(const BipartitePair& p);

}  // namespace dhenum
