#include <dhenum/core_model.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace dhenum {

Seq BipartiteGraph::left_degrees() const {
  Seq d(static_cast<size_t>(n_left), 0);
  for (const Edge& e : edges) ++d[static_cast<size_t>(e.left)];
  return d;
}

Seq BipartiteGraph::right_degrees() const {
  Seq d(static_cast<size_t>(n_right), 0);
  for (const Edge& e : edges) ++d[static_cast<size_t>(e.right)];
  return d;
}

bool BipartiteGraph::has_edge(int left, int right) const {
  return std::binary_search(edges.begin(), edges.end(), Edge{left, right});
}

void BipartiteGraph::normalize() {
  for (const Edge& e : edges) {
    if (e.left < 0 || e.left >= n_left || e.right < 0 || e.right >= n_right)
      fail(errc::invalid_argument, "bipartite edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(errc::invalid_argument, "repeated bipartite edge");
}

long long mu_mass_plus(const Mu& mu) {
  long long s = 0;
  for (const auto& [key, cnt] : mu) s += static_cast<long long>(key.first) * cnt;
  return s;
}

long long mu_mass_minus(const Mu& mu) {
  long long s = 0;
  for (const auto& [key, cnt] : mu) s += static_cast<long long>(key.second) * cnt;
  return s;
}

long long mu_edge_count(const Mu& mu) {
  long long s = 0;
  for (const auto& [key, cnt] : mu) s += cnt;
  return s;
}

long long sum_of(const Seq& seq) {
  return std::accumulate(seq.begin(), seq.end(), 0LL);
}

int max_of(const Seq& seq) {
  return seq.empty() ? 0 : *std::max_element(seq.begin(), seq.end());
}

long long dot_of(const Seq& a, const Seq& b) {
  if (a.size() != b.size()) fail(errc::invalid_argument, "dot product length mismatch");
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

void validate_instance(const Instance& inst) {
  if (inst.n < 0) fail(errc::invalid_argument, "negative vertex count");
  if (inst.d_plus.size() != static_cast<size_t>(inst.n) ||
      inst.d_minus.size() != static_cast<size_t>(inst.n))
    fail(errc::invalid_argument, "degree sequence length differs from vertex count");
  for (int d : inst.d_plus)
    if (d < 0) fail(errc::invalid_argument, "negative out-degree");
  for (int d : inst.d_minus)
    if (d < 0) fail(errc::invalid_argument, "negative in-degree");
  for (const auto& [key, cnt] : inst.mu) {
    if (cnt <= 0) fail(errc::invalid_argument, "profile count must be positive");
    if (key.first < 1 || key.second < 1)
      fail(errc::empty_side, "hyperedge tail and head must be nonempty");
  }
  long long m_plus = mu_mass_plus(inst.mu);
  long long m_minus = mu_mass_minus(inst.mu);
  if (sum_of(inst.d_plus) != m_plus)
    fail(errc::sum_mismatch, "out-degree sum does not match profile tail mass");
  if (sum_of(inst.d_minus) != m_minus)
    fail(errc::sum_mismatch, "in-degree sum does not match profile head mass");
  if (m_plus <= 0 || m_minus <= 0) fail(errc::zero_mass, "edge mass must be positive on both sides");
}

KVectors build_k_vectors(const Mu& mu) {
  KVectors kv;
  // std::map iterates ascending; canonical order is descending.
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    if (it->second <= 0) fail(errc::invalid_argument, "profile count must be positive");
    for (long long c = 0; c < it->second; ++c) {
      kv.k_plus.push_back(it->first.first);
      kv.k_minus.push_back(it->first.second);
    }
  }
  kv.m = static_cast<int>(kv.k_plus.size());
  return kv;
}

Moments moments_of(const Seq& seq) {
  Moments mo;
  for (int a : seq) {
    if (a < 0) fail(errc::invalid_argument, "moments need nonnegative entries");
    mo.m += a;
    mo.m2 += static_cast<long long>(a) * (a - 1);
    mo.max = std::max(mo.max, a);
  }
  if (!seq.empty()) {
    // n1 = sum |a_i - mean| = sum |n*a_i - M| / n, kept exact until one division.
    long long num = 0;
    const long long n = static_cast<long long>(seq.size());
    for (int a : seq) num += std::llabs(n * a - mo.m);
    mo.n1 = static_cast<double>(num) / static_cast<double>(n);
  }
  return mo;
}

int kappa_of(const Mu& mu) {
  if (mu.empty()) fail(errc::empty_profile, "empty size profile has no minimum hyperedge size");
  int k = 0;
  bool first = true;
  for (const auto& [key, cnt] : mu) {
    int s = key.first + key.second;
    if (first || s < k) k = s;
    first = false;
  }
  return k;
}

void validate_dihypergraph(const Dihypergraph& h) {
  if (h.n < 0) fail(errc::invalid_argument, "negative vertex count");
  std::set<DirectedEdge> seen;
  for (const DirectedEdge& e : h.edges) {
    if (e.tail.empty() || e.head.empty())
      fail(errc::empty_side, "hyperedge tail and head must be nonempty");
    auto check_side = [&](const std::vector<int>& side) {
      for (int v : side)
        if (v < 0 || v >= h.n) fail(errc::invalid_argument, "hyperedge vertex out of range");
      if (!std::is_sorted(side.begin(), side.end()) ||
          std::adjacent_find(side.begin(), side.end()) != side.end())
        fail(errc::invalid_argument, "hyperedge sides must be sorted vertex sets");
    };
    check_side(e.tail);
    check_side(e.head);
    std::vector<int> both;
    std::set_intersection(e.tail.begin(), e.tail.end(), e.head.begin(), e.head.end(),
                          std::back_inserter(both));
    if (!both.empty()) fail(errc::invalid_argument, "hyperedge tail and head must be disjoint");
    if (!seen.insert(e).second) fail(errc::invalid_argument, "repeated hyperedge");
  }
}

Instance instance_of(const Dihypergraph& h) {
  Instance inst;
  inst.n = h.n;
  inst.d_plus.assign(static_cast<size_t>(h.n), 0);
  inst.d_minus.assign(static_cast<size_t>(h.n), 0);
  for (const DirectedEdge& e : h.edges) {
    for (int v : e.tail) ++inst.d_plus[static_cast<size_t>(v)];
    for (int v : e.head) ++inst.d_minus[static_cast<size_t>(v)];
    ++inst.mu[{static_cast<int>(e.tail.size()), static_cast<int>(e.head.size())}];
  }
  return inst;
}

BipartitePair to_bipartite_pair(const Dihypergraph& h, const std::vector<DirectedEdge>& edge_order) {
  validate_dihypergraph(h);
  std::multiset<DirectedEdge> want(h.edges.begin(), h.edges.end());
  std::multiset<DirectedEdge> got(edge_order.begin(), edge_order.end());
  if (want != got) fail(errc::invalid_argument, "edge_order is not a permutation of the edge set");

  const int m = static_cast<int>(edge_order.size());
  BipartitePair p;
  p.g_plus.n_left = p.g_minus.n_left = h.n;
  p.g_plus.n_right = p.g_minus.n_right = m;
  for (int j = 0; j < m; ++j) {
    for (int v : edge_order[static_cast<size_t>(j)].tail) p.g_plus.edges.push_back({v, j});
    for (int v : edge_order[static_cast<size_t>(j)].head) p.g_minus.edges.push_back({v, j});
  }
  p.g_plus.normalize();
  p.g_minus.normalize();
  return p;
}

namespace {

std::vector<std::vector<int>> neighborhoods(const BipartiteGraph& g) {
  std::vector<std::vector<int>> nb(static_cast<size_t>(g.n_right));
  for (const Edge& e : g.edges) nb[static_cast<size_t>(e.right)].push_back(e.left);
  return nb;
}

}  // namespace

bool check_no_repeated_edges(const BipartitePair& p) {
  auto np = neighborhoods(p.g_plus);
  auto nm = neighborhoods(p.g_minus);
  const size_t m = np.size();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b)
      if (np[a] == np[b] && nm[a] == nm[b]) return false;
  return true;
}

Dihypergraph from_bipartite_pair(const BipartitePair& p) {
  if (p.g_plus.n_left != p.g_minus.n_left || p.g_plus.n_right != p.g_minus.n_right)
    fail(errc::invalid_argument, "pair must share one bipartition");
  auto np = neighborhoods(p.g_plus);
  auto nm = neighborhoods(p.g_minus);
  Dihypergraph h;
  h.n = p.g_plus.n_left;
  for (size_t j = 0; j < np.size(); ++j)
    h.edges.push_back({np[j], nm[j]});
  std::sort(h.edges.begin(), h.edges.end());
  // Throws on overlapping or empty sides and on duplicate columns, i.e. when
  // the pair does not encode a dihypergraph.
  validate_dihypergraph(h);
  return h;
}

}  // namespace dhenum
