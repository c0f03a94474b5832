#include <dhenum/families.hpp>

#include <dhenum/core_model.hpp>

#include <algorithm>

namespace dhenum {

Instance disjoint_support_instance(int m) {
  if (m < 1) fail(errc::invalid_argument, "family needs m >= 1");
  Instance inst;
  inst.n = 3 * m;
  inst.d_plus.assign(static_cast<size_t>(inst.n), 0);
  inst.d_minus.assign(static_cast<size_t>(inst.n), 0);
  for (int v = 0; v < m; ++v) inst.d_plus[static_cast<size_t>(v)] = 1;
  for (int v = m; v < 3 * m; ++v) inst.d_minus[static_cast<size_t>(v)] = 1;
  inst.mu[{1, 2}] = m;
  validate_instance(inst);
  return inst;
}

Instance irregular_tail_instance(int m) {
  if (m < 2) fail(errc::invalid_argument, "family needs m >= 2");
  Instance inst;
  inst.n = 3 * m - 1;
  inst.d_plus.assign(static_cast<size_t>(inst.n), 0);
  inst.d_minus.assign(static_cast<size_t>(inst.n), 0);
  inst.d_plus[0] = 2;
  for (int v = 1; v < m; ++v) inst.d_plus[static_cast<size_t>(v)] = 1;
  for (int v = m; v < 3 * m - 1; ++v) inst.d_minus[static_cast<size_t>(v)] = 1;
  inst.mu[{2, 1}] = 1;
  inst.mu[{1, 2}] = m - 1;
  validate_instance(inst);
  return inst;
}

namespace {

// Profiles as non-decreasing index sequences over the size-pair list.
void enumerate_profiles(const std::vector<SizePair>& pairs, const CorpusLimits& limits,
                        size_t from, int remaining_mass, int remaining_edges, Mu& current,
                        std::vector<Mu>& out) {
  if (!current.empty()) out.push_back(current);
  if (remaining_edges == 0) return;
  for (size_t i = from; i < pairs.size(); ++i) {
    const int size = pairs[i].first + pairs[i].second;
    if (size > remaining_mass) continue;
    ++current[pairs[i]];
    enumerate_profiles(pairs, limits, i, remaining_mass - size, remaining_edges - 1, current, out);
    if (--current[pairs[i]] == 0) current.erase(pairs[i]);
  }
}

// Degree-pair multisets: counts per type, types visited in descending order,
// so the emitted sequence is the canonical representative.
void enumerate_degree_pairs(const std::vector<SizePair>& types, size_t ti, int vertices_left,
                            int plus_left, int minus_left, std::vector<SizePair>& acc,
                            const Mu& mu, std::vector<Instance>& out) {
  if (plus_left == 0 && minus_left == 0) {
    Instance inst;
    inst.n = static_cast<int>(acc.size());
    for (const SizePair& p : acc) {
      inst.d_plus.push_back(p.first);
      inst.d_minus.push_back(p.second);
    }
    inst.mu = mu;
    out.push_back(std::move(inst));
    return;
  }
  if (ti == types.size() || vertices_left == 0) return;
  const auto [p, q] = types[ti];
  // Upper bound on how much mass the remaining types can still absorb.
  const int max_count = vertices_left;
  for (int c = 0; c <= max_count; ++c) {
    const int used_plus = c * p;
    const int used_minus = c * q;
    if (used_plus > plus_left || used_minus > minus_left) break;
    for (int r = 0; r < c; ++r) acc.push_back(types[ti]);
    enumerate_degree_pairs(types, ti + 1, vertices_left - c, plus_left - used_plus,
                           minus_left - used_minus, acc, mu, out);
    for (int r = 0; r < c; ++r) acc.pop_back();
  }
}

}  // namespace

std::vector<Instance> enumerate_instances(const CorpusLimits& limits) {
  std::vector<SizePair> pairs;
  for (int a = 1; a + 1 <= limits.max_total_mass; ++a)
    for (int b = 1; a + b <= limits.max_total_mass; ++b) pairs.push_back({a, b});

  std::vector<Mu> profiles;
  Mu current;
  enumerate_profiles(pairs, limits, 0, limits.max_total_mass, limits.max_edges, current, profiles);

  std::vector<SizePair> types;
  for (int p = limits.max_degree; p >= 0; --p)
    for (int q = limits.max_degree; q >= 0; --q)
      if (p + q > 0) types.push_back({p, q});

  std::vector<Instance> out;
  for (const Mu& mu : profiles) {
    const long long m_plus = mu_mass_plus(mu);
    const long long m_minus = mu_mass_minus(mu);
    if (m_plus + m_minus > limits.max_total_mass) continue;
    if (m_plus > static_cast<long long>(limits.max_n) * limits.max_degree) continue;
    if (m_minus > static_cast<long long>(limits.max_n) * limits.max_degree) continue;
    std::vector<SizePair> acc;
    enumerate_degree_pairs(types, 0, limits.max_n, static_cast<int>(m_plus),
                           static_cast<int>(m_minus), acc, mu, out);
  }
  for (const Instance& inst : out) validate_instance(inst);
  return out;
}

}  // namespace dhenum
