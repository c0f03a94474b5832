#include <dhenum/exact_oracle.hpp>

#include <dhenum/core_model.hpp>

#include <algorithm>
#include <cstring>
#include <map>
#include <string>

namespace dhenum {

namespace {

constexpr int kMaxGridCells = 60;  // mask-based enumeration limit
constexpr int kMaxPackedLeft = 15;  // labeled-memo limit: 4 bits per capacity

void check_nonnegative(const Seq& seq, const char* name) {
  // The byte-packed cache keys and the exponential algorithms both assume
  // desk-scale sequences; reject anything beyond instead of miscounting.
  if (seq.size() > 120)
    fail(errc::invalid_argument, std::string(name) + " exceeds the desk-scale length limit");
  for (int v : seq) {
    if (v < 0) fail(errc::invalid_argument, std::string(name) + " must be nonnegative");
    if (v > 120)
      fail(errc::invalid_argument, std::string(name) + " exceeds the desk-scale degree limit");
  }
}

void append_seq(std::string& key, const Seq& seq) {
  key.push_back(static_cast<char>(seq.size()));
  for (int v : seq) key.push_back(static_cast<char>(v));
}

// Right-vertex neighborhood of a grid mask; cell index = right * n_left + left.
std::uint64_t column_of(std::uint64_t mask, int u, int n_left) {
  return (mask >> (u * n_left)) & ((std::uint64_t{1} << n_left) - 1);
}

struct GridShape {
  int n_left = 0;
  int n_right = 0;
};

GridShape grid_shape(const Seq& x, const Seq& y) {
  GridShape g{static_cast<int>(x.size()), static_cast<int>(y.size())};
  if (g.n_left * g.n_right > kMaxGridCells)
    fail(errc::invalid_argument, "bipartite grid too large for mask enumeration");
  return g;
}

BipartiteGraph mask_to_graph(std::uint64_t mask, int n_left, int n_right) {
  BipartiteGraph g{n_left, n_right, {}};
  for (int u = 0; u < n_right; ++u)
    for (int v = 0; v < n_left; ++v)
      if (mask >> (u * n_left + v) & 1) g.edges.push_back({v, u});
  g.normalize();
  return g;
}

std::uint64_t graph_to_mask(const BipartiteGraph& g) {
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges) mask |= std::uint64_t{1} << (e.right * g.n_left + e.left);
  return mask;
}

// True iff some two right vertices have equal neighborhoods in both masks.
bool has_duplicate_column_pair(std::uint64_t a, std::uint64_t b, int n_left, int n_right) {
  for (int u1 = 0; u1 < n_right; ++u1)
    for (int u2 = u1 + 1; u2 < n_right; ++u2)
      if (column_of(a, u1, n_left) == column_of(a, u2, n_left) &&
          column_of(b, u1, n_left) == column_of(b, u2, n_left))
        return true;
  return false;
}

BigInt factorial_big(long long k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

// Counter over graphs with the given degrees, one right vertex at a time,
// memoized on the multiset of remaining left capacities. Left labels do not
// matter once constraints are gone, so symmetric states collapse.
class UnconstrainedCounter {
 public:
  UnconstrainedCounter(Seq caps, Seq cols, std::uint64_t* work, std::uint64_t budget)
      : cols_(std::move(cols)), work_(work), budget_(budget) {
    for (int c : caps)
      if (c > 0) caps_.push_back(c);
    std::sort(caps_.begin(), caps_.end(), std::greater<int>());
    std::sort(cols_.begin(), cols_.end(), std::greater<int>());
  }

  BigInt run() { return count(0, caps_); }

 private:
  BigInt count(size_t j, Seq caps) {
    if (++*work_ > budget_) fail(errc::budget_exceeded, "counting work budget exhausted");
    while (j < cols_.size() && cols_[j] == 0) ++j;
    if (j == cols_.size()) return 1;
    const int need = cols_[j];
    // Remaining columns are a suffix of the fixed sorted list, so their
    // count identifies them; together with the capacity multiset that is the
    // whole state.
    std::string key;
    key.push_back(static_cast<char>(cols_.size() - j));
    append_seq(key, caps);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // Group capacities by value and distribute the column's degree over the
    // groups; within a group the choice is a binomial.
    std::vector<std::pair<int, int>> groups;  // (value, count), values descending
    for (int c : caps) {
      if (!groups.empty() && groups.back().first == c)
        ++groups.back().second;
      else
        groups.push_back({c, 1});
    }
    BigInt total = 0;
    Seq pick(groups.size(), 0);
    distribute(j, need, 0, groups, pick, caps, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  void distribute(size_t j, int remaining, size_t gi, const std::vector<std::pair<int, int>>& groups,
                  Seq& pick, const Seq& caps, BigInt& total) {
    if (remaining == 0) {
      apply_pick(j, groups, pick, total);
      return;
    }
    if (gi == groups.size()) return;
    int avail = 0;
    for (size_t g = gi; g < groups.size(); ++g) avail += groups[g].second;
    if (avail < remaining) return;
    const int take_max = std::min(remaining, groups[gi].second);
    for (int take = 0; take <= take_max; ++take) {
      pick[gi] = take;
      distribute(j, remaining - take, gi + 1, groups, pick, caps, total);
    }
    pick[gi] = 0;
  }

  void apply_pick(size_t j, const std::vector<std::pair<int, int>>& groups, const Seq& pick,
                  BigInt& total) {
    BigInt ways = 1;
    Seq next;
    for (size_t g = 0; g < groups.size(); ++g) {
      const auto [value, count_in_group] = groups[g];
      if (pick[g] > 0) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(count_in_group),
                     static_cast<unsigned long>(pick[g]));
        ways *= binom;
      }
      for (int r = 0; r < count_in_group - pick[g]; ++r) next.push_back(value);
      for (int r = 0; r < pick[g]; ++r)
        if (value - 1 > 0) next.push_back(value - 1);
    }
    std::sort(next.begin(), next.end(), std::greater<int>());
    total += ways * count(j + 1, std::move(next));
  }

  Seq caps_;
  Seq cols_;
  std::uint64_t* work_;
  std::uint64_t budget_;
  std::unordered_map<std::string, BigInt> memo_;
};

// Counter with forced and forbidden cells. Labels are pinned by the
// constraints, so the memo key is the full capacity vector packed 4 bits per
// left vertex plus the current column.
class ConstrainedCounter {
 public:
  ConstrainedCounter(const Seq& s, const Seq& t, std::uint64_t include_mask,
                     std::uint64_t avoid_mask, std::uint64_t* work, std::uint64_t budget)
      : caps_(s), cols_(t), include_(include_mask), avoid_(avoid_mask), work_(work),
        budget_(budget) {
    n_ = static_cast<int>(s.size());
  }

  BigInt run() {
    if (n_ > kMaxPackedLeft || cols_.size() > static_cast<size_t>(kMaxPackedLeft))
      fail(errc::invalid_argument, "constrained counting limited to 15x15 grids");
    for (int c : caps_)
      if (c > kMaxPackedLeft) fail(errc::invalid_argument, "constrained counting needs degrees <= 15");
    return count(0);
  }

 private:
  std::uint64_t pack_state(int u) const {
    std::uint64_t key = static_cast<std::uint64_t>(u);
    for (int v = 0; v < n_; ++v) key = (key << 4) | static_cast<std::uint64_t>(caps_[v]);
    return key;
  }

  BigInt count(int u) {
    if (++*work_ > budget_) fail(errc::budget_exceeded, "counting work budget exhausted");
    if (u == static_cast<int>(cols_.size())) return 1;
    const std::uint64_t key = pack_state(u);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    BigInt total = 0;
    int need = cols_[static_cast<size_t>(u)];
    bool feasible = true;
    Seq forced;
    for (int v = 0; v < n_; ++v) {
      if (include_ >> (u * n_ + v) & 1) {
        if (caps_[v] == 0) {
          feasible = false;
          break;
        }
        forced.push_back(v);
      }
    }
    if (feasible && static_cast<int>(forced.size()) <= need) {
      for (int v : forced) --caps_[v];
      choose(u, 0, need - static_cast<int>(forced.size()), total);
      for (int v : forced) ++caps_[v];
    }
    memo_.emplace(key, total);
    return total;
  }

  void choose(int u, int from, int need, BigInt& total) {
    if (++*work_ > budget_) fail(errc::budget_exceeded, "counting work budget exhausted");
    if (need == 0) {
      total += count(u + 1);
      return;
    }
    for (int v = from; v <= n_ - need; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << (u * n_ + v);
      if ((include_ & bit) || (avoid_ & bit) || caps_[v] == 0) continue;
      --caps_[v];
      choose(u, v + 1, need - 1, total);
      ++caps_[v];
    }
  }

  Seq caps_;
  Seq cols_;
  std::uint64_t include_;
  std::uint64_t avoid_;
  int n_;
  std::uint64_t* work_;
  std::uint64_t budget_;
  std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace

void ExactOracle::tick() {
  if (++work_used_ > limits_.work_budget)
    fail(errc::budget_exceeded, "counting work budget exhausted");
}

BigInt ExactOracle::count_bipartite(const Seq& x, const Seq& y) {
  std::lock_guard lock(mutex_);
  return count_bipartite_locked(x, y);
}

BigInt ExactOracle::count_bipartite_locked(const Seq& x, const Seq& y) {
  check_nonnegative(x, "left degrees");
  check_nonnegative(y, "right degrees");
  if (sum_of(x) != sum_of(y)) return 0;
  std::string key = "B";
  append_seq(key, x);
  append_seq(key, y);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  BigInt result = UnconstrainedCounter(x, y, &work_used_, limits_.work_budget).run();
  cache_.emplace(std::move(key), result);
  return result;
}

BigInt ExactOracle::count_bipartite_constrained(const Seq& s, const Seq& t,
                                                const ForcedAvoidConstraint& c) {
  std::lock_guard lock(mutex_);
  return count_constrained_locked(s, t, c.include, c.avoid);
}

BigInt ExactOracle::count_constrained_locked(const Seq& s, const Seq& t,
                                             const std::vector<Edge>& include,
                                             const std::vector<Edge>& avoid) {
  check_nonnegative(s, "left degrees");
  check_nonnegative(t, "right degrees");
  const GridShape g = grid_shape(s, t);
  std::uint64_t include_mask = 0, avoid_mask = 0;
  for (const Edge& e : include) {
    if (e.left < 0 || e.left >= g.n_left || e.right < 0 || e.right >= g.n_right)
      fail(errc::invalid_argument, "constraint edge out of range");
    include_mask |= std::uint64_t{1} << (e.right * g.n_left + e.left);
  }
  for (const Edge& e : avoid) {
    if (e.left < 0 || e.left >= g.n_left || e.right < 0 || e.right >= g.n_right)
      fail(errc::invalid_argument, "constraint edge out of range");
    avoid_mask |= std::uint64_t{1} << (e.right * g.n_left + e.left);
  }
  if (include_mask & avoid_mask)
    fail(errc::invalid_argument, "include and avoid sets must be disjoint");
  if (sum_of(s) != sum_of(t)) return 0;

  std::string key = "C";
  append_seq(key, s);
  append_seq(key, t);
  key.append(reinterpret_cast<const char*>(&include_mask), sizeof include_mask);
  key.append(reinterpret_cast<const char*>(&avoid_mask), sizeof avoid_mask);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  BigInt result =
      ConstrainedCounter(s, t, include_mask, avoid_mask, &work_used_, limits_.work_budget).run();
  cache_.emplace(std::move(key), result);
  return result;
}

std::vector<ExactOracle::Mask> ExactOracle::enumerate_masks_locked(const Seq& x, const Seq& y) {
  check_nonnegative(x, "left degrees");
  check_nonnegative(y, "right degrees");
  const GridShape g = grid_shape(x, y);
  std::vector<Mask> out;
  if (sum_of(x) != sum_of(y)) return out;

  Seq caps = x;
  // DFS over columns; within a column, neighbor sets in increasing vertex
  // order. The output order is therefore deterministic.
  auto rec = [&](auto&& self, int u, Mask acc) -> void {
    tick();
    if (u == g.n_right) {
      out.push_back(acc);
      return;
    }
    const int need = y[static_cast<size_t>(u)];
    auto pick = [&](auto&& pick_self, int from, int left_to_pick, Mask acc2) -> void {
      tick();
      if (left_to_pick == 0) {
        self(self, u + 1, acc2);
        return;
      }
      for (int v = from; v <= g.n_left - left_to_pick; ++v) {
        if (caps[static_cast<size_t>(v)] == 0) continue;
        --caps[static_cast<size_t>(v)];
        pick_self(pick_self, v + 1, left_to_pick - 1,
                  acc2 | (std::uint64_t{1} << (u * g.n_left + v)));
        ++caps[static_cast<size_t>(v)];
      }
    };
    pick(pick, 0, need, acc);
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<BipartiteGraph> ExactOracle::enumerate_bipartite(const Seq& x, const Seq& y) {
  std::lock_guard lock(mutex_);
  std::vector<BipartiteGraph> out;
  for (Mask m : enumerate_masks_locked(x, y))
    out.push_back(mask_to_graph(m, static_cast<int>(x.size()), static_cast<int>(y.size())));
  return out;
}

BigInt ExactOracle::count_pairs_sum_locked(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  // Pair count as the ensemble sum of avoid-constrained counts.
  if (count_bipartite_locked(x, y) == 0 || count_bipartite_locked(s, t) == 0) return 0;
  const int n_left = static_cast<int>(x.size());
  const int n_right = static_cast<int>(y.size());
  BigInt total = 0;
  for (Mask m : enumerate_masks_locked(x, y)) {
    std::vector<Edge> avoid;
    for (int u = 0; u < n_right; ++u)
      for (int v = 0; v < n_left; ++v)
        if (m >> (u * n_left + v) & 1) avoid.push_back({v, u});
    total += count_constrained_locked(s, t, {}, avoid);
  }
  return total;
}

BigInt ExactOracle::count_bipartite_pairs(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  std::lock_guard lock(mutex_);
  std::string key = "P";
  append_seq(key, s);
  append_seq(key, t);
  append_seq(key, x);
  append_seq(key, y);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  BigInt result = count_pairs_sum_locked(s, t, x, y);
  cache_.emplace(std::move(key), result);
  return result;
}

BigInt ExactOracle::count_bipartite_pairs_direct(const Seq& s, const Seq& t, const Seq& x,
                                                 const Seq& y) {
  std::lock_guard lock(mutex_);
  auto first = enumerate_masks_locked(s, t);
  auto second = enumerate_masks_locked(x, y);
  unsigned long long pairs = 0;
  for (Mask a : first) {
    tick();
    for (Mask b : second)
      if ((a & b) == 0) ++pairs;
  }
  return BigInt(static_cast<unsigned long>(pairs));
}

BigInt ExactOracle::count_labelled(const Seq& d_plus, const Seq& k_plus, const Seq& d_minus,
                                   const Seq& k_minus) {
  std::lock_guard lock(mutex_);
  return count_labelled_locked(d_plus, k_plus, d_minus, k_minus);
}

BigInt ExactOracle::count_labelled_locked(const Seq& d_plus, const Seq& k_plus, const Seq& d_minus,
                                          const Seq& k_minus) {
  if (k_plus.size() != k_minus.size())
    fail(errc::invalid_argument, "edge size sequences must have equal length");
  std::string key = "L";
  append_seq(key, d_plus);
  append_seq(key, k_plus);
  append_seq(key, d_minus);
  append_seq(key, k_minus);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  const int n_left = static_cast<int>(d_plus.size());
  const int n_right = static_cast<int>(k_plus.size());
  auto plus = enumerate_masks_locked(d_plus, k_plus);
  auto minus = enumerate_masks_locked(d_minus, k_minus);
  unsigned long long labelled = 0;
  for (Mask a : plus) {
    tick();
    for (Mask b : minus) {
      if ((a & b) != 0) continue;
      if (!has_duplicate_column_pair(a, b, n_left, n_right)) ++labelled;
    }
  }
  BigInt result(static_cast<unsigned long>(labelled));
  cache_.emplace(std::move(key), result);
  return result;
}

BigInt ExactOracle::count_q(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  std::lock_guard lock(mutex_);
  if (t.size() != y.size()) fail(errc::invalid_argument, "right sequences must have equal length");
  auto ys = enumerate_masks_locked(s, t);
  auto xs = enumerate_masks_locked(x, y);
  const int n_left = static_cast<int>(s.size());
  const int n_right = static_cast<int>(t.size());
  unsigned long long q = 0;
  for (Mask b : ys) {
    tick();
    for (Mask a : xs) {
      if ((a & b) != 0) continue;
      if (has_duplicate_column_pair(a, b, n_left, n_right)) ++q;
    }
  }
  return BigInt(static_cast<unsigned long>(q));
}

BigInt ExactOracle::count_dihypergraphs_direct(const Instance& inst) {
  std::lock_guard lock(mutex_);
  validate_instance(inst);
  if (inst.n > 31) fail(errc::invalid_argument, "hyperedge backtracking limited to 31 vertices");
  const KVectors kv = build_k_vectors(inst.mu);

  Seq caps_plus = inst.d_plus;
  Seq caps_minus = inst.d_minus;
  BigInt total = 0;

  // Hyperedges are placed in canonical size order. Within a run of equal
  // (tail_size, head_size) the (tail, head) codes must strictly increase,
  // so each edge set is produced exactly once.
  using Code = std::pair<std::uint32_t, std::uint32_t>;
  auto rec = [&](auto&& self, int j, Code prev) -> void {
    tick();
    if (j == kv.m) {
      total += 1;
      return;
    }
    const int tail_size = kv.k_plus[static_cast<size_t>(j)];
    const int head_size = kv.k_minus[static_cast<size_t>(j)];
    const bool same_class = j > 0 && kv.k_plus[static_cast<size_t>(j - 1)] == tail_size &&
                            kv.k_minus[static_cast<size_t>(j - 1)] == head_size;
    const Code lower = same_class ? prev : Code{0, 0};

    auto pick_head = [&](auto&& head_self, std::uint32_t tail_mask, int from, int left_to_pick,
                         std::uint32_t head_mask) -> void {
      tick();
      if (left_to_pick == 0) {
        const Code code{tail_mask, head_mask};
        if (code > lower) self(self, j + 1, code);
        return;
      }
      for (int v = from; v <= inst.n - left_to_pick; ++v) {
        if (caps_minus[static_cast<size_t>(v)] == 0 || (tail_mask >> v & 1)) continue;
        --caps_minus[static_cast<size_t>(v)];
        head_self(head_self, tail_mask, v + 1, left_to_pick - 1,
                  head_mask | (std::uint32_t{1} << v));
        ++caps_minus[static_cast<size_t>(v)];
      }
    };
    auto pick_tail = [&](auto&& tail_self, int from, int left_to_pick,
                         std::uint32_t tail_mask) -> void {
      tick();
      if (left_to_pick == 0) {
        if (tail_mask < lower.first) return;  // heads cannot rescue a smaller tail
        pick_head(pick_head, tail_mask, 0, head_size, 0);
        return;
      }
      for (int v = from; v <= inst.n - left_to_pick; ++v) {
        if (caps_plus[static_cast<size_t>(v)] == 0) continue;
        --caps_plus[static_cast<size_t>(v)];
        tail_self(tail_self, v + 1, left_to_pick - 1, tail_mask | (std::uint32_t{1} << v));
        ++caps_plus[static_cast<size_t>(v)];
      }
    };
    pick_tail(pick_tail, 0, tail_size, 0);
  };
  rec(rec, 0, Code{0, 0});
  return total;
}

BigInt ExactOracle::count_dihypergraphs(const Instance& inst) {
  BigInt direct = count_dihypergraphs_direct(inst);

  std::lock_guard lock(mutex_);
  const KVectors kv = build_k_vectors(inst.mu);
  BigInt labelled = count_labelled_locked(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
  BigInt orderings = 1;
  for (const auto& [key, cnt] : inst.mu) orderings *= factorial_big(cnt);
  BigInt quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), labelled.get_mpz_t(),
              orderings.get_mpz_t());
  if (remainder != 0)
    fail(errc::not_divisible, "labelled count is not divisible by the profile orderings");
  if (quotient != direct)
    fail(errc::not_divisible, "backtracking and labelled-pair routes disagree");
  return direct;
}

BigRat ExactOracle::prob_no_repeat(const Seq& d_plus, const Seq& k_plus, const Seq& d_minus,
                                   const Seq& k_minus) {
  std::lock_guard lock(mutex_);
  BigInt pairs = count_pairs_sum_locked(d_plus, k_plus, d_minus, k_minus);
  if (pairs == 0) fail(errc::empty_ensemble, "no edge-disjoint pairs with these degrees");
  BigInt labelled = count_labelled_locked(d_plus, k_plus, d_minus, k_minus);
  BigRat p(labelled, pairs);
  p.canonicalize();
  return p;
}

std::pair<std::vector<BipartiteGraph>, std::vector<BipartiteGraph>>
ExactOracle::enumerate_switching_sets(const BipartiteGraph& prefix, Edge f, Edge f_alt,
                                      const Seq& x, const Seq& y) {
  std::lock_guard lock(mutex_);
  if (f.left != f_alt.left || f.right == f_alt.right)
    fail(errc::precondition_violated, "switching edges must share the left endpoint only");
  if (prefix.has_edge(f.left, f.right) || prefix.has_edge(f_alt.left, f_alt.right))
    fail(errc::precondition_violated, "switching edges must not lie in the prefix");
  if (count_constrained_locked(x, y, prefix.edges, {}) == 0)
    fail(errc::invalid_prefix, "prefix is not extendable to the degree sequence");

  const GridShape g = grid_shape(x, y);
  const Mask prefix_mask = graph_to_mask(prefix);
  const int v = f.left;
  const int u = f.right;
  const int u_alt = f_alt.right;
  const Mask f_bit = Mask{1} << (u * g.n_left + v);
  const Mask f_alt_bit = Mask{1} << (u_alt * g.n_left + v);

  // No common neighbor w > v of u and u_alt.
  auto no_high_two_path = [&](Mask m) {
    const std::uint64_t col_u = column_of(m, u, g.n_left);
    const std::uint64_t col_alt = column_of(m, u_alt, g.n_left);
    const std::uint64_t above_v = ~((std::uint64_t{2} << v) - 1);
    return (col_u & col_alt & above_v) == 0;
  };

  std::vector<BipartiteGraph> star_f, star_f_alt;
  for (Mask m : enumerate_masks_locked(x, y)) {
    tick();
    if ((m & prefix_mask) != prefix_mask) continue;
    if (!no_high_two_path(m)) continue;
    if ((m & f_bit) && !(m & f_alt_bit)) star_f.push_back(mask_to_graph(m, g.n_left, g.n_right));
    if ((m & f_alt_bit) && !(m & f_bit)) star_f_alt.push_back(mask_to_graph(m, g.n_left, g.n_right));
  }
  return {std::move(star_f), std::move(star_f_alt)};
}

BipartiteGraph apply_switching(const BipartiteGraph& g, int v, int u, int u_alt, int w) {
  if (w <= v) fail(errc::precondition_violated, "switching needs w > v");
  if (!g.has_edge(v, u) || !g.has_edge(w, u_alt))
    fail(errc::precondition_violated, "switching needs vu and w u_alt present");
  if (g.has_edge(v, u_alt) || g.has_edge(w, u))
    fail(errc::precondition_violated, "switching needs v u_alt and wu absent");
  BipartiteGraph out = g;
  std::erase(out.edges, Edge{v, u});
  std::erase(out.edges, Edge{w, u_alt});
  out.edges.push_back({v, u_alt});
  out.edges.push_back({w, u});
  out.normalize();
  return out;
}

}  // namespace dhenum
