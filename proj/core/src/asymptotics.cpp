#include <dhenum/asymptotics.hpp>

#include <dhenum/core_model.hpp>

#include <algorithm>
#include <cmath>

namespace dhenum {

namespace {

double lfact(long long k) { return std::lgamma(static_cast<double>(k) + 1.0); }

double lfact_sum(const Seq& seq) {
  double s = 0.0;
  for (int v : seq) s += lfact(v);
  return s;
}

BigInt factorial_big(long long k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

double pow_int(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

void require_valid_sides(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  if (s.size() != x.size() || t.size() != y.size())
    fail(errc::invalid_argument, "side sequences must have matching lengths");
  for (const Seq* q : {&s, &t, &x, &y})
    for (int v : *q)
      if (v < 0) fail(errc::invalid_argument, "degree sequences must be nonnegative");
}

void require_in_range(const BipartiteGraph& g) {
  for (const Edge& e : g.edges)
    if (e.left < 0 || e.left >= g.n_left || e.right < 0 || e.right >= g.n_right)
      fail(errc::invalid_argument, "graph edge endpoint out of range");
}

}  // namespace

double log_of(const BigInt& value) {
  if (value <= 0) fail(errc::invalid_argument, "log of a nonpositive integer");
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_of(const BigRat& value) {
  if (value <= 0) fail(errc::invalid_argument, "log of a nonpositive rational");
  return log_of(BigInt(value.get_num())) - log_of(BigInt(value.get_den()));
}

double log_value_of(const ExactFormulaParts& parts) {
  return log_of(parts.leading) + parts.exponent.get_d();
}

double ErrorBundle::near_regular_error() const { return eta + std::min(eta_plus, eta_minus); }
double ErrorBundle::martingale_minus_error() const { return eta + eta_star_minus; }
double ErrorBundle::martingale_plus_error() const { return eta + eta_star_plus; }

LogValue eval_fhat(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  require_valid_sides(s, t, x, y);
  const long long m_st = sum_of(s);
  const long long m_xy = sum_of(x);
  if (m_st != sum_of(t) || m_xy != sum_of(y))
    fail(errc::invalid_argument, "side sums must match");
  if (m_st <= 0 || m_xy <= 0) fail(errc::zero_mass, "edge mass must be positive on both sides");

  const Moments ms = moments_of(s), mt = moments_of(t), mx = moments_of(x), my = moments_of(y);
  LogValue out;
  out.log_value = lfact(m_st) + lfact(m_xy) - lfact_sum(s) - lfact_sum(t) - lfact_sum(x) -
                  lfact_sum(y);
  out.log_value -= static_cast<double>(ms.m2) * static_cast<double>(mt.m2) /
                   (2.0 * static_cast<double>(m_st) * static_cast<double>(m_st));
  out.log_value -= static_cast<double>(mx.m2) * static_cast<double>(my.m2) /
                   (2.0 * static_cast<double>(m_xy) * static_cast<double>(m_xy));
  out.log_value -= static_cast<double>(dot_of(s, x)) * static_cast<double>(dot_of(t, y)) /
                   (static_cast<double>(m_st) * static_cast<double>(m_xy));
  return out;
}

ExactFormulaParts eval_fhat_exact(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  require_valid_sides(s, t, x, y);
  const long long m_st = sum_of(s);
  const long long m_xy = sum_of(x);
  if (m_st != sum_of(t) || m_xy != sum_of(y))
    fail(errc::invalid_argument, "side sums must match");
  if (m_st <= 0 || m_xy <= 0) fail(errc::zero_mass, "edge mass must be positive on both sides");

  ExactFormulaParts parts;
  BigInt num = factorial_big(m_st) * factorial_big(m_xy);
  BigInt den = 1;
  for (const Seq* q : {&s, &t, &x, &y})
    for (int v : *q) den *= factorial_big(v);
  parts.leading = BigRat(num, den);
  parts.leading.canonicalize();

  const Moments ms = moments_of(s), mt = moments_of(t), mx = moments_of(x), my = moments_of(y);
  BigRat e1(to_big(ms.m2) * to_big(mt.m2), 2 * to_big(m_st) * to_big(m_st));
  BigRat e2(to_big(mx.m2) * to_big(my.m2), 2 * to_big(m_xy) * to_big(m_xy));
  BigRat e3(to_big(dot_of(s, x)) * to_big(dot_of(t, y)), to_big(m_st) * to_big(m_xy));
  e1.canonicalize();
  e2.canonicalize();
  e3.canonicalize();
  parts.exponent = -(e1 + e2 + e3);
  return parts;
}

LogValue eval_f(const Instance& inst) {
  validate_instance(inst);
  const KVectors kv = build_k_vectors(inst.mu);
  LogValue out = eval_fhat(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
  for (const auto& [key, cnt] : inst.mu) out.log_value -= lfact(cnt);
  return out;
}

ExactFormulaParts eval_f_exact(const Instance& inst) {
  validate_instance(inst);
  const KVectors kv = build_k_vectors(inst.mu);
  ExactFormulaParts parts = eval_fhat_exact(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
  BigInt orderings = 1;
  for (const auto& [key, cnt] : inst.mu) orderings *= factorial_big(cnt);
  parts.leading /= BigRat(orderings);
  parts.leading.canonicalize();
  return parts;
}

LogValue eval_bipartite_avoid_estimate(const Seq& s, const Seq& t, const BipartiteGraph& X) {
  for (const Seq* q : {&s, &t})
    for (int v : *q)
      if (v < 0) fail(errc::invalid_argument, "degree sequences must be nonnegative");
  if (X.n_left != static_cast<int>(s.size()) || X.n_right != static_cast<int>(t.size()))
    fail(errc::invalid_argument, "graph shape must match the degree sequences");
  require_in_range(X);
  const long long m_st = sum_of(s);
  LogValue out;
  if (m_st != sum_of(t)) {
    out.is_zero = true;
    return out;
  }
  const Moments ms = moments_of(s), mt = moments_of(t);
  const Seq xdeg = X.left_degrees();
  const Seq ydeg = X.right_degrees();
  const double delta = static_cast<double>(ms.max + mt.max) *
                       static_cast<double>(ms.max + mt.max + max_of(xdeg) + max_of(ydeg));
  if (ms.max < 1) {
    // Not covered by the estimate's hypotheses: with an all-zero left side
    // the only graph is empty, so return the bare multinomial and flag it.
    out.err_params["all_zero_left"] = 1.0;
    out.err_params["delta"] = delta;
    out.err_params["delta_sq_over_m"] = 0.0;
    return out;
  }

  out.log_value = lfact(m_st) - lfact_sum(s) - lfact_sum(t);
  out.log_value -= static_cast<double>(ms.m2) * static_cast<double>(mt.m2) /
                   (2.0 * static_cast<double>(m_st) * static_cast<double>(m_st));
  double cross = 0.0;
  for (const Edge& e : X.edges)
    cross += static_cast<double>(s[static_cast<size_t>(e.left)]) *
             static_cast<double>(t[static_cast<size_t>(e.right)]);
  out.log_value -= cross / static_cast<double>(m_st);
  out.err_params["delta"] = delta;
  out.err_params["delta_sq_over_m"] = delta * delta / static_cast<double>(m_st);
  return out;
}

IncludeRatioEstimate eval_include_ratio_main_term(const Seq& s, const Seq& t,
                                                  const BipartiteGraph& X, const Seq& x,
                                                  const Seq& y, int w, int z) {
  require_valid_sides(s, t, x, y);
  if (X.n_left != static_cast<int>(s.size()) || X.n_right != static_cast<int>(t.size()))
    fail(errc::invalid_argument, "graph shape must match the degree sequences");
  require_in_range(X);
  if (X.left_degrees() != x || X.right_degrees() != y)
    fail(errc::precondition_violated, "X must have degree sequence (x, y)");
  if (w < 0 || w >= X.n_left || z < 0 || z >= X.n_right)
    fail(errc::precondition_violated, "w or z out of range");
  if (X.has_edge(w, z)) fail(errc::precondition_violated, "wz must not lie in X");
  long long m_res = 0;
  for (size_t v = 0; v < s.size(); ++v) {
    if (s[v] < x[v]) fail(errc::precondition_violated, "s must dominate x componentwise");
    m_res += s[v] - x[v];
  }
  for (size_t u = 0; u < t.size(); ++u)
    if (t[u] < y[u]) fail(errc::precondition_violated, "t must dominate y componentwise");
  if (m_res < 2) fail(errc::precondition_violated, "residual edge count must be at least 2");

  IncludeRatioEstimate out;
  const Moments ms = moments_of(s), mt = moments_of(t);
  const double delta_tilde = pow_int(static_cast<double>(ms.max + mt.max), 2);
  out.err_param = delta_tilde * delta_tilde / static_cast<double>(m_res);

  const double lead = static_cast<double>(s[static_cast<size_t>(w)] - x[static_cast<size_t>(w)]) *
                      static_cast<double>(t[static_cast<size_t>(z)] - y[static_cast<size_t>(z)]) /
                      static_cast<double>(m_res);
  if (lead == 0.0) {
    out.value = 0.0;
    return out;
  }
  double cross = 0.0;
  for (const Edge& e : X.edges)
    cross += static_cast<double>(s[static_cast<size_t>(e.left)] - x[static_cast<size_t>(e.left)]) *
             static_cast<double>(t[static_cast<size_t>(e.right)] - y[static_cast<size_t>(e.right)]);
  out.value = lead * std::exp(-cross / (static_cast<double>(m_res) * static_cast<double>(m_res - 1)));
  return out;
}

LogValue eval_exp_neg_phi_sum_estimate(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                       const BigInt& b_xy) {
  require_valid_sides(s, t, x, y);
  LogValue out;
  if (b_xy == 0) {
    out.is_zero = true;
    return out;
  }
  if (b_xy < 0) fail(errc::invalid_argument, "ensemble size must be nonnegative");
  const long long m_st = sum_of(s);
  const long long m_xy = sum_of(x);
  out.log_value = log_of(b_xy);
  if (m_st > 0 && m_xy > 0)
    out.log_value -= static_cast<double>(dot_of(s, x)) * static_cast<double>(dot_of(t, y)) /
                     (static_cast<double>(m_st) * static_cast<double>(m_xy));
  const Moments ms = moments_of(s), mt = moments_of(t), mx = moments_of(x), my = moments_of(y);
  if (m_st > 0) {
    const double st = static_cast<double>(ms.max) * static_cast<double>(mt.max);
    out.err_params["phi_sum_error"] = st * st * pow_int(static_cast<double>(mx.max + my.max), 8) *
                                      static_cast<double>(m_xy + m_st) /
                                      (static_cast<double>(m_st) * static_cast<double>(m_st));
  } else {
    out.err_params["phi_sum_error"] = 0.0;
  }
  return out;
}

namespace {

PairErrorParams oriented_params(const Seq& s, const Seq& t, const Seq& x, const Seq& y) {
  const Moments ms = moments_of(s), mt = moments_of(t), mx = moments_of(x), my = moments_of(y);
  const double m_st = static_cast<double>(ms.m);
  const double m_xy = static_cast<double>(mx.m);
  const double st_max = static_cast<double>(ms.max + mt.max);
  const double xy_max = static_cast<double>(mx.max + my.max);

  PairErrorParams p;
  p.xi = pow_int(st_max, 4) / m_st + pow_int(st_max, 2) * pow_int(xy_max, 2) / m_st +
         pow_int(xy_max, 4) / m_xy;
  p.xi_s = ms.n1 * static_cast<double>(mt.max) * static_cast<double>(mx.max) / m_st;
  p.xi_t = mt.n1 * static_cast<double>(ms.max) * static_cast<double>(my.max) / m_st;
  p.xi_star_st = pow_int(static_cast<double>(ms.max) * static_cast<double>(mt.max), 2) *
                 pow_int(xy_max, 8) * (m_xy + m_st) / (m_st * m_st);
  p.delta = st_max * (st_max + xy_max);
  p.delta_tilde = st_max * st_max;
  return p;
}

}  // namespace

ErrorBundle compute_error_bundle(const Instance& inst) {
  validate_instance(inst);
  const KVectors kv = build_k_vectors(inst.mu);
  const Moments dp = moments_of(inst.d_plus), dm = moments_of(inst.d_minus);
  const Moments kp = moments_of(kv.k_plus), km = moments_of(kv.k_minus);
  const double m_plus = static_cast<double>(dp.m);
  const double m_minus = static_cast<double>(dm.m);
  const double plus_max = static_cast<double>(dp.max + kp.max);
  const double minus_max = static_cast<double>(dm.max + km.max);

  ErrorBundle b;
  b.eta = pow_int(plus_max, 4) / m_plus + pow_int(minus_max, 4) / m_minus;
  b.eta_minus = (pow_int(plus_max, 2) * pow_int(minus_max, 2) +
                 std::min(dm.n1 * dp.max * km.max, km.n1 * dm.max * kp.max)) /
                m_minus;
  b.eta_plus = (pow_int(plus_max, 2) * pow_int(minus_max, 2) +
                std::min(dp.n1 * dm.max * kp.max, kp.n1 * dp.max * km.max)) /
               m_plus;
  b.eta_star_minus = pow_int(plus_max, 2) * pow_int(minus_max, 2) / m_plus +
                     pow_int(static_cast<double>(dm.max) * km.max, 2) * pow_int(plus_max, 8) *
                         (m_plus + m_minus) / (m_minus * m_minus);
  b.eta_star_plus = pow_int(plus_max, 2) * pow_int(minus_max, 2) / m_minus +
                    pow_int(static_cast<double>(dp.max) * kp.max, 2) * pow_int(minus_max, 8) *
                        (m_plus + m_minus) / (m_plus * m_plus);
  b.fwd = oriented_params(inst.d_plus, kv.k_plus, inst.d_minus, kv.k_minus);
  b.rev = oriented_params(inst.d_minus, kv.k_minus, inst.d_plus, kv.k_plus);
  return b;
}

ApplicabilityReport applicability_report(const Instance& inst, double threshold) {
  validate_instance(inst);
  const ErrorBundle b = compute_error_bundle(inst);
  const KVectors kv = build_k_vectors(inst.mu);
  const Moments dp = moments_of(inst.d_plus), dm = moments_of(inst.d_minus);
  const Moments kp = moments_of(kv.k_plus), km = moments_of(kv.k_minus);

  ApplicabilityReport report;
  report.kappa = kappa_of(inst.mu);
  report.threshold = threshold;
  const bool kappa_ok = report.kappa >= 3;

  TheoremApplicability near;
  near.name = "near_regular";
  near.error_quantity = b.near_regular_error();
  near.kappa_ok = kappa_ok;
  near.applicable = kappa_ok && near.error_quantity < threshold;
  report.theorems.push_back(near);

  TheoremApplicability mminus;
  mminus.name = "martingale_minus";
  mminus.error_quantity = b.martingale_minus_error();
  mminus.side_quantity =
      pow_int(static_cast<double>(dm.max + km.max), 12) / static_cast<double>(dm.m);
  mminus.kappa_ok = kappa_ok;
  mminus.applicable =
      kappa_ok && mminus.error_quantity < threshold && mminus.side_quantity < threshold;
  report.theorems.push_back(mminus);

  TheoremApplicability mplus;
  mplus.name = "martingale_plus";
  mplus.error_quantity = b.martingale_plus_error();
  mplus.side_quantity =
      pow_int(static_cast<double>(dp.max + kp.max), 12) / static_cast<double>(dp.m);
  mplus.kappa_ok = kappa_ok;
  mplus.applicable =
      kappa_ok && mplus.error_quantity < threshold && mplus.side_quantity < threshold;
  report.theorems.push_back(mplus);
  return report;
}

RemovalReduced duplicate_removal_reduction(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                           int u1, int u2, const std::vector<int>& witnesses_s,
                                           const std::vector<int>& witnesses_x) {
  require_valid_sides(s, t, x, y);
  const int m = static_cast<int>(t.size());
  if (u1 < 0 || u2 < 0 || u1 >= m || u2 >= m || u1 == u2)
    fail(errc::precondition_violated, "u1 and u2 must be distinct right vertices");
  if (t[static_cast<size_t>(u1)] != t[static_cast<size_t>(u2)] ||
      y[static_cast<size_t>(u1)] != y[static_cast<size_t>(u2)])
    fail(errc::precondition_violated, "u1 and u2 must have equal degrees on both sides");
  if (static_cast<int>(witnesses_s.size()) != t[static_cast<size_t>(u1)] ||
      static_cast<int>(witnesses_x.size()) != y[static_cast<size_t>(u1)])
    fail(errc::precondition_violated, "witness set sizes must equal the removed degrees");

  RemovalReduced r{s, t, x, y};
  r.t_hat[static_cast<size_t>(u1)] = r.t_hat[static_cast<size_t>(u2)] = 0;
  r.y_hat[static_cast<size_t>(u1)] = r.y_hat[static_cast<size_t>(u2)] = 0;
  for (int w : witnesses_s) {
    if (w < 0 || w >= static_cast<int>(s.size()) || s[static_cast<size_t>(w)] < 2)
      fail(errc::precondition_violated, "left witnesses need degree at least 2");
    r.s_hat[static_cast<size_t>(w)] -= 2;
  }
  for (int w : witnesses_x) {
    if (w < 0 || w >= static_cast<int>(x.size()) || x[static_cast<size_t>(w)] < 2)
      fail(errc::precondition_violated, "left witnesses need degree at least 2");
    r.x_hat[static_cast<size_t>(w)] -= 2;
  }
  return r;
}

BigRat duplicate_removal_leading_bound(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                       int u1, const std::vector<int>& witnesses_s,
                                       const std::vector<int>& witnesses_x) {
  const long long m_st = sum_of(s);
  const long long m_xy = sum_of(x);
  const long long t_u1 = t[static_cast<size_t>(u1)];
  const long long y_u1 = y[static_cast<size_t>(u1)];
  BigInt num = 2 * factorial_big(t_u1) * factorial_big(t_u1) * factorial_big(y_u1) *
               factorial_big(y_u1);
  for (int w : witnesses_s) num *= BigInt(s[static_cast<size_t>(w)]) * s[static_cast<size_t>(w)];
  for (int w : witnesses_x) num *= BigInt(x[static_cast<size_t>(w)]) * x[static_cast<size_t>(w)];
  BigInt den = 1;
  for (long long i = 0; i < 2 * t_u1; ++i) den *= to_big(m_st - i);
  for (long long i = 0; i < 2 * y_u1; ++i) den *= to_big(m_xy - i);
  if (den <= 0) fail(errc::precondition_violated, "falling factorials must be positive");
  BigRat bound(num, den);
  bound.canonicalize();
  return bound;
}

}  // namespace dhenum
