#pragma once

#include <dhenum/types.hpp>

#include <map>
#include <string>
#include <vector>

namespace dhenum {

/// Natural log of a positive formula value, with named nonnegative error
/// parameters alongside. is_zero marks a vanishing leading product.
struct LogValue {
  double log_value = 0.0;
  bool is_zero = false;
  std::map<std::string, double> err_params;
};

/// Error parameters attached to one orientation (s, t, x, y) of a pair-count
/// estimate.
struct PairErrorParams {
  double xi = 0.0;
  double xi_s = 0.0;
  double xi_t = 0.0;
  double xi_star_st = 0.0;
  double delta = 0.0;        // (s_max+t_max)(s_max+t_max+x_max+y_max)
  double delta_tilde = 0.0;  // (s_max+t_max)^2
};

/// All error parameters of the enumeration estimates, computed from moments
/// only. fwd uses (s,t,x,y) = (d+,k+,d-,k-); rev swaps the sides.
struct ErrorBundle {
  double eta = 0.0;
  double eta_plus = 0.0;
  double eta_minus = 0.0;
  double eta_star_plus = 0.0;
  double eta_star_minus = 0.0;
  PairErrorParams fwd;
  PairErrorParams rev;

  double near_regular_error() const;     // eta + min(eta_plus, eta_minus)
  double martingale_minus_error() const; // eta + eta_star_minus
  double martingale_plus_error() const;  // eta + eta_star_plus
};

/// Leading term and exponent of a formula value as exact rationals:
/// value = leading * exp(exponent). Slow path used to cross-validate the
/// floating evaluation on small inputs.
struct ExactFormulaParts {
  BigRat leading;
  BigRat exponent;
};

/// log of the dihypergraph count estimate: multinomial leading term over
/// degree, size and profile factorials times the second-moment exponential
/// correction.
LogValue eval_f(const Instance& inst);
ExactFormulaParts eval_f_exact(const Instance& inst);

/// Labelled-level variant of eval_f on explicit bipartite degree sequences;
/// equals eval_f plus the log of the profile orderings.
LogValue eval_fhat(const Seq& s, const Seq& t, const Seq& x, const Seq& y);
ExactFormulaParts eval_fhat_exact(const Seq& s, const Seq& t, const Seq& x, const Seq& y);

/// Estimate of the number of bipartite graphs with degrees (s, t) avoiding
/// the edges of X. err_params carry delta and delta^2 / M_st.
LogValue eval_bipartite_avoid_estimate(const Seq& s, const Seq& t, const BipartiteGraph& X);

struct IncludeRatioEstimate {
  double value = 0.0;       // main term of the one-more-edge inclusion ratio
  double err_param = 0.0;   // delta_tilde^2 / M'
};

/// Main term of B_incl(s,t,X + wz) / B_incl(s,t,X) where X has degrees
/// (x, y): residual degree product over M' with the exponential correction.
IncludeRatioEstimate eval_include_ratio_main_term(const Seq& s, const Seq& t,
                                                  const BipartiteGraph& X, const Seq& x,
                                                  const Seq& y, int w, int z);

/// log-estimate of sum over the (x, y) ensemble of exp(-sum_{vu in X}
/// s_v t_u / M_st), given the exact ensemble size b_xy.
LogValue eval_exp_neg_phi_sum_estimate(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                       const BigInt& b_xy);

ErrorBundle compute_error_bundle(const Instance& inst);

struct TheoremApplicability {
  std::string name;          // near_regular, martingale_minus, martingale_plus
  double error_quantity = 0.0;
  double side_quantity = 0.0;  // 12th-power side condition ratio; 0 when absent
  bool kappa_ok = false;
  bool applicable = false;
};

struct ApplicabilityReport {
  int kappa = 0;
  double threshold = 0.0;
  std::vector<TheoremApplicability> theorems;
};

/// Replaces the asymptotic hypotheses by explicit thresholds on the raw error
/// quantities; a hypothesis of the form "quantity -> 0" is reported
/// applicable when the quantity is below the threshold, and never when the
/// minimum hyperedge size is below 3.
ApplicabilityReport applicability_report(const Instance& inst, double threshold = 0.1);

/// Reduced degree sequences after deleting two right vertices with equal
/// degrees in both graphs of a pair, together with the incident edges: the
/// two right vertices drop to degree zero and the chosen left witnesses lose
/// 2 each.
struct RemovalReduced {
  Seq s_hat, t_hat, x_hat, y_hat;
};
RemovalReduced duplicate_removal_reduction(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                           int u1, int u2, const std::vector<int>& witnesses_s,
                                           const std::vector<int>& witnesses_x);

/// Exact upper bound for the ratio of the reduced to the original leading
/// term: 2 (t_u1!)^2 (y_u1!)^2 prod s_w^2 prod x_w^2 /
/// ((M_st)_{2 t_u1} (M_xy)_{2 y_u1}).
BigRat duplicate_removal_leading_bound(const Seq& s, const Seq& t, const Seq& x, const Seq& y,
                                       int u1, const std::vector<int>& witnesses_s,
                                       const std::vector<int>& witnesses_x);

/// log of an exact positive rational, accurate to machine precision even for
/// huge numerators and denominators.
double log_of(const BigInt& value);
double log_of(const BigRat& value);
double log_value_of(const ExactFormulaParts& parts);

}  // namespace dhenum
