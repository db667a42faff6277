#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "frame.hpp"

namespace frameineq {

/// Outcome of one inequality check (or of a trial batch, in which case lhs,
/// rhs and slack describe the minimal-slack witness).
struct VerificationReport {
    std::string inequality_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double min_slack = 0.0;
    double tol = kDefaultSlackTol;
    bool pass = false;
    bool non_informative = false;  ///< rhs was -inf (trivially satisfied)
    long trial_count = 1;
    CVec witness;
};

/// ||Ux||_0 * ||Vx||_0 against the refined support bound 1/mu*^2.
VerificationReport check_support(const Frame& U, const Frame& V, const CVec& x, double tol = kDefaultSlackTol);

/// (2-r) R_alpha(Ux) + r R_beta(Vx) against the entropic right-hand side.
VerificationReport check_entropic(const Frame& U, const Frame& V, const CVec& x, double r, double alpha,
                                  double tol = kDefaultSlackTol);

/// S(Ux) + S(Vx) against -2 ln mu* (tight frames only).
VerificationReport check_shannon(const Frame& U, const Frame& V, const CVec& x, double tol = kDefaultSlackTol);

/// ||Ux||_p ||Vx||_p against lp_bound(U,V,p,r) * ||Ux||_2 ||Vx||_2.
VerificationReport check_lp(const Frame& U, const Frame& V, const CVec& x, double p, double r,
                            double tol = kDefaultSlackTol);

/// ||Ux||_0 * ||Vx||_0 against the weakened sigma^{-r} support bound.
VerificationReport check_weak_support(const Frame& U, const Frame& V, const CVec& x, double r,
                                      double tol = kDefaultSlackTol);

/// Residuals of the three necessary sharpness conditions of the refined
/// support inequality, evaluated on the numerical supports of a = Ux, b = Vx:
///   (i)   |a| and |b| constant on their supports;
///   (ii)  |<ud_k, v_l>| flat over supp(b) for each k in supp(a), and
///         |<vd_l, u_k>| flat over supp(a) for each l in supp(b);
///   (iii) arg<ud_k, v_l> = arg b_l - arg a_k = -arg<vd_l, u_k> (circular
///         distance, entries below the support threshold excluded).
struct EqualityDiagnostics {
    double modulus_flatness_a = 0.0;
    double modulus_flatness_b = 0.0;
    double crossgram_flatness = 0.0;
    double phase_residual = 0.0;
    bool all_satisfied = false;
};

/// Canonical duals computed internally.
EqualityDiagnostics equality_conditions(const Frame& U, const Frame& V, const CVec& x,
                                        double tol = kDefaultEqualityTol);

/// Caller-supplied duals (validated by the reconstruction identity).
EqualityDiagnostics equality_conditions(const Frame& U, const Frame& Udual, const Frame& V, const Frame& Vdual,
                                        const CVec& x, double tol = kDefaultEqualityTol);

/// l-inf residual of the stationarity equation of the entropy functional for
/// tight frames,
///   |a_l|^{2(alpha-1)} a_l / ||a||_{2a}^{2a} =
///       (1/A_U) sum_k conj(g_{kl}) |b_k|^{2(beta-1)} b_k / ||b||_{2b}^{2b},
/// taken over l in supp(a); off-support components contribute |RHS_l|.
/// Requires both frames tight and alpha strictly inside (r/2, 1) so that
/// beta stays finite.
double variational_residual(const Frame& U, const Frame& V, const CVec& x, double alpha, double r);

/// Randomized verification batch configuration. Signals: `trials` complex
/// standard Gaussian vectors (normalized), every frame element of U and V,
/// and `sparse_per_k` random k-sparse combinations of frame elements for
/// k in {1,2,3} from each frame. Deterministic for a fixed seed.
struct TrialsConfig {
    long trials = 1000;
    std::uint64_t seed = 0;
    double tol = kDefaultSlackTol;
    std::vector<double> r_values = {1.0, 1.5};
    std::vector<double> alpha_values = {0.5, 0.6, 0.75, 0.9, 1.0};
    std::vector<double> p_values = {1.0, 1.5, 2.0};
    int sparse_per_k = 16;
    bool include_support = true;
    bool include_entropic = true;
    bool include_shannon = true;  ///< skipped unless both frames are tight
    bool include_lp = true;
    bool include_weak_support = true;
};

/// One report per inequality instance; each report carries the minimal-slack
/// witness over the whole signal batch (index-ordered tie-breaking).
std::vector<VerificationReport> random_trials(const Frame& U, const Frame& V, const TrialsConfig& config);

}  // namespace frameineq
