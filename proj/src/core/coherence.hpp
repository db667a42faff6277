#pragma once

#include <vector>

#include "frame.hpp"

namespace frameineq {

/// Cross-Gram matrix G[k, l] = <u_k, v_l> (rows indexed by the first frame).
CMat cross_gram(const Frame& U, const Frame& V);

/// Mutual coherence of order r in [1, 2]:
///   r > 1:  max_l ( sum_k |<u_k,v_l>|^{r'} )^{r/r'},  1/r + 1/r' = 1;
///   r = 1:  max_{k,l} |<u_k,v_l>| (the r' = inf limit).
double coherence_r(const Frame& U, const Frame& V, double r);

/// Same, but on a precomputed entrywise-modulus cross-Gram (grid evaluations
/// reuse the Gram).
double coherence_r_abs(const RMat& abs_gram, double r);

struct MuStarResult {
    double value = 0.0;
    double r_opt = 1.0;
};

/// mu* = inf over r in [1,2] of sqrt(mu_r(Ud,V) * mu_r(Vd,U)): 201-point grid
/// scan refined by golden section to |dr| < 1e-6, ties broken toward smaller
/// r. Canonical duals are computed internally.
MuStarResult mu_star(const Frame& U, const Frame& V);

/// mu* with caller-supplied dual frames (validated by the mixed
/// reconstruction identity). Argument order: dual of U, V, dual of V, U.
MuStarResult mu_star_with_duals(const Frame& Udual, const Frame& V, const Frame& Vdual, const Frame& U);

struct CoherenceCurve {
    std::vector<double> r_grid;
    std::vector<double> mu_uv;    ///< mu_r(Ud, V)
    std::vector<double> mu_vu;    ///< mu_r(Vd, U)
    std::vector<double> geomean;  ///< sqrt(mu_uv * mu_vu)
    double mu_star_value = 0.0;
    double r_opt = 1.0;
};

/// Directed r-coherences (with canonical duals) over a uniform r grid.
CoherenceCurve coherence_curve(const Frame& U, const Frame& V, double r_min = 1.0, double r_max = 2.0,
                               int count = 201);

/// Per-column maxima of the cross-Gram moduli and their multiplicities.
/// predicted_improvement applies the strict criterion max_l n_l s_l < 1,
/// under which some r > 1 satisfies mu_r < mu_1.
struct PropMurReport {
    std::vector<double> s;  ///< s_l = max_k |<u_k, v_l>|
    std::vector<Index> n;   ///< multiplicity of the per-column maximum
    double max_nl_sl = 0.0;
    bool predicted_improvement = false;
};

PropMurReport prop_mur_condition(const Frame& U, const Frame& V, double tie_tol = 1e-9);

/// One-sided derivative of r -> mu_r(U, V) at r = 2 for pairs whose columns
/// all carry unit l2 mass (ONB pairs):
///   slope = (1/2) * min_l ( -sum_k |<u_k,v_l>|^2 ln |<u_k,v_l>|^2 ),
/// with 0*ln 0 := 0. The minimizing column is the one that dominates mu_r as
/// r -> 2; for a MUB the value is ln(N)/2 = ln sqrt(N).
double slope_at_two(const Frame& U, const Frame& V);

}  // namespace frameineq
