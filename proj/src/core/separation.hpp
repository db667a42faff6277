#pragma once

#include <vector>

#include "frame.hpp"

namespace frameineq {

/// One additive split u = x + y with analysis-support cost
/// ||Ux||_0 + ||Vy||_0.
struct SplitCandidate {
    CVec x;
    CVec y;
    long cost = 0;
    std::vector<Index> supp_a;  ///< supp(Ux)
    std::vector<Index> supp_b;  ///< supp(Vy)
};

/// Coherence certificate for a given split: certified iff
/// ||Ux||_0 + ||Vy||_0 < 1/mu*(U, V) (strict), in which case the split is
/// the unique minimizer of the separation program.
struct CertifyResult {
    long cost = 0;
    double threshold = 0.0;  ///< 1/mu*
    bool certified = false;
};

CertifyResult certify_split(const Frame& U, const Frame& V, const CVec& x, const CVec& y);

/// Chain check for two distinct splits of the same u = x + y = x2 + y2:
///   cost_sum = ||Ux||_0+||Vy||_0+||Ux2||_0+||Vy2||_0
///     >= intermediate = ||U(x-x2)||_0 + ||V(y2-y)||_0
///     >= bound = 2/mu*.
struct TwoSplitReport {
    double cost_sum = 0.0;
    double intermediate = 0.0;
    double bound = 0.0;
    double slack_outer = 0.0;  ///< cost_sum - intermediate
    double slack_inner = 0.0;  ///< intermediate - bound
    bool pass = false;
};

TwoSplitReport two_split_bound_check(const Frame& U, const Frame& V, const CVec& x, const CVec& y, const CVec& x2,
                                     const CVec& y2, double tol = kDefaultSlackTol);

/// Exact combinatorial separation at desk scale: enumerates support pairs
/// (S_a, S_b) with |S_a|, |S_b| <= k_max in increasing total cost
/// (lexicographic within a cost level) and solves the linear feasibility
/// problem
///   (Ux)_k = 0 for k not in S_a,   (Vx)_l = (Vu)_l for l not in S_b
/// by least squares; a support pair is feasible iff the residual is below
/// tol * ||u||. Returns every minimal-cost feasible candidate.
struct SeparationResult {
    std::vector<SplitCandidate> minimal;
    long min_cost = 0;
    bool feasible = false;  ///< false: nothing found up to k_max; `minimal` holds the trivial split
    std::vector<SplitCandidate> all_feasible;  ///< populated when collect_all is set
};

SeparationResult exhaustive_separate(const Frame& U, const Frame& V, const CVec& u, int k_max,
                                     double tol = 1e-8, bool collect_all = false);

}  // namespace frameineq
