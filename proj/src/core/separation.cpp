#include "separation.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "coherence.hpp"

namespace frameineq {

namespace {

long split_cost(const Frame& U, const Frame& V, const CVec& x, const CVec& y) {
    return analyze(U, x).l0() + analyze(V, y).l0();
}

/// Next k-subset of {0..m-1} in lexicographic order; false when exhausted.
bool next_subset(std::vector<Index>& idx, Index m) {
    const auto k = static_cast<Index>(idx.size());
    if (k == 0) return false;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::vector<Index> first_subset(Index k) {
    std::vector<Index> idx(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    return idx;
}

}  // namespace

CertifyResult certify_split(const Frame& U, const Frame& V, const CVec& x, const CVec& y) {
    if (x.size() != U.dim() || y.size() != V.dim() || U.dim() != V.dim())
        fail(Errc::dimension_mismatch, "certify_split: dimensions disagree");
    CertifyResult res;
    res.cost = split_cost(U, V, x, y);
    res.threshold = 1.0 / mu_star(U, V).value;
    res.certified = static_cast<double>(res.cost) < res.threshold;
    return res;
}

TwoSplitReport two_split_bound_check(const Frame& U, const Frame& V, const CVec& x, const CVec& y, const CVec& x2,
                                     const CVec& y2, double tol) {
    if (x.size() != U.dim() || x2.size() != U.dim() || y.size() != V.dim() || y2.size() != V.dim() ||
        U.dim() != V.dim())
        fail(Errc::dimension_mismatch, "two_split_bound_check: dimensions disagree");
    const CVec u1 = x + y;
    const CVec u2 = x2 + y2;
    const double scale = std::max(u1.norm(), u2.norm());
    if ((u1 - u2).norm() > 1e-9 * std::max(scale, 1.0))
        fail(Errc::invalid_argument, "two_split_bound_check: the two splits decompose different signals");
    const double diff = std::max((x - x2).norm(), (y - y2).norm());
    if (diff <= 1e-12 * std::max(scale, 1.0))
        fail(Errc::invalid_argument, "two_split_bound_check: splits are identical");

    TwoSplitReport rep;
    rep.cost_sum = static_cast<double>(split_cost(U, V, x, y) + split_cost(U, V, x2, y2));
    rep.intermediate = static_cast<double>(analyze(U, CVec(x - x2)).l0() + analyze(V, CVec(y2 - y)).l0());
    rep.bound = 2.0 / mu_star(U, V).value;
    rep.slack_outer = rep.cost_sum - rep.intermediate;
    rep.slack_inner = rep.intermediate - rep.bound;
    rep.pass = rep.slack_outer >= -tol && rep.slack_inner >= -tol;
    return rep;
}

SeparationResult exhaustive_separate(const Frame& U, const Frame& V, const CVec& u, int k_max, double tol,
                                     bool collect_all) {
    if (U.dim() != V.dim() || u.size() != U.dim()) fail(Errc::dimension_mismatch, "exhaustive_separate: dimensions disagree");
    if (!(u.norm() > 0.0)) fail(Errc::zero_signal, "exhaustive_separate: zero signal");
    if (k_max < 0) fail(Errc::invalid_argument, "exhaustive_separate: k_max must be >= 0");

    const Index mu = U.size();
    const Index mv = V.size();
    const Index n = U.dim();
    const CMat analysis_u = U.vectors().conjugate();
    const CMat analysis_v = V.vectors().conjugate();
    const CVec vu = analysis_v * u;
    const double feas_scale = tol * u.norm();

    SeparationResult result;
    long found_cost = -1;

    const auto try_pair = [&](const std::vector<Index>& sa, const std::vector<Index>& sb) {
        std::vector<Index> rows_a, rows_b;
        rows_a.reserve(static_cast<std::size_t>(mu));
        rows_b.reserve(static_cast<std::size_t>(mv));
        {
            std::vector<bool> in_a(static_cast<std::size_t>(mu), false), in_b(static_cast<std::size_t>(mv), false);
            for (Index k : sa) in_a[static_cast<std::size_t>(k)] = true;
            for (Index l : sb) in_b[static_cast<std::size_t>(l)] = true;
            for (Index k = 0; k < mu; ++k)
                if (!in_a[static_cast<std::size_t>(k)]) rows_a.push_back(k);
            for (Index l = 0; l < mv; ++l)
                if (!in_b[static_cast<std::size_t>(l)]) rows_b.push_back(l);
        }
        CVec xsol;
        if (rows_a.empty() && rows_b.empty()) {
            xsol = CVec::Zero(n);  // unconstrained: min-norm solution
        } else {
            CMat lhs(static_cast<Index>(rows_a.size() + rows_b.size()), n);
            CVec rhs(lhs.rows());
            for (std::size_t i = 0; i < rows_a.size(); ++i) {
                lhs.row(static_cast<Index>(i)) = analysis_u.row(rows_a[i]);
                rhs[static_cast<Index>(i)] = Complex(0.0, 0.0);
            }
            for (std::size_t i = 0; i < rows_b.size(); ++i) {
                lhs.row(static_cast<Index>(rows_a.size() + i)) = analysis_v.row(rows_b[i]);
                rhs[static_cast<Index>(rows_a.size() + i)] = vu[rows_b[i]];
            }
            Eigen::JacobiSVD<CMat> svd(lhs, Eigen::ComputeThinU | Eigen::ComputeThinV);
            svd.setThreshold(1e-10);  // singular values below 1e-10 * sigma_max are rank-deficient
            xsol = svd.solve(rhs);
            if ((lhs * xsol - rhs).norm() >= feas_scale) return;
        }

        SplitCandidate cand;
        cand.x = xsol;
        cand.y = u - xsol;
        const CoefficientSeq ca = analyze(U, cand.x);
        const CoefficientSeq cb = analyze(V, cand.y);
        cand.supp_a = ca.support();
        cand.supp_b = cb.support();
        cand.cost = static_cast<long>(cand.supp_a.size() + cand.supp_b.size());
        if (collect_all) result.all_feasible.push_back(cand);
        if (found_cost < 0) found_cost = static_cast<long>(sa.size() + sb.size());
        if (static_cast<long>(sa.size() + sb.size()) == found_cost) result.minimal.push_back(std::move(cand));
    };

    const Index cap_a = std::min<Index>(k_max, mu);
    const Index cap_b = std::min<Index>(k_max, mv);
    for (long cost = 0; cost <= cap_a + cap_b; ++cost) {
        if (found_cost >= 0 && !collect_all) break;
        for (Index ka = 0; ka <= std::min<Index>(cap_a, cost); ++ka) {
            const Index kb = cost - ka;
            if (kb > cap_b) continue;
            std::vector<Index> sa = first_subset(ka);
            do {
                std::vector<Index> sb = first_subset(kb);
                do {
                    try_pair(sa, sb);
                } while (next_subset(sb, mv));
            } while (next_subset(sa, mu));
        }
    }

    if (found_cost >= 0) {
        result.feasible = true;
        result.min_cost = result.minimal.front().cost;
    } else {
        // Nothing feasible within k_max: report the trivial split as an upper bound.
        SplitCandidate trivial;
        trivial.x = u;
        trivial.y = CVec::Zero(n);
        const CoefficientSeq ca = analyze(U, trivial.x);
        trivial.supp_a = ca.support();
        trivial.cost = static_cast<long>(trivial.supp_a.size());
        result.minimal.push_back(std::move(trivial));
        result.min_cost = result.minimal.front().cost;
        result.feasible = false;
    }
    return result;
}

}  // namespace frameineq
