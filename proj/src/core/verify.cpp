#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "entropy.hpp"

namespace frameineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_signal(const CVec& x) {
    if (!(x.norm() > 0.0)) fail(Errc::zero_signal, "zero signal");
}

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

VerificationReport make_report(std::string id, double lhs, double rhs, double tol, const CVec& x) {
    VerificationReport rep;
    rep.inequality_id = std::move(id);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = lhs - rhs;
    rep.min_slack = rep.slack;
    rep.tol = tol;
    rep.pass = rep.slack >= -tol;
    rep.witness = x;
    if (std::isinf(rhs) && rhs < 0.0) {
        rep.non_informative = true;
        rep.pass = true;
    }
    return rep;
}

/// Relative spread (max-min)/max of |values| over the given indices.
double modulus_flatness(const CVec& values, const std::vector<Index>& idx) {
    if (idx.size() < 2) return 0.0;
    double lo = kInf, hi = 0.0;
    for (Index k : idx) {
        const double m = std::abs(values[k]);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return hi > 0.0 ? (hi - lo) / hi : 0.0;
}

double circular_distance(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi)); }

}  // namespace

VerificationReport check_support(const Frame& U, const Frame& V, const CVec& x, double tol) {
    require_signal(x);
    const CoefficientSeq a = analyze(U, x);
    const CoefficientSeq b = analyze(V, x);
    const double lhs = static_cast<double>(a.l0()) * static_cast<double>(b.l0());
    return make_report("support", lhs, support_bound(U, V).product, tol, x);
}

VerificationReport check_entropic(const Frame& U, const Frame& V, const CVec& x, double r, double alpha, double tol) {
    require_signal(x);
    const EntropicRhs rhs = entropic_rhs(U, V, r, alpha);
    const CoefficientSeq a = analyze(U, x);
    const CoefficientSeq b = analyze(V, x);
    const double lhs = (2.0 - r) * renyi_entropy(a, alpha) + r * renyi_entropy(b, rhs.beta);
    return make_report("entropic[r=" + fmt_num(r) + ",alpha=" + fmt_num(alpha) + "]", lhs, rhs.rhs, tol, x);
}

VerificationReport check_shannon(const Frame& U, const Frame& V, const CVec& x, double tol) {
    require_signal(x);
    const double rhs = tight_shannon_bound(U, V);
    const double lhs = shannon_entropy(analyze(U, x)) + shannon_entropy(analyze(V, x));
    return make_report("shannon", lhs, rhs, tol, x);
}

VerificationReport check_lp(const Frame& U, const Frame& V, const CVec& x, double p, double r, double tol) {
    require_signal(x);
    const double c = lp_bound(U, V, p, r);
    const CoefficientSeq a = analyze(U, x);
    const CoefficientSeq b = analyze(V, x);
    const double lhs = a.lp_norm(p) * b.lp_norm(p);
    const double rhs = c * a.l2_norm() * b.l2_norm();
    return make_report("lp[r=" + fmt_num(r) + ",p=" + fmt_num(p) + "]", lhs, rhs, tol, x);
}

VerificationReport check_weak_support(const Frame& U, const Frame& V, const CVec& x, double r, double tol) {
    require_signal(x);
    const CoefficientSeq a = analyze(U, x);
    const CoefficientSeq b = analyze(V, x);
    const double lhs = static_cast<double>(a.l0()) * static_cast<double>(b.l0());
    return make_report("weak_support[r=" + fmt_num(r) + "]", lhs, weak_support_bound(U, V, r), tol, x);
}

EqualityDiagnostics equality_conditions(const Frame& U, const Frame& V, const CVec& x, double tol) {
    return equality_conditions(U, canonical_dual(U), V, canonical_dual(V), x, tol);
}

EqualityDiagnostics equality_conditions(const Frame& U, const Frame& Udual, const Frame& V, const Frame& Vdual,
                                        const CVec& x, double tol) {
    require_signal(x);
    if (!is_dual_pair(U, Udual) || !is_dual_pair(V, Vdual))
        fail(Errc::invalid_argument, "equality_conditions: supplied frames fail the dual reconstruction identity");
    const CoefficientSeq a = analyze(U, x);
    const CoefficientSeq b = analyze(V, x);
    const std::vector<Index> sa = a.support();
    const std::vector<Index> sb = b.support();

    EqualityDiagnostics d;
    d.modulus_flatness_a = modulus_flatness(a.values, sa);
    d.modulus_flatness_b = modulus_flatness(b.values, sb);

    const CMat g_uv = cross_gram(Udual, V);  // g_uv[k,l] = <ud_k, v_l>
    const CMat g_vu = cross_gram(Vdual, U);  // g_vu[l,k] = <vd_l, u_k>
    const double mag_floor_uv = kDefaultSupportTol * g_uv.cwiseAbs().maxCoeff();
    const double mag_floor_vu = kDefaultSupportTol * g_vu.cwiseAbs().maxCoeff();

    // (ii): per-row flatness of the restricted cross-Gram moduli.
    for (Index k : sa) {
        double lo = kInf, hi = 0.0;
        for (Index l : sb) {
            const double m = std::abs(g_uv(k, l));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        if (sb.size() > 1 && hi > 0.0) d.crossgram_flatness = std::max(d.crossgram_flatness, (hi - lo) / hi);
    }
    for (Index l : sb) {
        double lo = kInf, hi = 0.0;
        for (Index k : sa) {
            const double m = std::abs(g_vu(l, k));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        if (sa.size() > 1 && hi > 0.0) d.crossgram_flatness = std::max(d.crossgram_flatness, (hi - lo) / hi);
    }

    // (iii): phase alignment, tiny entries skipped (their argument is noise).
    for (Index k : sa) {
        for (Index l : sb) {
            const double target = std::arg(b.values[l]) - std::arg(a.values[k]);
            if (std::abs(g_uv(k, l)) > mag_floor_uv)
                d.phase_residual = std::max(d.phase_residual, circular_distance(std::arg(g_uv(k, l)), target));
            if (std::abs(g_vu(l, k)) > mag_floor_vu)
                d.phase_residual = std::max(d.phase_residual, circular_distance(std::arg(g_vu(l, k)), -target));
        }
    }

    d.all_satisfied = d.modulus_flatness_a <= tol && d.modulus_flatness_b <= tol && d.crossgram_flatness <= tol &&
                      d.phase_residual <= tol;
    return d;
}

double variational_residual(const Frame& U, const Frame& V, const CVec& x, double alpha, double r) {
    if (!is_tight(U) || !is_tight(V)) fail(Errc::not_tight, "variational_residual: both frames must be tight");
    if (!(r >= 1.0 && r < 2.0)) fail(Errc::domain, "variational_residual: r must lie in [1,2)");
    if (!(alpha > r / 2.0 && alpha < 1.0))
        fail(Errc::domain, "variational_residual: alpha must lie strictly inside (r/2, 1)");
    require_signal(x);
    const CVec xn = x / x.norm();
    const double beta = beta_conjugate(alpha, r);
    const double a_u = frame_bounds(U).lower;
    const CoefficientSeq a = analyze(U, xn);
    const CoefficientSeq b = analyze(V, xn);

    // w_k = |b_k|^{2(beta-1)} b_k / sum_j |b_j|^{2 beta}, evaluated in a
    // max-scaled form so large beta stays finite.
    const double mb = b.linf_norm();
    if (!(mb > 0.0)) fail(Errc::zero_signal, "variational_residual: zero analysis coefficients");
    double denom = 0.0;
    for (Index j = 0; j < b.values.size(); ++j) denom += std::pow(std::abs(b.values[j]) / mb, 2.0 * beta);
    CVec w(b.values.size());
    for (Index k = 0; k < b.values.size(); ++k) {
        const double t = std::abs(b.values[k]) / mb;
        w[k] = t > 0.0 ? std::pow(t, 2.0 * (beta - 1.0)) * b.values[k] / (mb * mb * denom) : Complex(0.0, 0.0);
    }

    // Paper-orientation Gram g_{kl} = <u_l, v_k>; with G[k,l] = <u_k, v_l>
    // the right-hand side reads RHS_l = (1/A_U) sum_k conj(G[l,k]) w_k.
    const CMat g = cross_gram(U, V);
    const CVec rhs_vec = g.conjugate() * w / a_u;

    double na = 0.0;
    for (Index j = 0; j < a.values.size(); ++j) na += std::pow(std::abs(a.values[j]), 2.0 * alpha);

    const std::vector<Index> sa = a.support();
    std::vector<bool> on_support(a.values.size(), false);
    for (Index k : sa) on_support[static_cast<std::size_t>(k)] = true;

    double residual = 0.0;
    for (Index l = 0; l < a.values.size(); ++l) {
        if (on_support[static_cast<std::size_t>(l)]) {
            const double m = std::abs(a.values[l]);
            const Complex lhs = std::pow(m, 2.0 * (alpha - 1.0)) * a.values[l] / na;
            residual = std::max(residual, std::abs(lhs - rhs_vec[l]));
        } else {
            residual = std::max(residual, std::abs(rhs_vec[l]));
        }
    }
    return residual;
}

namespace {

struct Instance {
    enum class Kind { support, entropic, shannon, lp, weak_support } kind;
    std::string id;
    double r = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double p = 2.0;
    double rhs = 0.0;
    double lp_const = 0.0;
    bool non_informative = false;
};

double instance_lhs(const Instance& ins, const CoefficientSeq& a, const CoefficientSeq& b) {
    switch (ins.kind) {
        case Instance::Kind::support:
        case Instance::Kind::weak_support:
            return static_cast<double>(a.l0()) * static_cast<double>(b.l0());
        case Instance::Kind::entropic:
            return (2.0 - ins.r) * renyi_entropy(a, ins.alpha) + ins.r * renyi_entropy(b, ins.beta);
        case Instance::Kind::shannon:
            return shannon_entropy(a) + shannon_entropy(b);
        case Instance::Kind::lp:
            return a.lp_norm(ins.p) * b.lp_norm(ins.p);
    }
    return 0.0;
}

double instance_rhs(const Instance& ins, const CoefficientSeq& a, const CoefficientSeq& b) {
    if (ins.kind == Instance::Kind::lp) return ins.lp_const * a.l2_norm() * b.l2_norm();
    return ins.rhs;
}

}  // namespace

std::vector<VerificationReport> random_trials(const Frame& U, const Frame& V, const TrialsConfig& config) {
    if (U.dim() != V.dim()) fail(Errc::dimension_mismatch, "random_trials: frames must share dim");
    if (config.trials < 0) fail(Errc::invalid_argument, "random_trials: trial count must be >= 0");

    std::vector<Instance> instances;
    if (config.include_support) {
        Instance ins{Instance::Kind::support, "support"};
        ins.rhs = support_bound(U, V).product;
        instances.push_back(std::move(ins));
    }
    if (config.include_weak_support) {
        for (double r : config.r_values) {
            if (!(r >= 1.0 && r < 2.0)) continue;
            Instance ins{Instance::Kind::weak_support, "weak_support[r=" + fmt_num(r) + "]"};
            ins.r = r;
            ins.rhs = weak_support_bound(U, V, r);
            instances.push_back(std::move(ins));
        }
    }
    if (config.include_entropic) {
        for (double r : config.r_values) {
            if (!(r >= 1.0 && r < 2.0)) continue;
            for (double alpha : config.alpha_values) {
                if (!(alpha >= r / 2.0 && alpha <= 1.0)) continue;
                const EntropicRhs rhs = entropic_rhs(U, V, r, alpha);
                Instance ins{Instance::Kind::entropic, "entropic[r=" + fmt_num(r) + ",alpha=" + fmt_num(alpha) + "]"};
                ins.r = r;
                ins.alpha = alpha;
                ins.beta = rhs.beta;
                ins.rhs = rhs.rhs;
                ins.non_informative = !rhs.informative;
                instances.push_back(std::move(ins));
            }
        }
    }
    if (config.include_shannon && is_tight(U) && is_tight(V)) {
        Instance ins{Instance::Kind::shannon, "shannon"};
        ins.rhs = tight_shannon_bound(U, V);
        instances.push_back(std::move(ins));
    }
    if (config.include_lp) {
        for (double r : config.r_values) {
            if (!(r >= 1.0 && r < 2.0)) continue;
            for (double p : config.p_values) {
                if (!(p >= r && p <= 2.0)) continue;
                Instance ins{Instance::Kind::lp, "lp[r=" + fmt_num(r) + ",p=" + fmt_num(p) + "]"};
                ins.r = r;
                ins.p = p;
                ins.lp_const = lp_bound(U, V, p, r);
                instances.push_back(std::move(ins));
            }
        }
    }

    std::vector<VerificationReport> reports(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        reports[i].inequality_id = instances[i].id;
        reports[i].tol = config.tol;
        reports[i].min_slack = kInf;
        reports[i].non_informative = instances[i].non_informative;
        reports[i].trial_count = 0;
    }

    std::mt19937_64 eng(config.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Index n = U.dim();

    const auto run_signal = [&](const CVec& raw) {
        const double norm = raw.norm();
        if (!(norm > 0.0)) return;
        const CVec x = raw / norm;
        const CoefficientSeq a = analyze(U, x);
        const CoefficientSeq b = analyze(V, x);
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const Instance& ins = instances[i];
            VerificationReport& rep = reports[i];
            ++rep.trial_count;
            if (ins.non_informative) continue;
            const double lhs = instance_lhs(ins, a, b);
            const double rhs = instance_rhs(ins, a, b);
            const double slack = lhs - rhs;
            if (slack < rep.min_slack) {
                rep.min_slack = slack;
                rep.lhs = lhs;
                rep.rhs = rhs;
                rep.slack = slack;
                rep.witness = x;
            }
        }
    };

    CVec x(n);
    for (long t = 0; t < config.trials; ++t) {
        for (Index i = 0; i < n; ++i) x[i] = Complex(gauss(eng), gauss(eng));
        run_signal(x);
    }
    for (Index k = 0; k < U.size(); ++k) run_signal(U.vector(k));
    for (Index l = 0; l < V.size(); ++l) run_signal(V.vector(l));
    for (const Frame* f : {&U, &V}) {
        std::uniform_int_distribution<Index> pick(0, f->size() - 1);
        for (int k = 1; k <= 3; ++k) {
            for (int rep = 0; rep < config.sparse_per_k; ++rep) {
                x.setZero();
                for (int j = 0; j < k; ++j) {
                    const Index idx = pick(eng);
                    x += Complex(gauss(eng), gauss(eng)) * f->vector(idx);
                }
                run_signal(x);
            }
        }
    }

    for (VerificationReport& rep : reports) {
        if (rep.non_informative) {
            rep.lhs = 0.0;
            rep.rhs = -kInf;
            rep.slack = kInf;
            rep.min_slack = kInf;
            rep.pass = true;
        } else {
            rep.pass = rep.min_slack >= -config.tol;
        }
    }
    return reports;
}

}  // namespace frameineq
