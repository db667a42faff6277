#include "generators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

namespace frameineq {

namespace {

constexpr double kPi = std::numbers::pi;

RMat gaussian_symmetric(Index n, std::mt19937_64& eng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    RMat g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = gauss(eng);
    return (g + g.transpose()) / 2.0;
}

/// Rows = eigenvectors of a random symmetric matrix, sign-fixed for determinism.
RMat random_onb_matrix(Index n, std::mt19937_64& eng) {
    Eigen::SelfAdjointEigenSolver<RMat> es(gaussian_symmetric(n, eng));
    RMat rows = es.eigenvectors().transpose();
    for (Index i = 0; i < n; ++i) {
        Index jmax = 0;
        rows.row(i).cwiseAbs().maxCoeff(&jmax);
        if (rows(i, jmax) < 0.0) rows.row(i) = -rows.row(i);
    }
    return rows;
}

}  // namespace

Frame kronecker_basis(Index n) {
    if (n < 1) fail(Errc::invalid_argument, "kronecker_basis: N >= 1 required");
    return Frame(CMat::Identity(n, n), "kronecker" + std::to_string(n));
}

Frame fourier_basis(Index n) {
    if (n < 1) fail(Errc::invalid_argument, "fourier_basis: N >= 1 required");
    CMat f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Index l = 0; l < n; ++l) {
        for (Index j = 0; j < n; ++j) {
            const double phase = 2.0 * kPi * static_cast<double>((l * j) % n) / static_cast<double>(n);
            f(l, j) = scale * Complex(std::cos(phase), std::sin(phase));
        }
    }
    return Frame(std::move(f), "fourier" + std::to_string(n));
}

std::pair<Frame, Frame> mub_pair(Index n) { return {kronecker_basis(n), fourier_basis(n)}; }

std::pair<Frame, Frame> random_onb_pair(Index n, std::uint64_t seed) {
    if (n < 2) fail(Errc::invalid_argument, "random_onb_pair: N >= 2 required");
    std::mt19937_64 eng(seed);
    const RMat u = random_onb_matrix(n, eng);
    const RMat v = random_onb_matrix(n, eng);
    return {Frame(u.cast<Complex>(), "randonbU." + std::to_string(seed)),
            Frame(v.cast<Complex>(), "randonbV." + std::to_string(seed))};
}

std::pair<Frame, Frame> bmub(const std::vector<Index>& block_dims) {
    if (block_dims.empty()) fail(Errc::invalid_argument, "bmub: empty block list");
    Index n = 0;
    for (Index d : block_dims) {
        if (d < 1) fail(Errc::invalid_argument, "bmub: block dims must be >= 1");
        n += d;
    }
    CMat u = CMat::Zero(n, n);
    CMat v = CMat::Zero(n, n);
    Index off = 0;
    for (Index d : block_dims) {
        u.block(off, off, d, d) = CMat::Identity(d, d);
        v.block(off, off, d, d) = fourier_basis(d).vectors();
        off += d;
    }
    return {Frame(std::move(u), "bmubU"), Frame(std::move(v), "bmubV")};
}

Frame mdct_basis(Index n, Index window_len) {
    if (window_len < 2 || window_len % 2 != 0) fail(Errc::invalid_argument, "mdct_basis: window_len must be even and >= 2");
    const Index hop = window_len / 2;
    if (n % hop != 0 || n / hop < 2) fail(Errc::invalid_argument, "mdct_basis: N must be L * window_len/2 with L >= 2");
    const Index blocks = n / hop;
    RVec window(window_len);
    for (Index i = 0; i < window_len; ++i) window[i] = std::sin(kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(window_len));

    const double scale = std::sqrt(2.0 / static_cast<double>(hop));
    RMat basis = RMat::Zero(n, n);
    Index row = 0;
    for (Index m = 0; m < blocks; ++m) {
        for (Index q = 0; q < hop; ++q, ++row) {
            for (Index i = 0; i < window_len; ++i) {
                const double arg = kPi / static_cast<double>(hop) *
                                   (static_cast<double>(i) + 0.5 + static_cast<double>(hop) / 2.0) *
                                   (static_cast<double>(q) + 0.5);
                basis(row, (m * hop + i) % n) += scale * window[i] * std::cos(arg);
            }
        }
    }
    return Frame(basis.cast<Complex>(), "mdct" + std::to_string(n) + "w" + std::to_string(window_len));
}

Frame tight_frame(const std::string& name, Index n, Index rows) {
    if (name == "mercedes") {
        if (n != 0 && n != 2) fail(Errc::invalid_argument, "mercedes frame lives in R^2");
        RMat m(3, 2);
        m << 0.0, 1.0,
             std::sqrt(3.0) / 2.0, -0.5,
             -std::sqrt(3.0) / 2.0, -0.5;
        return Frame(m.cast<Complex>(), "mercedes");
    }
    if (name == "union2onb") {
        if (n < 1) fail(Errc::invalid_argument, "union2onb: N >= 1 required");
        CMat m(2 * n, n);
        m.topRows(n) = kronecker_basis(n).vectors();
        m.bottomRows(n) = fourier_basis(n).vectors();
        return Frame(std::move(m), "union2onb" + std::to_string(n));
    }
    if (name == "harmonic") {
        if (n < 1) fail(Errc::invalid_argument, "harmonic: N >= 1 required");
        const Index m = rows > 0 ? rows : 2 * n;
        if (m <= n) fail(Errc::invalid_argument, "harmonic: rows M > N required");
        CMat f(m, n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (Index k = 0; k < m; ++k) {
            for (Index j = 0; j < n; ++j) {
                const double phase = 2.0 * kPi * static_cast<double>((k * j) % m) / static_cast<double>(m);
                f(k, j) = scale * Complex(std::cos(phase), std::sin(phase));
            }
        }
        return Frame(std::move(f), "harmonic" + std::to_string(m) + "x" + std::to_string(n));
    }
    fail(Errc::unknown_name, "unknown tight frame \"" + name + "\"");
}

Frame random_frame(Index n, Index rows, std::uint64_t seed) {
    if (n < 1 || rows < n) fail(Errc::invalid_argument, "random_frame: rows >= dim >= 1 required");
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat f(rows, n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Index k = 0; k < rows; ++k) {
        for (Index j = 0; j < n; ++j) f(k, j) = Complex(gauss(eng) * inv_sqrt2, gauss(eng) * inv_sqrt2);
        f.row(k) /= f.row(k).norm();
    }
    return Frame(std::move(f), "randframe" + std::to_string(rows) + "x" + std::to_string(n) + "." + std::to_string(seed));
}

}  // namespace frameineq
