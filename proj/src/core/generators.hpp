#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frame.hpp"

namespace frameineq {

/// Standard (Kronecker) basis of C^N.
Frame kronecker_basis(Index n);

/// Fourier basis, (v_l)_n = exp(2*pi*i*l*n/N)/sqrt(N). Unbiased against the
/// Kronecker basis: every cross inner product has modulus 1/sqrt(N).
Frame fourier_basis(Index n);

/// The Kronecker/Fourier MUB pair.
std::pair<Frame, Frame> mub_pair(Index n);

/// Two orthonormal bases obtained by diagonalizing independent random
/// Gaussian symmetric matrices. Deterministic for a fixed seed; each
/// eigenvector is sign-fixed so its largest-magnitude entry is positive.
std::pair<Frame, Frame> random_onb_pair(Index n, std::uint64_t seed);

/// Blockwise mutually unbiased bases: per block k a Kronecker (resp. Fourier)
/// basis of the k-th coordinate subspace; blocks direct-sum to C^N with
/// N = sum block_dims. r-coherence of the pair is max_k N_k^{r/2-1}.
std::pair<Frame, Frame> bmub(const std::vector<Index>& block_dims);

/// Real orthonormal MDCT basis of R^N: lapped modified-DCT with sine window
/// w_n = sin(pi*(n+1/2)/window_len), hop window_len/2, periodic wrap.
/// Requires window_len even and N = L * window_len/2 with L >= 2.
Frame mdct_basis(Index n, Index window_len);

/// Tight-frame catalog: "mercedes" (R^2, M=3), "union2onb" (Kronecker and
/// Fourier bases stacked, A=B=2), "harmonic" (rows of the M-point DFT
/// restricted to the first N coordinates, unit-norm scaling, A=B=M/N; pass
/// rows=M > N). Unknown names are rejected.
Frame tight_frame(const std::string& name, Index n, Index rows = 0);

/// Generic redundant frame: rows iid complex standard Gaussian, normalized to
/// unit norm. Not tight for rows > dim; deterministic for a fixed seed.
Frame random_frame(Index n, Index rows, std::uint64_t seed);

}  // namespace frameineq
