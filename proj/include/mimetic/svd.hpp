#pragma once

#include <vector>

#include "mimetic/matrix.hpp"

namespace mimetic {

/// Full SVD M = U * diag(S) * V^T with r = min(rows, cols).
///
/// Sign convention: in each column of U the entry of largest magnitude is
/// non-negative (ties broken by lowest row index); V is flipped to match.
/// Singular values are sorted descending; equal values keep the stable order
/// inherited from the cyclic sweep, which makes degenerate inputs like
/// beta*I decompose into identity factors.
struct SvdResult {
    Matrix u;                // m x r, orthonormal columns
    std::vector<double> s;   // r singular values, descending, >= 0
    Matrix v;                // n x r, orthonormal columns

    /// U[:, :k] * diag(S[:k]) * V[:, :k]^T.
    Matrix reconstruct(std::size_t k) const;
    Matrix reconstruct() const { return reconstruct(s.size()); }
};

struct SvdOptions {
    int max_sweeps = 60;
    double tol = 1e-12;  // off-diagonal Gram ratio threshold
};

/// One-sided Jacobi with a fixed cyclic sweep order; deterministic output
/// for deterministic input. Throws NonConvergence past the sweep cap.
SvdResult svd(const Matrix& m, const SvdOptions& opts = {});

} // namespace mimetic
