#include "mimetic/svd.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "mimetic/errors.hpp"

namespace mimetic {

namespace {

// Columns stored contiguously (n columns of length m).
struct ColMajor {
    std::size_t m = 0, n = 0;
    std::vector<double> data;

    ColMajor(std::size_t m_, std::size_t n_) : m(m_), n(n_), data(m_ * n_, 0.0) {}
    double* col(std::size_t j) { return data.data() + j * m; }
    const double* col(std::size_t j) const { return data.data() + j * m; }
};

double dot(const double* a, const double* b, std::size_t m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += a[i] * b[i];
    return acc;
}

void rotate(double* p, double* q, std::size_t m, double c, double s) {
    for (std::size_t i = 0; i < m; ++i) {
        const double vp = p[i];
        const double vq = q[i];
        p[i] = c * vp - s * vq;
        q[i] = s * vp + c * vq;
    }
}

// Core routine for m >= n: B = M, rotated until its columns are orthogonal.
// Returns (B, V) with M = B_final * V^T and V orthogonal.
void jacobi(ColMajor& b, ColMajor& v, const SvdOptions& opts) {
    const std::size_t m = b.m;
    const std::size_t n = b.n;
    for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;
    if (n < 2) return;

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* bp = b.col(p);
                double* bq = b.col(q);
                const double app = dot(bp, bp, m);
                const double aqq = dot(bq, bq, m);
                const double apq = dot(bp, bq, m);
                const double denom = std::sqrt(app) * std::sqrt(aqq);
                if (denom == 0.0 || std::abs(apq) <= opts.tol * denom) continue;

                const double tau = (aqq - app) / (2.0 * apq);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate(bp, bq, m, c, s);
                rotate(v.col(p), v.col(q), n, c, s);
                rotated = true;
            }
        }
        if (!rotated) return;
    }
    throw NonConvergence("svd: one-sided Jacobi did not converge within " +
                         std::to_string(opts.max_sweeps) + " sweeps");
}

// Fill zero-norm columns of U with canonical basis vectors orthogonalized
// against the existing columns, so U stays orthonormal for rank-deficient
// input (including the all-zero matrix).
void complete_null_columns(ColMajor& u, const std::vector<bool>& is_null) {
    const std::size_t m = u.m;
    const std::size_t n = u.n;
    std::size_t candidate = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_null[j]) continue;
        for (; candidate < m; ++candidate) {
            std::vector<double> w(m, 0.0);
            w[candidate] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t l = 0; l < n; ++l) {
                    if (is_null[l] && l >= j) continue;
                    const double proj = dot(w.data(), u.col(l), m);
                    const double* ul = u.col(l);
                    for (std::size_t i = 0; i < m; ++i) w[i] -= proj * ul[i];
                }
            }
            const double norm = std::sqrt(dot(w.data(), w.data(), m));
            if (norm > 0.5) {
                for (std::size_t i = 0; i < m; ++i) u.col(j)[i] = w[i] / norm;
                ++candidate;
                break;
            }
        }
    }
}

SvdResult svd_tall(const Matrix& mat, const SvdOptions& opts) {
    const std::size_t m = mat.rows();
    const std::size_t n = mat.cols();

    ColMajor b(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) b.col(j)[i] = mat(i, j);
    ColMajor vacc(n, n);
    jacobi(b, vacc, opts);

    std::vector<double> norms(n);
    double smax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        norms[j] = std::sqrt(dot(b.col(j), b.col(j), m));
        smax = std::max(smax, norms[j]);
    }

    // Stable order for ties comes from the cyclic sweep's column order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t c) { return norms[a] > norms[c]; });

    const double null_thresh = smax * 1e-14;
    ColMajor ucm(m, n);
    std::vector<bool> is_null(n, false);
    SvdResult res;
    res.s.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        res.s[j] = norms[src];
        if (norms[src] > null_thresh && norms[src] > 0.0) {
            const double inv = 1.0 / norms[src];
            const double* bc = b.col(src);
            for (std::size_t i = 0; i < m; ++i) ucm.col(j)[i] = bc[i] * inv;
        } else {
            res.s[j] = norms[src];
            is_null[j] = true;
        }
    }
    complete_null_columns(ucm, is_null);

    res.u = Matrix(m, n);
    res.v = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        // Largest-magnitude entry of the U column decides the sign; ties go
        // to the lowest row index.
        const double* uc = ucm.col(j);
        std::size_t arg = 0;
        double best = std::abs(uc[0]);
        for (std::size_t i = 1; i < m; ++i) {
            if (std::abs(uc[i]) > best) {
                best = std::abs(uc[i]);
                arg = i;
            }
        }
        const double flip = (uc[arg] < 0.0) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < m; ++i) res.u(i, j) = flip * uc[i];
        const double* vc = vacc.col(order[j]);
        for (std::size_t i = 0; i < n; ++i) res.v(i, j) = flip * vc[i];
    }
    return res;
}

} // namespace

Matrix SvdResult::reconstruct(std::size_t k) const {
    const std::size_t m = u.rows();
    k = std::min(k, s.size());
    Matrix us = u.col_slice(0, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) us(i, j) *= s[j];
    return matmul_nt(us, v.col_slice(0, k));
}

SvdResult svd(const Matrix& mat, const SvdOptions& opts) {
    if (mat.rows() < 1 || mat.cols() < 1) throw ShapeError("svd: empty matrix");
    if (!mat.all_finite()) throw ShapeError("svd: non-finite input");
    if (mat.rows() >= mat.cols()) return svd_tall(mat, opts);
    // Wide input: decompose the transpose and swap the factors. The sign
    // convention is then re-anchored on the returned U.
    SvdResult t = svd_tall(mat.transposed(), opts);
    SvdResult res;
    res.s = std::move(t.s);
    res.u = std::move(t.v);
    res.v = std::move(t.u);
    for (std::size_t j = 0; j < res.s.size(); ++j) {
        std::size_t arg = 0;
        double best = std::abs(res.u(0, j));
        for (std::size_t i = 1; i < res.u.rows(); ++i) {
            if (std::abs(res.u(i, j)) > best) {
                best = std::abs(res.u(i, j));
                arg = i;
            }
        }
        if (res.u(arg, j) < 0.0) {
            for (std::size_t i = 0; i < res.u.rows(); ++i) res.u(i, j) = -res.u(i, j);
            for (std::size_t i = 0; i < res.v.rows(); ++i) res.v(i, j) = -res.v(i, j);
        }
    }
    return res;
}

} // namespace mimetic
