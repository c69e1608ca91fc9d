#include "mimetic/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#ifdef MIMETIC_HAVE_CBLAS
#include <cblas.h>
#include <dlfcn.h>
extern "C" void openblas_set_num_threads(int);
#endif

namespace mimetic {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

#ifdef MIMETIC_HAVE_CBLAS
// OpenBLAS picks its kernel from CPUID model info, which virtualized
// environments often mask; that can leave an AVX-512 machine on a
// pre-AVX kernel. If the dynamic-arch reinit hooks are exported,
// re-dispatch by the ISA the CPU actually reports. A user-set
// OPENBLAS_CORETYPE always wins.
void maybe_redispatch_core() {
#if defined(__x86_64__) && defined(__GNUC__)
    if (std::getenv("OPENBLAS_CORETYPE") != nullptr) return;
    const char* want = nullptr;
    if (__builtin_cpu_supports("avx512f")) {
        want = "SKYLAKEX";
    } else if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        want = "HASWELL";
    }
    if (want == nullptr) return;
    using VoidFn = void (*)();
    auto* dyn_quit = reinterpret_cast<VoidFn>(dlsym(RTLD_DEFAULT, "gotoblas_dynamic_quit"));
    auto* dyn_init = reinterpret_cast<VoidFn>(dlsym(RTLD_DEFAULT, "gotoblas_dynamic_init"));
    if (dyn_quit == nullptr || dyn_init == nullptr) return;
    ::setenv("OPENBLAS_CORETYPE", want, 0);
    dyn_quit();
    dyn_init();
#endif
}

// BLAS threading is pinned to 1; parallelism happens across independent
// runs/seeds so results do not depend on worker count.
void ensure_single_thread_blas() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        maybe_redispatch_core();
        openblas_set_num_threads(1);
    });
}
#endif

void gemm(bool ta, bool tb, const Matrix& a, const Matrix& b, Matrix& c, double beta) {
    const std::size_t m = ta ? a.cols() : a.rows();
    const std::size_t k = ta ? a.rows() : a.cols();
    const std::size_t kb = tb ? b.cols() : b.rows();
    const std::size_t n = tb ? b.rows() : b.cols();
    if (k != kb) {
        throw ShapeError("matmul: inner dimension mismatch " + std::to_string(k) + " vs " +
                         std::to_string(kb));
    }
    if (c.rows() != m || c.cols() != n) {
        throw ShapeError("matmul: output shape mismatch");
    }
    if (m == 0 || n == 0) return;
    if (k == 0) {
        if (beta == 0.0) std::memset(c.data(), 0, c.size() * sizeof(double));
        return;
    }
#ifdef MIMETIC_HAVE_CBLAS
    ensure_single_thread_blas();
    cblas_dgemm(CblasRowMajor, ta ? CblasTrans : CblasNoTrans, tb ? CblasTrans : CblasNoTrans,
                static_cast<int>(m), static_cast<int>(n), static_cast<int>(k), 1.0, a.data(),
                static_cast<int>(a.cols()), b.data(), static_cast<int>(b.cols()), beta, c.data(),
                static_cast<int>(c.cols()));
#else
    if (beta == 0.0) std::memset(c.data(), 0, c.size() * sizeof(double));
    // Fallback loops, a.cols()-strided reads kept in the innermost position
    // only for the transposed-A case.
    if (!ta && !tb) {
        for (std::size_t i = 0; i < m; ++i) {
            const double* arow = a.row(i);
            double* crow = c.row(i);
            for (std::size_t l = 0; l < k; ++l) {
                const double av = arow[l];
                const double* brow = b.row(l);
                for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
            }
        }
    } else if (!ta && tb) {
        for (std::size_t i = 0; i < m; ++i) {
            const double* arow = a.row(i);
            double* crow = c.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                const double* brow = b.row(j);
                double acc = 0.0;
                for (std::size_t l = 0; l < k; ++l) acc += arow[l] * brow[l];
                crow[j] += acc;
            }
        }
    } else if (ta && !tb) {
        for (std::size_t l = 0; l < k; ++l) {
            const double* arow = a.row(l);
            const double* brow = b.row(l);
            for (std::size_t i = 0; i < m; ++i) {
                const double av = arow[i];
                double* crow = c.row(i);
                for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
            }
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            double* crow = c.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t l = 0; l < k; ++l) acc += a(l, i) * b(j, l);
                crow[j] += acc;
            }
        }
    }
#endif
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeError("Matrix: data length " + std::to_string(data_.size()) +
                         " != " + std::to_string(rows_) + "*" + std::to_string(cols_));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::col_slice(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw ShapeError("col_slice: bad range");
    Matrix s(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        std::memcpy(s.row(i), row(i) + c0, (c1 - c0) * sizeof(double));
    return s;
}

Matrix Matrix::row_slice(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_) throw ShapeError("row_slice: bad range");
    Matrix s(r1 - r0, cols_);
    std::memcpy(s.data(), data_.data() + r0 * cols_, (r1 - r0) * cols_ * sizeof(double));
    return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    check_same_shape(*this, o, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_same_shape(*this, o, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    gemm(false, false, a, b, c, 0.0);
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.rows());
    gemm(false, true, a, b, c, 0.0);
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    Matrix c(a.cols(), b.cols());
    gemm(true, false, a, b, c, 0.0);
    return c;
}

void matmul_acc(const Matrix& a, const Matrix& b, Matrix& dst) { gemm(false, false, a, b, dst, 1.0); }
void matmul_nt_acc(const Matrix& a, const Matrix& b, Matrix& dst) { gemm(false, true, a, b, dst, 1.0); }
void matmul_tn_acc(const Matrix& a, const Matrix& b, Matrix& dst) { gemm(true, false, a, b, dst, 1.0); }

double frobenius_norm(const Matrix& m) {
    double acc = 0.0;
    for (double v : m.storage()) acc += v * v;
    return std::sqrt(acc);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "frobenius_distance");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.storage()[i] - b.storage()[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

void axpy(double alpha, const Matrix& x, Matrix& y) {
    check_same_shape(x, y, "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y.storage()[i] += alpha * x.storage()[i];
}

} // namespace mimetic
