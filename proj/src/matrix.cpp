#include "specbound/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specbound/errors.hpp"
#include "specbound/kernels.hpp"

namespace specbound::la {

namespace {
const auto& K() { return kernels::active(); }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    CMatrix c(a.rows(), b.cols());
    // c_j = sum_k b(k,j) * a_k, column by column
    for (std::size_t j = 0; j < b.cols(); ++j) {
        cdouble* cj = c.col(j);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cdouble w = b(k, j);
            if (w != cdouble{}) K().axpy(a.rows(), w, a.col(k), cj);
        }
    }
    return c;
}

CMatrix adjoint(const CMatrix& a) {
    CMatrix r(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) r(j, i) = std::conj(a(i, j));
    return r;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: dimension mismatch");
    CMatrix r = a;
    K().axpy(r.rows() * r.cols(), 1.0, b.data(), r.data());
    return r;
}

CMatrix sub(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sub: dimension mismatch");
    CMatrix r = a;
    K().axpy(r.rows() * r.cols(), -1.0, b.data(), r.data());
    return r;
}

std::vector<cdouble> matvec(const CMatrix& a, const std::vector<cdouble>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cdouble> y(a.rows());
    for (std::size_t k = 0; k < a.cols(); ++k)
        if (x[k] != cdouble{}) K().axpy(a.rows(), x[k], a.col(k), y.data());
    return y;
}

double frobenius_norm(const CMatrix& a) {
    return std::sqrt(K().norm2sq(a.rows() * a.cols(), a.data()));
}

cdouble trace(const CMatrix& a) {
    cdouble t = 0.0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

LU lu_factor(CMatrix a) {
    if (!a.square()) throw std::invalid_argument("lu_factor: square matrix required");
    const std::size_t n = a.rows();
    LU lu{std::move(a), std::vector<int>(n), 1.0};
    CMatrix& m = lu.f;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        lu.piv[k] = int(p);
        if (p != k) {
            lu.parity = -lu.parity;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
        }
        const cdouble pivot = m(k, k);
        if (pivot == cdouble{}) continue;  // singular; leave zero column
        const cdouble inv_p = 1.0 / pivot;
        for (std::size_t i = k + 1; i < n; ++i) m(i, k) *= inv_p;
        // trailing update, one column at a time: col_j[k+1:] -= m(k,j) * col_k[k+1:]
        for (std::size_t j = k + 1; j < n; ++j) {
            const cdouble w = m(k, j);
            if (w != cdouble{}) K().axpy(n - k - 1, -w, m.col(k) + k + 1, m.col(j) + k + 1);
        }
    }
    return lu;
}

std::vector<cdouble> lu_solve(const LU& lu, std::vector<cdouble> b) {
    const std::size_t n = lu.f.rows();
    if (b.size() != n) throw std::invalid_argument("lu_solve: dimension mismatch");
    for (std::size_t k = 0; k < n; ++k)
        if (std::size_t(lu.piv[k]) != k) std::swap(b[k], b[lu.piv[k]]);
    // forward: L y = Pb
    for (std::size_t k = 0; k < n; ++k)
        if (b[k] != cdouble{}) K().axpy(n - k - 1, -b[k], lu.f.col(k) + k + 1, b.data() + k + 1);
    // backward: U x = y
    for (std::size_t k = n; k-- > 0;) {
        const cdouble pivot = lu.f(k, k);
        if (pivot == cdouble{})
            throw singular_error("lu_solve: zero pivot at position " + std::to_string(k));
        b[k] /= pivot;
        if (k > 0 && b[k] != cdouble{}) K().axpy(k, -b[k], lu.f.col(k), b.data());
    }
    return b;
}

cdouble lu_det(const LU& lu) {
    cdouble d = lu.parity;
    for (std::size_t i = 0; i < lu.f.rows(); ++i) d *= lu.f(i, i);
    return d;
}

CMatrix inverse(const CMatrix& a) {
    const LU lu = lu_factor(a);
    const std::size_t n = a.rows();
    CMatrix inv(n, n);
    std::vector<cdouble> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), cdouble{});
        e[j] = 1.0;
        auto x = lu_solve(lu, e);
        std::copy(x.begin(), x.end(), inv.col(j));
    }
    return inv;
}

}  // namespace specbound::la
