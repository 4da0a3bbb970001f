#include "specbound/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "specbound/conformal.hpp"
#include "specbound/errors.hpp"
#include "specbound/kernels.hpp"

namespace specbound::eigen {

namespace {

const auto& K() { return kernels::active(); }

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---- balancing (diagonal similarity with powers of two) ----

std::vector<double> balance(CMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<double> scale(n, 1.0);
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double start = c + r;
            double f = 1.0;
            double g = r / 2.0;
            while (c < g) {
                f *= 2.0;
                c *= 4.0;
            }
            g = r * 2.0;
            while (c >= g) {
                f /= 2.0;
                c /= 4.0;
            }
            if ((c + r) / f < 0.95 * start) {
                again = true;
                scale[i] *= f;
                const double inv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;  // row i
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;    // column i
            }
        }
    }
    return scale;
}

// ---- Householder reduction to upper Hessenberg, accumulating Q ----

void hessenberg(CMatrix& a, CMatrix& q) {
    const std::size_t n = a.rows();
    q = CMatrix::identity(n);
    if (n < 3) return;
    std::vector<std::vector<cdouble>> vs;
    std::vector<double> taus;
    std::vector<cdouble> u(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;  // length of the column tail
        cdouble* x = a.col(k) + k + 1;
        const double xnorm = std::sqrt(K().norm2sq(m, x));
        std::vector<cdouble> v(x, x + m);
        double tau = 0.0;
        if (xnorm > 0.0) {
            const cdouble sgn = (v[0] != cdouble{}) ? v[0] / std::abs(v[0]) : cdouble{1.0};
            v[0] += sgn * xnorm;
            const double vnorm2 = K().norm2sq(m, v.data());
            if (vnorm2 > 0.0) {
                tau = 2.0 / vnorm2;
                // left: rows k+1.., columns k..: col -= tau (v^H col) v
                for (std::size_t j = k; j < n; ++j) {
                    cdouble* cj = a.col(j) + k + 1;
                    const cdouble w = K().dotc(m, v.data(), cj);
                    if (w != cdouble{}) K().axpy(m, -tau * w, v.data(), cj);
                }
                // right: all rows, columns k+1..: A <- A - tau (A v) v^H
                std::fill(u.begin(), u.end(), cdouble{});
                for (std::size_t j = 0; j < m; ++j)
                    if (v[j] != cdouble{}) K().axpy(n, v[j], a.col(k + 1 + j), u.data());
                for (std::size_t j = 0; j < m; ++j) {
                    const cdouble w = -tau * std::conj(v[j]);
                    if (w != cdouble{}) K().axpy(n, w, u.data(), a.col(k + 1 + j));
                }
            }
        }
        vs.push_back(std::move(v));
        taus.push_back(tau);
        // store exact zeros below the subdiagonal
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
    // accumulate Q = P_0 P_1 ... applied to the identity, in reverse
    for (std::size_t kk = vs.size(); kk-- > 0;) {
        const auto& v = vs[kk];
        const double tau = taus[kk];
        if (tau == 0.0) continue;
        const std::size_t m = v.size();
        for (std::size_t j = 0; j < n; ++j) {
            cdouble* cj = q.col(j) + kk + 1;
            const cdouble w = K().dotc(m, v.data(), cj);
            if (w != cdouble{}) K().axpy(m, -tau * w, v.data(), cj);
        }
    }
}

// ---- shifted QR on a Hessenberg matrix (eigenvalues only) ----

// Givens pair: y' = s x + c y = 0 with convention x' = c x - conj(s) y.
void givens(cdouble x, cdouble y, double& c, cdouble& s) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ay == 0.0) {
        c = 1.0;
        s = 0.0;
        return;
    }
    if (ax == 0.0) {
        c = 0.0;
        s = std::abs(y) / y;
        return;
    }
    const double r = std::hypot(ax, ay);
    c = ax / r;
    s = -(y * std::conj(x)) / (ax * r);
}

cdouble wilkinson_shift(cdouble a, cdouble b, cdouble c, cdouble d) {
    const cdouble tr = a + d;
    const cdouble det = a * d - b * c;
    cdouble disc = std::sqrt(tr * tr - 4.0 * det);
    if ((std::conj(tr) * disc).real() < 0.0) disc = -disc;
    const cdouble r1 = 0.5 * (tr + disc);
    const cdouble r2 = (std::abs(r1) > 0.0) ? det / r1 : 0.5 * (tr - disc);
    return (std::abs(r1 - d) < std::abs(r2 - d)) ? r1 : r2;
}

std::vector<cdouble> qr_eigenvalues(CMatrix h, double hnorm) {
    const std::size_t n = h.rows();
    std::vector<cdouble> lams(n);
    if (n == 0) return lams;
    std::size_t hi = n - 1;
    std::size_t iters_here = 0;
    std::size_t total_iters = 0;
    const std::size_t budget = 60 * n + 100;
    std::vector<double> cs(n);
    std::vector<cdouble> sn(n);
    while (true) {
        // deflate converged trailing eigenvalues
        std::size_t l = hi;
        while (l > 0) {
            const double sub = std::abs(h(l, l - 1));
            const double diag = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (sub <= kEps * (diag > 0.0 ? diag : hnorm)) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == hi) {
            lams[hi] = h(hi, hi);
            if (hi == 0) break;
            --hi;
            iters_here = 0;
            continue;
        }
        if (total_iters++ > budget) {
            std::vector<cdouble> partial;
            for (std::size_t i = 0; i <= hi; ++i) partial.push_back(h(i, i));
            throw solver_error("eig: QR iteration budget exhausted with " + std::to_string(hi + 1) +
                                   " eigenvalues uncertified",
                               partial);
        }
        // shift: Wilkinson, with an exceptional magnitude shift on stagnation
        cdouble mu;
        if (++iters_here % 12 == 0) {
            mu = h(hi, hi) + cdouble{std::abs(h(hi, hi - 1).real()) + std::abs(h(hi, hi - 1).imag()), 0.0};
        } else {
            mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        }
        for (std::size_t i = l; i <= hi; ++i) h(i, i) -= mu;
        // QR sweep: left rotations zero the subdiagonal
        for (std::size_t k = l; k < hi; ++k) {
            givens(h(k, k), h(k + 1, k), cs[k], sn[k]);
            const double c = cs[k];
            const cdouble s = sn[k];
            for (std::size_t j = k; j < n; ++j) {
                const cdouble xk = h(k, j), xk1 = h(k + 1, j);
                h(k, j) = c * xk - std::conj(s) * xk1;
                h(k + 1, j) = s * xk + c * xk1;
            }
        }
        // RQ: right rotations restore Hessenberg form
        for (std::size_t k = l; k < hi; ++k) {
            const std::size_t len = std::min(k + 3, n);
            K().rot(len, h.col(k), h.col(k + 1), cs[k], std::conj(sn[k]));
        }
        for (std::size_t i = l; i <= hi; ++i) h(i, i) += mu;
    }
    return lams;
}

// ---- inverse iteration on the preserved Hessenberg form ----

struct HessSolve {
    CMatrix m;                   // factored H - lambda I
    std::vector<char> swapped;   // adjacent-row pivot flags
    std::vector<cdouble> mult;   // elimination multipliers
};

HessSolve hess_factor(const CMatrix& h, cdouble lambda, double hnorm) {
    const std::size_t n = h.rows();
    HessSolve f{h, std::vector<char>(n, 0), std::vector<cdouble>(n, cdouble{})};
    CMatrix& m = f.m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= lambda;
    const double tiny = kEps * (hnorm > 0.0 ? hnorm : 1.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (std::abs(m(k + 1, k)) > std::abs(m(k, k))) {
            f.swapped[k] = 1;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(k + 1, j));
        }
        if (m(k, k) == cdouble{}) m(k, k) = tiny;
        const cdouble mult = m(k + 1, k) / m(k, k);
        f.mult[k] = mult;
        if (mult != cdouble{})
            for (std::size_t j = k + 1; j < n; ++j) m(k + 1, j) -= mult * m(k, j);
        m(k + 1, k) = 0.0;
    }
    if (m(n - 1, n - 1) == cdouble{}) m(n - 1, n - 1) = tiny;
    return f;
}

std::vector<cdouble> hess_solve(const HessSolve& f, std::vector<cdouble> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (f.swapped[k]) std::swap(b[k], b[k + 1]);
        b[k + 1] -= f.mult[k] * b[k];
    }
    for (std::size_t j = n; j-- > 0;) {
        b[j] /= f.m(j, j);
        if (j > 0 && b[j] != cdouble{}) K().axpy(j, -b[j], f.m.col(j), b.data());
    }
    return b;
}

void normalize(std::vector<cdouble>& v) {
    const double nrm = std::sqrt(K().norm2sq(v.size(), v.data()));
    if (nrm > 0.0) K().scal(v.size(), cdouble{1.0 / nrm, 0.0}, v.data());
}

}  // namespace

Spectrum eig(const CMatrix& a, double tol) {
    if (!a.square()) throw domain_error("eig: square matrix required");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n * n; ++i)
        if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag()))
            throw domain_error("eig: non-finite matrix entry");

    Spectrum out;
    if (n == 0) return out;
    const double anorm = la::frobenius_norm(a);
    if (n == 1) {
        out.eigenvalues = {a(0, 0)};
        out.residuals = {0.0};
        out.tags = {Tag::unclassified};
        return out;
    }

    CMatrix ab = a;
    const std::vector<double> scale = balance(ab);
    CMatrix q;
    hessenberg(ab, q);
    const double hnorm = la::frobenius_norm(ab);
    const std::vector<cdouble> lams = qr_eigenvalues(ab, hnorm);

    // certify each eigenvalue by an inverse-iteration eigenvector
    std::vector<std::pair<cdouble, double>> certified(n);
    std::vector<cdouble> x(n), v(n), av(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const cdouble lam = lams[idx];
        double best = std::numeric_limits<double>::infinity();
        const HessSolve f = hess_factor(ab, lam, hnorm);
        std::fill(x.begin(), x.end(), cdouble{1.0, 0.0});
        normalize(x);
        for (int attempt = 0; attempt < 3; ++attempt) {
            x = hess_solve(f, std::move(x));
            normalize(x);
            // back-transform: eigenvector of A is D * (Q x)
            std::fill(v.begin(), v.end(), cdouble{});
            for (std::size_t k = 0; k < n; ++k)
                if (x[k] != cdouble{}) K().axpy(n, x[k], q.col(k), v.data());
            for (std::size_t i = 0; i < n; ++i) v[i] *= scale[i];
            normalize(v);
            av = la::matvec(a, v);
            K().axpy(n, -lam, v.data(), av.data());
            const double res = std::sqrt(K().norm2sq(n, av.data())) / (anorm > 0.0 ? anorm : 1.0);
            best = std::min(best, res);
            if (best <= tol) break;
        }
        certified[idx] = {lam, best};
    }

    std::sort(certified.begin(), certified.end(), [](const auto& p, const auto& q2) {
        if (p.first.real() != q2.first.real()) return p.first.real() < q2.first.real();
        return p.first.imag() < q2.first.imag();
    });

    std::vector<cdouble> failed;
    for (const auto& [lam, res] : certified)
        if (!(res <= tol)) failed.push_back(lam);
    if (!failed.empty())
        throw solver_error("eig: residual certificate above tolerance " + std::to_string(tol) +
                               " for " + std::to_string(failed.size()) + " eigenvalue(s)",
                           failed);

    out.eigenvalues.reserve(n);
    out.residuals.reserve(n);
    for (const auto& [lam, res] : certified) {
        out.eigenvalues.push_back(lam);
        out.residuals.push_back(res);
    }
    out.tags.assign(n, Tag::unclassified);
    return out;
}

std::vector<double> svd(const CMatrix& a) {
    // one-sided Jacobi on the taller orientation
    CMatrix w = (a.rows() >= a.cols()) ? a : la::adjoint(a);
    const std::size_t m = w.rows(), n = w.cols();
    for (std::size_t i = 0; i < m * n; ++i)
        if (!std::isfinite(w.data()[i].real()) || !std::isfinite(w.data()[i].imag()))
            throw domain_error("svd: non-finite matrix entry");
    const int max_sweeps = 100;
    // Stop at the rotation noise floor: each sweep re-pollutes settled pairs
    // at machine epsilon scaled by the column length, so a fixed 1e-15 gate
    // livelocks once n is large.
    const double gate =
        64.0 * std::numeric_limits<double>::epsilon() * std::sqrt(double(m));
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        // Columns at the noise floor of the dominant one carry no singular
        // value information; rotating them against each other never settles
        // when the matrix is far from full rank.
        double colmax_sq = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            colmax_sq = std::max(colmax_sq, K().norm2sq(m, w.col(j)));
        const double floor_sq = gate * gate * colmax_sq;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double aii = K().norm2sq(m, w.col(i));
                const double ajj = K().norm2sq(m, w.col(j));
                if (aii <= floor_sq || ajj <= floor_sq) continue;
                const cdouble cij = K().dotc(m, w.col(i), w.col(j));
                const double off = std::abs(cij);
                if (off <= gate * std::sqrt(aii * ajj) + 1e-300) continue;
                changed = true;
                const double zeta = (ajj - aii) / (2.0 * off);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cdouble s = (t * c) * (cij / off);
                K().rot(m, w.col(i), w.col(j), c, s);
            }
        }
        if (!changed) break;
    }
    if (sweep == max_sweeps)
        throw solver_error("svd: Jacobi sweeps exhausted before convergence", {});
    std::vector<double> sig(n);
    for (std::size_t j = 0; j < n; ++j) sig[j] = std::sqrt(K().norm2sq(m, w.col(j)));
    std::sort(sig.begin(), sig.end(), std::greater<double>());
    return sig;
}

Spectrum classify_discrete(Spectrum spec, double eps) {
    if (!(eps > 0.0)) throw domain_error("classify_discrete: require eps > 0");
    spec.tags.assign(spec.eigenvalues.size(), Tag::essential_like);
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
        if (conformal::dist_to_ray(spec.eigenvalues[i]) > eps)
            spec.tags[i] = Tag::discrete_candidate;
    return spec;
}

}  // namespace specbound::eigen
