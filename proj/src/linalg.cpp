#include "ncm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ncm::linalg {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// --- Householder tridiagonalization ------------------------------------
//
// Reduces a Hermitian matrix to real symmetric tridiagonal form, returning
// the accumulated unitary Q with A = Q T Q*. Complex subdiagonal phases are
// absorbed into Q so T is real.

struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples i and i+1
    ComplexMatrix q;
};

Tridiag tridiagonalize(const ComplexMatrix& a_in, bool want_q) {
    const int n = a_in.dim();
    ComplexMatrix a = a_in;
    ComplexMatrix q = want_q ? ComplexMatrix::identity(n) : ComplexMatrix();
    std::vector<cplx> v(n), p(n), w(n);

    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;  // length of the column below the diagonal
        double nx2 = 0.0;
        for (int i = k + 1; i < n; ++i) nx2 += std::norm(a(i, k));
        const double nx = std::sqrt(nx2);
        if (nx == 0.0) continue;

        const cplx x0 = a(k + 1, k);
        const cplx alpha = (x0 == cplx{}) ? cplx{nx, 0.0} : x0 / std::abs(x0) * nx;
        for (int i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        v[0] += alpha;
        double vv = 0.0;
        for (int i = 0; i < m; ++i) vv += std::norm(v[i]);
        if (vv == 0.0) continue;
        const double tau = 2.0 / vv;

        // p = tau * A22 v, w = p - (tau/2)(v* p) v, A22 -= v w* + w v*
        for (int i = 0; i < m; ++i) {
            cplx s{};
            for (int j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
            p[i] = tau * s;
        }
        cplx vp{};
        for (int i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
        const cplx kappa = 0.5 * tau * vp;
        for (int i = 0; i < m; ++i) w[i] = p[i] - kappa * v[i];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                a(k + 1 + i, k + 1 + j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);

        a(k + 1, k) = -alpha;
        a(k, k + 1) = std::conj(-alpha);
        for (int i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }

        // Q <- Q (I - tau v v*)
        if (want_q) {
            for (int r = 0; r < n; ++r) {
                cplx g{};
                for (int j = 0; j < m; ++j) g += q(r, k + 1 + j) * v[j];
                g *= tau;
                for (int j = 0; j < m; ++j) q(r, k + 1 + j) -= g * std::conj(v[j]);
            }
        }
    }

    Tridiag t;
    t.diag.resize(n);
    t.off.assign(std::max(n - 1, 0), 0.0);
    for (int i = 0; i < n; ++i) t.diag[i] = a(i, i).real();

    // absorb subdiagonal phases so the tridiagonal is real
    cplx phase{1.0, 0.0};
    std::vector<cplx> col_scale(n, cplx{1.0, 0.0});
    for (int i = 0; i + 1 < n; ++i) {
        const cplx beta = a(i + 1, i);
        const double ab = std::abs(beta);
        t.off[i] = ab;
        if (ab > 0.0) phase *= beta / ab;
        col_scale[i + 1] = phase;
    }
    if (want_q) {
        for (int j = 1; j < n; ++j)
            for (int r = 0; r < n; ++r) q(r, j) *= col_scale[j];
    }
    t.q = std::move(q);
    return t;
}

// Implicit-shift QL on a real symmetric tridiagonal, rotations accumulated
// into the complex modal matrix when one is supplied.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* qp) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) {
                    std::vector<cplx> partial(d.begin(), d.end());
                    double rmax = 0.0;
                    for (int i = 0; i + 1 < n; ++i) rmax = std::max(rmax, std::abs(e[i]));
                    throw ConvergenceError("hermitian eigensolver exceeded iteration cap",
                                           partial, rmax);
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (qp != nullptr) {
                        ComplexMatrix& q = *qp;
                        for (int row = 0; row < q.dim(); ++row) {
                            const cplx qi = q(row, i);
                            const cplx qi1 = q(row, i + 1);
                            q(row, i + 1) = s * qi + c * qi1;
                            q(row, i) = c * qi - s * qi1;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

void sort_eigh(std::vector<double>& d, ComplexMatrix& q) {
    const int n = static_cast<int>(d.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });
    std::vector<double> ds(n);
    ComplexMatrix qs(n);
    for (int j = 0; j < n; ++j) {
        ds[j] = d[idx[j]];
        for (int r = 0; r < n; ++r) qs(r, j) = q(r, idx[j]);
    }
    d = std::move(ds);
    q = std::move(qs);
}

// Complex Givens rotation G = [[c, s], [-conj(s), c]] with real c >= 0
// mapping (a, b) to (r, 0).
struct Givens {
    double c;
    cplx s;
};

Givens make_givens(cplx a, cplx b) {
    const double aa = std::abs(a), ab = std::abs(b);
    if (ab == 0.0) return {1.0, cplx{}};
    if (aa == 0.0) return {0.0, cplx{1.0, 0.0}};
    const double r = std::hypot(aa, ab);
    return {aa / r, (a / aa) * std::conj(b) / r};
}

}  // namespace

EigHResult eig_hermitian(const HermitianMatrix& h, const ToleranceConfig&) {
    Tridiag t = tridiagonalize(h.underlying(), true);
    tridiag_ql(t.diag, t.off, &t.q);
    sort_eigh(t.diag, t.q);
    return {std::move(t.diag), std::move(t.q)};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& hermitian) {
    Tridiag t = tridiagonalize(hermitian, false);
    tridiag_ql(t.diag, t.off, nullptr);
    std::sort(t.diag.begin(), t.diag.end());
    return t.diag;
}

std::vector<cplx> eig_general(const ComplexMatrix& a_in, const ToleranceConfig&) {
    const int n = a_in.dim();
    ComplexMatrix h = a_in;
    std::vector<cplx> v(n), t(n);

    // Hessenberg reduction (eigenvalues only, no accumulation)
    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;
        double nx2 = 0.0;
        for (int i = k + 1; i < n; ++i) nx2 += std::norm(h(i, k));
        const double nx = std::sqrt(nx2);
        if (nx == 0.0) continue;
        const cplx x0 = h(k + 1, k);
        const cplx alpha = (x0 == cplx{}) ? cplx{nx, 0.0} : x0 / std::abs(x0) * nx;
        for (int i = 0; i < m; ++i) v[i] = h(k + 1 + i, k);
        v[0] += alpha;
        double vv = 0.0;
        for (int i = 0; i < m; ++i) vv += std::norm(v[i]);
        if (vv == 0.0) continue;
        const double tau = 2.0 / vv;
        // rows: H <- (I - tau v v*) H  on rows k+1..n-1
        for (int j = 0; j < n; ++j) {
            cplx s{};
            for (int i = 0; i < m; ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
            s *= tau;
            for (int i = 0; i < m; ++i) h(k + 1 + i, j) -= v[i] * s;
        }
        // cols: H <- H (I - tau v v*) on cols k+1..n-1
        for (int i = 0; i < n; ++i) {
            cplx s{};
            for (int j = 0; j < m; ++j) s += h(i, k + 1 + j) * v[j];
            s *= tau;
            for (int j = 0; j < m; ++j) h(i, k + 1 + j) -= s * std::conj(v[j]);
        }
    }

    const double scale = std::max(h.frobenius_norm(), 1e-300);
    std::vector<cplx> eig;
    eig.reserve(n);
    std::vector<Givens> rot(std::max(n - 1, 0));

    int hi = n - 1;
    int sweeps = 0, since_deflate = 0;
    const int cap = 100 * std::max(n, 1);
    while (hi >= 0) {
        // zero negligible subdiagonals, then find the active window [lo, hi]
        int lo = hi;
        for (int k = hi; k >= 1; --k) {
            const double thr = kEps * (std::abs(h(k - 1, k - 1)) + std::abs(h(k, k)));
            if (std::abs(h(k, k - 1)) <= std::max(thr, 1e-300)) {
                h(k, k - 1) = 0.0;
                break;
            }
            lo = k - 1;
        }
        if (lo == hi) {
            eig.push_back(h(hi, hi));
            --hi;
            since_deflate = 0;
            continue;
        }
        if (++sweeps > cap) {
            for (int i = hi; i >= 0; --i) eig.push_back(h(i, i));
            double rmax = 0.0;
            for (int i = lo + 1; i <= hi; ++i) rmax = std::max(rmax, std::abs(h(i, i - 1)));
            throw ConvergenceError("general eigensolver exceeded sweep cap", eig,
                                   rmax / scale);
        }

        // shift: Wilkinson from the trailing 2x2, exceptional every 10th
        cplx sigma;
        if (++since_deflate % 10 == 0) {
            sigma = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            const cplx aa = h(hi - 1, hi - 1), bb = h(hi - 1, hi);
            const cplx cc = h(hi, hi - 1), dd = h(hi, hi);
            const cplx tr = aa + dd;
            const cplx disc = std::sqrt((aa - dd) * (aa - dd) + 4.0 * bb * cc);
            const cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
            sigma = (std::abs(l1 - dd) < std::abs(l2 - dd)) ? l1 : l2;
        }

        for (int i = lo; i <= hi; ++i) h(i, i) -= sigma;
        // left Givens pass: zero the subdiagonal (QR)
        for (int k = lo; k < hi; ++k) {
            const Givens g = make_givens(h(k, k), h(k + 1, k));
            rot[k] = g;
            for (int j = k; j <= hi; ++j) {
                const cplx t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = g.c * t1 + g.s * t2;
                h(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
            }
        }
        // right pass: H <- R Q restores Hessenberg form
        for (int k = lo; k < hi; ++k) {
            const Givens g = rot[k];
            for (int i = lo; i <= std::min(k + 1, hi); ++i) {
                const cplx t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = g.c * t1 + std::conj(g.s) * t2;
                h(i, k + 1) = -g.s * t1 + g.c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += sigma;
    }

    std::sort(eig.begin(), eig.end(), [](cplx x, cplx y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return eig;
}

namespace {

// column helpers for the one-sided Jacobi sweep (row-major storage)
double col_norm2(const ComplexMatrix& w, int j) {
    double s = 0.0;
    for (int i = 0; i < w.dim(); ++i) s += std::norm(w(i, j));
    return s;
}

cplx col_dotc(const ComplexMatrix& w, int i, int j) {
    cplx s{};
    for (int r = 0; r < w.dim(); ++r) s += std::conj(w(r, i)) * w(r, j);
    return s;
}

void rotate_cols(ComplexMatrix& m, int i, int j, double cs, double sn, cplx ephase) {
    // [m_i, m_j] <- [m_i, e^{-i phi} m_j] J with J = [[cs, sn], [-sn, cs]]
    for (int r = 0; r < m.dim(); ++r) {
        const cplx wi = m(r, i);
        const cplx wj = m(r, j) * ephase;
        m(r, i) = cs * wi - sn * wj;
        m(r, j) = sn * wi + cs * wj;
    }
}

}  // namespace

SvdResult svd(const ComplexMatrix& a, const ToleranceConfig&) {
    const int n = a.dim();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 60;
    const double conv = 1e-15;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double aa = col_norm2(w, i);
                const double bb = col_norm2(w, j);
                const cplx c = col_dotc(w, i, j);
                const double ac = std::abs(c);
                if (ac <= conv * std::sqrt(aa * bb) || ac == 0.0) continue;
                off = std::max(off, ac / std::sqrt(aa * bb));
                const cplx ephase = std::conj(c) / ac;  // e^{-i phi}
                const double tau = (bb - aa) / (2.0 * ac);
                const double t = std::copysign(1.0, tau) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                rotate_cols(w, i, j, cs, sn, ephase);
                rotate_cols(v, i, j, cs, sn, ephase);
            }
        }
        if (off == 0.0) break;
    }

    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = std::sqrt(col_norm2(w, j));

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return sigma[i] > sigma[j]; });

    SvdResult out;
    out.singular_values.resize(n);
    out.left = ComplexMatrix(n);
    out.right = ComplexMatrix(n);
    const double smax = sigma.empty() ? 0.0 : sigma[idx[0]];
    const double cutoff = std::max(n * kEps * smax, 1e-300);

    std::vector<std::vector<cplx>> ucols;
    ucols.reserve(n);
    for (int c = 0; c < n; ++c) {
        const int src = idx[c];
        out.singular_values[c] = sigma[src];
        for (int r = 0; r < n; ++r) out.right(r, c) = v(r, src);
        if (sigma[src] > cutoff) {
            std::vector<cplx> u(n);
            for (int r = 0; r < n; ++r) u[r] = w(r, src) / sigma[src];
            ucols.push_back(std::move(u));
        }
    }
    // complete the kernel columns of U against the standard basis
    for (int c = static_cast<int>(ucols.size()); c < n; ++c) {
        std::vector<cplx> u;
        for (int cand = 0; cand < n; ++cand) {
            u.assign(n, cplx{});
            u[cand] = 1.0;
            for (const auto& prev : ucols) {
                cplx proj{};
                for (int r = 0; r < n; ++r) proj += std::conj(prev[r]) * u[r];
                for (int r = 0; r < n; ++r) u[r] -= proj * prev[r];
            }
            double nrm = 0.0;
            for (const cplx& z : u) nrm += std::norm(z);
            nrm = std::sqrt(nrm);
            if (nrm > 0.5) {
                for (cplx& z : u) z /= nrm;
                break;
            }
        }
        ucols.push_back(std::move(u));
    }
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) out.left(r, c) = ucols[c][r];
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& a, const ToleranceConfig&) {
    const std::vector<double> lam = hermitian_eigenvalues(hermitian_part(a.adjoint() * a));
    std::vector<double> s(lam.size());
    for (size_t i = 0; i < s.size(); ++i)
        s[i] = std::sqrt(std::max(lam[lam.size() - 1 - i], 0.0));
    return s;
}

HermitianMatrix abs_power(const ComplexMatrix& a, double p, const ToleranceConfig& tol) {
    if (p < 1.0) throw std::invalid_argument("abs_power requires p >= 1");
    const int n = a.dim();
    const ComplexMatrix ata = a.adjoint() * a;
    const auto eig = eig_hermitian(HermitianMatrix::symmetrized(ata), tol);
    ComplexMatrix scaled(n);
    for (int c = 0; c < n; ++c) {
        const double lam = std::max(eig.values[c], 0.0);
        const cplx f{std::pow(lam, 0.5 * p), 0.0};
        for (int r = 0; r < n; ++r) scaled(r, c) = eig.vectors(r, c) * f;
    }
    return HermitianMatrix::symmetrized(scaled * eig.vectors.adjoint());
}

double operator_norm(const ComplexMatrix& a, const ToleranceConfig&) {
    const std::vector<double> lam = hermitian_eigenvalues(hermitian_part(a.adjoint() * a));
    return std::sqrt(std::max(lam.back(), 0.0));
}

double schatten_norm(const ComplexMatrix& a, double p, const ToleranceConfig& tol) {
    if (p < 1.0) throw std::invalid_argument("schatten_norm requires p >= 1");
    const std::vector<double> s = singular_values(a, tol);
    const double smax = s.front();
    if (smax == 0.0) return 0.0;
    double acc = 0.0;
    for (double si : s) acc += std::pow(si / smax, p);
    return smax * std::pow(acc, 1.0 / p);
}

PolarResult polar(const ComplexMatrix& a, const ToleranceConfig& tol) {
    const SvdResult f = svd(a, tol);
    const ComplexMatrix u = f.left * f.right.adjoint();
    ComplexMatrix sv(a.dim());
    for (int c = 0; c < a.dim(); ++c)
        for (int r = 0; r < a.dim(); ++r)
            sv(r, c) = f.right(r, c) * f.singular_values[c];
    return {u, HermitianMatrix::symmetrized(sv * f.right.adjoint())};
}

PartialIsometryCheck is_partial_isometry(const ComplexMatrix& v, double tol_value,
                                         const ToleranceConfig& tol) {
    if (tol_value <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const ComplexMatrix resid = v * v.adjoint() * v - v;
    const double r = operator_norm(resid, tol);
    return {r <= tol_value, r};
}

NormalEig eig_normal(const ComplexMatrix& a, const ToleranceConfig& tol) {
    const int n = a.dim();
    const ComplexMatrix h1 = hermitian_part(a);
    const ComplexMatrix h2 = antihermitian_part(a);
    const double scale = 1.0 + a.frobenius_norm();

    const auto base = eig_hermitian(HermitianMatrix::symmetrized(h1), tol);

    NormalEig best;
    double best_residual = std::numeric_limits<double>::infinity();
    for (const double ctol_rel : {1e-12, 1e-10, 1e-8, 1e-6}) {
        const double ctol = ctol_rel * scale;
        ComplexMatrix q = base.vectors;
        const ComplexMatrix b = q.adjoint() * h2 * q;

        int start = 0;
        while (start < n) {
            int stop = start;
            while (stop + 1 < n && base.values[stop + 1] - base.values[stop] <= ctol) ++stop;
            const int m = stop - start + 1;
            if (m > 1) {
                ComplexMatrix blk(m);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) blk(i, j) = b(start + i, start + j);
                const auto sub = eig_hermitian(HermitianMatrix::symmetrized(blk), tol);
                ComplexMatrix qcols(n);
                for (int j = 0; j < m; ++j)
                    for (int r = 0; r < n; ++r) qcols(r, j) = q(r, start + j);
                for (int j = 0; j < m; ++j)
                    for (int r = 0; r < n; ++r) {
                        cplx s{};
                        for (int k = 0; k < m; ++k) s += qcols(r, k) * sub.vectors(k, j);
                        q(r, start + j) = s;
                    }
            }
            start = stop + 1;
        }

        // off-diagonal residual of Q* A Q
        const ComplexMatrix d = q.adjoint() * a * q;
        double resid = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) resid += std::norm(d(i, j));
        resid = std::sqrt(resid);
        std::vector<cplx> lam_exact(n);
        for (int i = 0; i < n; ++i) lam_exact[i] = d(i, i);
        if (resid < best_residual) {
            best_residual = resid;
            best.values = lam_exact;
            best.vectors = q;
        }
        if (resid <= 1e-12 * scale) break;
    }

    if (best_residual > tol.normality_tol * scale)
        throw std::invalid_argument("matrix is not normal within tolerance");

    // deterministic order: sort by (re, im), permute columns alongside
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (best.values[i].real() != best.values[j].real())
            return best.values[i].real() < best.values[j].real();
        return best.values[i].imag() < best.values[j].imag();
    });
    NormalEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = best.values[idx[j]];
        for (int r = 0; r < n; ++r) out.vectors(r, j) = best.vectors(r, idx[j]);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& hermitian_psd, const ToleranceConfig& tol) {
    const int n = hermitian_psd.dim();
    const auto eig = eig_hermitian(HermitianMatrix::symmetrized(hermitian_psd), tol);
    ComplexMatrix scaled(n);
    for (int c = 0; c < n; ++c) {
        const double lam = std::max(eig.values[c], 0.0);
        for (int r = 0; r < n; ++r) scaled(r, c) = eig.vectors(r, c) * std::sqrt(lam);
    }
    return hermitian_part(scaled * eig.vectors.adjoint());
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& g) {
    const int n = g.dim();
    std::vector<std::vector<cplx>> cols;
    cols.reserve(n);
    auto push_orthonormalized = [&](std::vector<cplx> u) -> bool {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& prev : cols) {
                cplx proj{};
                for (int r = 0; r < n; ++r) proj += std::conj(prev[r]) * u[r];
                for (int r = 0; r < n; ++r) u[r] -= proj * prev[r];
            }
        double nrm = 0.0;
        for (const cplx& z : u) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) return false;
        for (cplx& z : u) z /= nrm;
        cols.push_back(std::move(u));
        return true;
    };
    for (int c = 0; c < n; ++c) {
        std::vector<cplx> u(n);
        for (int r = 0; r < n; ++r) u[r] = g(r, c);
        if (!push_orthonormalized(std::move(u))) {
            // deficient column: complete from the standard basis
            for (int cand = 0; cand < n; ++cand) {
                std::vector<cplx> e(n, cplx{});
                e[cand] = 1.0;
                if (push_orthonormalized(std::move(e))) break;
            }
        }
    }
    ComplexMatrix q(n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) q(r, c) = cols[c][r];
    return q;
}

}  // namespace ncm::linalg
