#include "ncm/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "ncm/linalg.hpp"

namespace ncm {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("matrix must be nonempty");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    if (!m.all_finite()) throw std::invalid_argument("matrix entries must be finite");
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t{};
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::nrm2sq(e_.data(), static_cast<int>(e_.size())));
}

double ComplexMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const cplx& z : e_) m = std::max(m, std::norm(z));
    return std::sqrt(m);
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : e_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
    kernels::axpy(1.0, rhs.e_.data(), e_.data(), static_cast<int>(e_.size()));
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("dimension mismatch");
    kernels::axpy(-1.0, rhs.e_.data(), e_.data(), static_cast<int>(e_.size()));
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    kernels::scal(s, e_.data(), static_cast<int>(e_.size()));
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    ComplexMatrix c(a.n_);
    kernels::matmul(a.e_.data(), b.e_.data(), c.e_.data(), a.n_);
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a) {
    ComplexMatrix r = a;
    r *= -1.0;
    return r;
}

ComplexMatrix ComplexMatrix::shifted(cplx s) const {
    ComplexMatrix r = *this;
    for (int i = 0; i < n_; ++i) r(i, i) -= s;
    return r;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& x) const {
    std::vector<cplx> y(n_);
    for (int i = 0; i < n_; ++i) {
        cplx s{};
        const cplx* row = e_.data() + static_cast<size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<cplx> ComplexMatrix::apply_adjoint(const std::vector<cplx>& x) const {
    std::vector<cplx> y(n_);
    for (int j = 0; j < n_; ++j) {
        const cplx* row = e_.data() + static_cast<size_t>(j) * n_;
        for (int i = 0; i < n_; ++i) y[i] += std::conj(row[i]) * x[j];
    }
    return y;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix r = m;
    r += m.adjoint();
    r *= 0.5;
    return r;
}

ComplexMatrix antihermitian_part(const ComplexMatrix& m) {
    ComplexMatrix r = m;
    r -= m.adjoint();
    r *= cplx{0.0, -0.5};
    return r;
}

ComplexMatrix outer(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    const int n = static_cast<int>(x.size());
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = x[i] * std::conj(y[j]);
    return m;
}

HermitianMatrix HermitianMatrix::from(const ComplexMatrix& m, const ToleranceConfig& tol) {
    const ComplexMatrix dev = m - m.adjoint();
    const double scale = std::max(1.0, m.max_abs_entry());
    if (dev.max_abs_entry() > tol.hermitian_tol * scale)
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    return HermitianMatrix(hermitian_part(m));
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
    return HermitianMatrix(hermitian_part(m));
}

Density Density::from(const HermitianMatrix& h, const ToleranceConfig& tol) {
    const auto eig = linalg::eig_hermitian(h, tol);
    if (eig.values.front() < -tol.psd_tol)
        throw std::invalid_argument("density must be positive semidefinite");
    const double tr = h.underlying().trace().real();
    if (std::abs(tr - 1.0) > tol.trace_tol)
        throw std::invalid_argument("density must have unit trace");
    const double lmax = std::max(eig.values.back(), 0.0);
    const double eps = 2.220446049250313e-16;
    const double cutoff = std::max(h.dim() * eps * lmax, tol.rank_cutoff_floor);
    int rank = 0;
    for (double v : eig.values)
        if (v > cutoff) ++rank;
    return Density(h, eig.values, eig.vectors, rank);
}

Density Density::from_matrix(const ComplexMatrix& m, const ToleranceConfig& tol) {
    return from(HermitianMatrix::from(m, tol), tol);
}

Density Density::maximally_mixed(int n) {
    ComplexMatrix m = ComplexMatrix::identity(n);
    m *= cplx{1.0 / n, 0.0};
    return from(HermitianMatrix::symmetrized(m));
}

RankOneProjection RankOneProjection::from(std::vector<cplx> v, const ToleranceConfig& tol) {
    const double nrm = std::sqrt(kernels::nrm2sq(v.data(), static_cast<int>(v.size())));
    if (std::abs(nrm - 1.0) > tol.unit_vector_tol) {
        if (nrm <= 0.0) throw std::invalid_argument("projection vector must be nonzero");
        kernels::scal(1.0 / nrm, v.data(), static_cast<int>(v.size()));
        if (std::abs(nrm - 1.0) > 1e-6)
            throw std::invalid_argument("projection vector is far from unit norm");
    }
    return RankOneProjection(std::move(v));
}

Density RankOneProjection::to_density(const ToleranceConfig& tol) const {
    return Density::from(HermitianMatrix::symmetrized(matrix()), tol);
}

}  // namespace ncm
