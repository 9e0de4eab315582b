#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ncm/config.hpp"
#include "ncm/kernels.hpp"

namespace ncm {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. The universal carrier type:
// construction from data validates squareness and finiteness.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);
    // Validating constructor from row-major rows (throws on ragged/non-finite data).
    static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    cplx* data() { return e_.data(); }
    const cplx* data() const { return e_.data(); }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs_entry() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a);

    // A - s*I
    ComplexMatrix shifted(cplx s) const;

    // y = A x
    std::vector<cplx> apply(const std::vector<cplx>& x) const;
    // y = A* x
    std::vector<cplx> apply_adjoint(const std::vector<cplx>& x) const;

private:
    int n_ = 0;
    std::vector<cplx> e_;
};

// (M + M*)/2
ComplexMatrix hermitian_part(const ComplexMatrix& m);
// (M - M*)/(2i)
ComplexMatrix antihermitian_part(const ComplexMatrix& m);
// x y* as a matrix
ComplexMatrix outer(const std::vector<cplx>& x, const std::vector<cplx>& y);

// Matrix certified Hermitian at construction.
class HermitianMatrix {
public:
    // Throws if ||M - M*||_max exceeds tol.hermitian_tol * max(1, ||M||_max).
    static HermitianMatrix from(const ComplexMatrix& m,
                                const ToleranceConfig& tol = default_tolerances());
    // Symmetrizes first; never throws on near-Hermitian input.
    static HermitianMatrix symmetrized(const ComplexMatrix& m);

    const ComplexMatrix& underlying() const { return m_; }
    int dim() const { return m_.dim(); }

private:
    explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

// Positive semidefinite unit-trace state. Carries its eigendecomposition
// (ascending eigenvalues, unitary of column eigenvectors) and numerical rank.
class Density {
public:
    static Density from(const HermitianMatrix& h,
                        const ToleranceConfig& tol = default_tolerances());
    static Density from_matrix(const ComplexMatrix& m,
                               const ToleranceConfig& tol = default_tolerances());
    static Density maximally_mixed(int n);

    const ComplexMatrix& matrix() const { return h_.underlying(); }
    const HermitianMatrix& hermitian() const { return h_; }
    int dim() const { return h_.dim(); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix& modal() const { return modal_; }
    int rank() const { return rank_; }

private:
    Density(HermitianMatrix h, std::vector<double> ev, ComplexMatrix modal, int rank)
        : h_(std::move(h)), eigenvalues_(std::move(ev)), modal_(std::move(modal)), rank_(rank) {}

    HermitianMatrix h_;
    std::vector<double> eigenvalues_;
    ComplexMatrix modal_;
    int rank_;
};

// Unit vector x representing the projection x x*.
class RankOneProjection {
public:
    static RankOneProjection from(std::vector<cplx> v,
                                  const ToleranceConfig& tol = default_tolerances());

    const std::vector<cplx>& vector() const { return v_; }
    int dim() const { return static_cast<int>(v_.size()); }
    ComplexMatrix matrix() const { return outer(v_, v_); }
    Density to_density(const ToleranceConfig& tol = default_tolerances()) const;

private:
    explicit RankOneProjection(std::vector<cplx> v) : v_(std::move(v)) {}
    std::vector<cplx> v_;
};

}  // namespace ncm
