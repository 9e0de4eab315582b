#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncm/config.hpp"
#include "ncm/matrix.hpp"

// Dense decompositions, self-contained (no external solver):
//   eig_hermitian  Householder tridiagonalization + implicit-shift QL
//   eig_general    Hessenberg reduction + shifted QR with deflation
//   svd            one-sided Jacobi with deterministic null-space completion
// Desk scale (n <= 256); all results deterministic for fixed input.

namespace ncm::linalg {

// Thrown when an iterative decomposition exceeds its sweep cap. Carries the
// partially converged spectrum and the remaining residual for diagnostics.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, std::vector<cplx> partial, double residual)
        : std::runtime_error(msg + " (residual " + std::to_string(residual) + ")"),
          partial_spectrum(std::move(partial)),
          residual(residual) {}

    std::vector<cplx> partial_spectrum;
    double residual;
};

struct EigHResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // unitary, columns are eigenvectors
};

struct SvdResult {
    ComplexMatrix left;                    // unitary U
    std::vector<double> singular_values;   // descending, nonnegative
    ComplexMatrix right;                   // unitary V, A = U diag(s) V*
};

struct PolarResult {
    ComplexMatrix unitary_factor;
    HermitianMatrix positive_factor;  // |A|, PSD
};

struct PartialIsometryCheck {
    bool holds;
    double residual;  // ||V V* V - V||
};

struct NormalEig {
    std::vector<cplx> values;  // sorted by (re, im)
    ComplexMatrix vectors;     // unitary, A = Q diag(values) Q*
};

EigHResult eig_hermitian(const HermitianMatrix& h,
                         const ToleranceConfig& tol = default_tolerances());

// Eigenvalues only (ascending), skipping modal-matrix accumulation. The
// input is used as-is and must already be Hermitian up to roundoff.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& hermitian);

// Eigenvalues of a general complex matrix, sorted by (re, im).
std::vector<cplx> eig_general(const ComplexMatrix& a,
                              const ToleranceConfig& tol = default_tolerances());

SvdResult svd(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances());

// Singular values only (descending).
std::vector<double> singular_values(const ComplexMatrix& a,
                                    const ToleranceConfig& tol = default_tolerances());

// |A|^p = (A*A)^{p/2} via spectral calculus; negative eigenvalues of A*A are
// clamped to zero before fractional powers. Requires p >= 1.
HermitianMatrix abs_power(const ComplexMatrix& a, double p,
                          const ToleranceConfig& tol = default_tolerances());

// Largest singular value.
double operator_norm(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances());

// (sum_i s_i^p)^{1/p}; requires p >= 1.
double schatten_norm(const ComplexMatrix& a, double p,
                     const ToleranceConfig& tol = default_tolerances());

// A = U P with U unitary (completed on the kernel via the SVD) and P = |A|.
PolarResult polar(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances());

// true iff ||V V* V - V|| <= tol_value (operator norm); residual always returned.
PartialIsometryCheck is_partial_isometry(const ComplexMatrix& v, double tol_value,
                                         const ToleranceConfig& tol = default_tolerances());

// Unitary diagonalization of a normal matrix by simultaneous diagonalization
// of its Hermitian and anti-Hermitian parts (cluster-then-rotate). Throws if
// the off-diagonal residual stays above the normality budget.
NormalEig eig_normal(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances());

// Clamped PSD square root of a Hermitian matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& hermitian_psd,
                       const ToleranceConfig& tol = default_tolerances());

// Modified Gram-Schmidt on the columns of g; returns a unitary whose leading
// columns span g's column space. Rank-deficient columns are replaced by
// deterministic completion against the standard basis.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& g);

}  // namespace ncm::linalg
