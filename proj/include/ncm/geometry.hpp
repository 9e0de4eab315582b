#pragma once

#include <cstdint>
#include <vector>

#include "ncm/config.hpp"
#include "ncm/linalg.hpp"
#include "ncm/matrix.hpp"

namespace ncm::geometry {

struct Circle {
    cplx center;
    double radius;
};

struct SpreadResult {
    double value;
    cplx witness_a;
    cplx witness_b;
};

// max_{i,j} |lambda_i - lambda_j| over the eigenvalues of a.
SpreadResult spread(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances());

// Smallest enclosing circle via Welzl's move-to-front algorithm; the shuffle
// is seeded so results are deterministic. Degenerate (collinear, duplicate)
// point sets fall back to two-point circles.
Circle smallest_enclosing_circle(const std::vector<cplx>& points,
                                 uint64_t seed = 0x5EC5EC5EC5EC5ECULL);

struct ChebyshevResult {
    cplx lambda_star;
    double radius;
    long evaluations;
};

struct ChebyshevOptions {
    int nelder_mead_iters = 160;
    double value_tol = 1e-12;
    double final_step = 1e-13;
};

// min over complex lambda of ||A - lambda I||. The objective is convex, so
// Nelder-Mead from three deterministic seeds (eigenvalue-circle center,
// trace/n, 0) followed by a compass polish reaches the global minimum.
ChebyshevResult chebyshev_radius(const ComplexMatrix& a, const ChebyshevOptions& opts = {},
                                 const ToleranceConfig& tol = default_tolerances());

struct JungResult {
    double radius;
    double diameter;
    bool holds;
};

// radius <= diameter/sqrt(3) + 1e-10 for planar point sets.
JungResult jung_check(const std::vector<cplx>& points);

}  // namespace ncm::geometry
