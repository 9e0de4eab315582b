#pragma once

#include <string>

namespace ncm {

// Every tolerance used by the library, threaded explicitly. Values may be
// overridden by name (CLI --config); unknown names are rejected.
struct ToleranceConfig {
    double hermitian_tol = 1e-12;         // relative max-entry deviation of M from M*
    double psd_tol = 1e-10;               // eigenvalue floor for densities
    double trace_tol = 1e-10;             // |Tr D - 1| for densities
    double decomp_residual = 1e-9;        // relative reconstruction residual of factorizations
    double unit_vector_tol = 1e-12;       // |norm - 1| for projection vectors
    double feasibility_tol = 1e-8;        // constraint residual for spectrahedron membership
    double slack_tol = 1e-8;              // violation slack in verification suites
    double basis_orthonormal_tol = 1e-10; // Gram residual of user-provided bases
    double basis_repair_limit = 1e-6;     // worst Gram residual still repaired by re-orthonormalization
    double partial_isometry_tol = 1e-8;   // default ||VV*V - V|| acceptance
    double contraction_tol = 1e-10;       // allowance above 1 for ||A|| of contractions
    double normality_tol = 1e-8;          // relative ||A*A - AA*|| for normal inputs
    double rank_cutoff_floor = 1e-10;     // absolute eigenvalue cutoff floor for numerical rank
    double phase_zero_tol = 1e-14;        // |Tr DA| below which the phase rotation is skipped

    // Sets the named tolerance. Throws std::invalid_argument for unknown names.
    void set(const std::string& name, double value);
};

const ToleranceConfig& default_tolerances();

}  // namespace ncm
