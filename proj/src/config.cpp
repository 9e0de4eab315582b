#include "ncm/config.hpp"

#include <stdexcept>
#include <unordered_map>

namespace ncm {

void ToleranceConfig::set(const std::string& name, double value) {
    static const std::unordered_map<std::string, double ToleranceConfig::*> fields = {
        {"hermitian_tol", &ToleranceConfig::hermitian_tol},
        {"psd_tol", &ToleranceConfig::psd_tol},
        {"trace_tol", &ToleranceConfig::trace_tol},
        {"decomp_residual", &ToleranceConfig::decomp_residual},
        {"unit_vector_tol", &ToleranceConfig::unit_vector_tol},
        {"feasibility_tol", &ToleranceConfig::feasibility_tol},
        {"slack_tol", &ToleranceConfig::slack_tol},
        {"basis_orthonormal_tol", &ToleranceConfig::basis_orthonormal_tol},
        {"basis_repair_limit", &ToleranceConfig::basis_repair_limit},
        {"partial_isometry_tol", &ToleranceConfig::partial_isometry_tol},
        {"contraction_tol", &ToleranceConfig::contraction_tol},
        {"normality_tol", &ToleranceConfig::normality_tol},
        {"rank_cutoff_floor", &ToleranceConfig::rank_cutoff_floor},
        {"phase_zero_tol", &ToleranceConfig::phase_zero_tol},
    };
    auto it = fields.find(name);
    if (it == fields.end()) throw std::invalid_argument("unknown tolerance name: " + name);
    this->*(it->second) = value;
}

const ToleranceConfig& default_tolerances() {
    static const ToleranceConfig cfg{};
    return cfg;
}

}  // namespace ncm
