#pragma once
#include <vector>

#include "cgs/suite/algebra.hpp"
#include "cgs/suite/orthogonal.hpp"
#include "cgs/suite/roots.hpp"
#include "cgs/suite/runner.hpp"

namespace cgs {

inline const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> c{
        {1, "Lie dimensions", suite::lie_dimension_cases},
        {2, "characteristic 2 anomaly", suite::char2_anomaly_cases},
        {3, "root data", suite::root_data_cases},
        {4, "Dynkin types and flags", suite::dynkin_cases},
        {5, "centers", suite::center_cases},
        {6, "Clifford structure", suite::clifford_structure_cases},
        {7, "reflections and parity", suite::reflection_cases},
        {8, "Cartan-Dieudonne", suite::cartan_dieudonne_cases},
        {9, "enumeration and spinor sequences", suite::enumeration_cases},
        {10, "quadratic pairs", suite::quadratic_pair_cases},
    };
    return c;
}

inline Report run_acceptance(const SuiteOptions& opt = {}) { return run_suite("acceptance", acceptance_criteria(), opt); }

} // namespace cgs
