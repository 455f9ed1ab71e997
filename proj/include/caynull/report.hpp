#pragma once

/// @file report.hpp
/// @brief Nullity report types shared by the circulant and dihedral solvers.

#include <stdexcept>
#include <string>
#include <vector>

namespace caynull {

/// Which polynomial a cyclotomic divisibility hit was found in.
enum class divisor_source { psi_prime, delta_plus, delta_minus };

inline const char* source_name(divisor_source s) {
    switch (s) {
        case divisor_source::psi_prime: return "psi_prime";
        case divisor_source::delta_plus: return "delta_plus";
        case divisor_source::delta_minus: return "delta_minus";
    }
    return "?";
}

inline divisor_source source_from_name(const std::string& s) {
    if (s == "psi_prime") return divisor_source::psi_prime;
    if (s == "delta_plus") return divisor_source::delta_plus;
    if (s == "delta_minus") return divisor_source::delta_minus;
    throw std::invalid_argument("unknown divisor source: " + s);
}

/// One divisibility hit: Phi_d divides the source polynomial, contributing
/// phi(d) to the nullity count.
struct divisor_contribution {
    int d = 1;
    divisor_source source = divisor_source::psi_prime;
    int phi = 1;

    friend bool operator==(const divisor_contribution&, const divisor_contribution&) = default;
};

/// Per-divisor contributions plus their total. Each (d, source) pair appears
/// at most once; a d hitting both deltas contributes phi(d) twice.
struct nullity_report {
    std::vector<divisor_contribution> contributions;
    int total = 0;
    bool singular = false;  // total > 0

    friend bool operator==(const nullity_report&, const nullity_report&) = default;
};

}  // namespace caynull
