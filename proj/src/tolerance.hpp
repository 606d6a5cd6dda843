#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hs {

/// Shared floating-point comparison policy. Combined test:
/// |a-b| <= abs_tol + rel_tol * max(|a|,|b|).
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;

    Tolerance() = default;
    Tolerance(double abs_t, double rel_t) : abs_tol(abs_t), rel_tol(rel_t) {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::domain_error("Tolerance: abs_tol and rel_tol must be positive");
    }

    bool close(double a, double b) const {
        return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
    }

    bool close(std::complex<double> a, std::complex<double> b) const {
        return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
    }

    bool is_zero(double a) const { return std::abs(a) <= abs_tol; }
};

} // namespace hs
