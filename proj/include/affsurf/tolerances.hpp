#pragma once

#include <stdexcept>

namespace affsurf {

// Shared tolerance policy. zero_tol is absolute; invariant_tol and rank_tol
// are applied relative to a problem-dependent scale by the callers.
struct Tolerances {
    double zero_tol = 1e-9;
    double invariant_tol = 1e-8;
    double rank_tol = 1e-9;

    void validate() const {
        if (!(zero_tol > 0.0) || !(invariant_tol > 0.0) || !(rank_tol > 0.0))
            throw std::invalid_argument("tolerances must be strictly positive");
        if (!(zero_tol < 1.0))
            throw std::invalid_argument("zero_tol must be < 1");
    }
};

struct invalid_map_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct rank_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct signature_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct canonicalization_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct parameter_domain_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct membership_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct gauge_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct flat_input_error : std::runtime_error { using std::runtime_error::runtime_error; };

} // namespace affsurf
