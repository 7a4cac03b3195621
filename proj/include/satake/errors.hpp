#pragma once

#include <stdexcept>
#include <string>

namespace satake {

// Malformed input: mismatched variable counts, ragged matrices, bad shapes.
struct structural_error : std::invalid_argument {
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// A stated precondition was violated (non-commuting input, odd weight, ...).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

struct singular_matrix_error : std::domain_error {
    explicit singular_matrix_error(const std::string& what) : std::domain_error(what) {}
};

// Conjugation over the fraction field produced entries with a nontrivial denominator.
struct non_polynomial_result_error : std::domain_error {
    explicit non_polynomial_result_error(const std::string& what) : std::domain_error(what) {}
};

// An identity the construction is required to satisfy failed to verify.
struct verification_error : std::logic_error {
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace satake
