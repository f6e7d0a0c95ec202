#pragma once

#include <stdexcept>
#include <string>

namespace m0nbar {

// Base class for every domain error thrown by the library. CLI code maps
// these to exit code 1; anything else is a bug.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero polynomial") {}
};

// A divisibility claim failed. When raised from divisor_polynomial or
// lambda_polynomial this signals an internal-consistency failure, not bad
// user input.
struct not_divisible : error {
    explicit not_divisible(const std::string& what = "polynomial division is not exact") : error(what) {}
};

struct zero_polynomial : error {
    explicit zero_polynomial(const std::string& what = "operation undefined for the zero polynomial") : error(what) {}
};

struct non_square : error {
    non_square() : error("determinant of a non-square matrix") {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

struct bad_diagonal : error {
    explicit bad_diagonal(const std::string& what = "partial diagonal needs at least two members in 1..n") : error(what) {}
};

struct not_translation_invariant : error {
    explicit not_translation_invariant(const std::string& what = "polynomial does not define a divisor: "
                                                                 "not homogeneous and translation invariant")
        : error(what) {}
};

struct bad_index : error {
    explicit bad_index(const std::string& what = "basis index out of range") : error(what) {}
};

struct basis_mismatch : error {
    basis_mismatch() : error("divisor classes live in different Kapranov bases") {}
};

struct invalid_hypertree : error {
    explicit invalid_hypertree(const std::string& what = "hypertree axioms violated") : error(what) {}
};

struct bad_pivot : error {
    explicit bad_pivot(const std::string& what = "pivot row must have exactly three nonzero entries") : error(what) {}
};

struct unsupported_n : error {
    explicit unsupported_n(const std::string& what = "n outside the supported enumeration range") : error(what) {}
};

struct bad_k : error {
    explicit bad_k(const std::string& what = "k out of range") : error(what) {}
};

struct invalid_weights : error {
    explicit invalid_weights(const std::string& what = "weight vector invalid") : error(what) {}
};

struct gcd_violation : error {
    explicit gcd_violation(const std::string& what = "gcd precondition violated") : error(what) {}
};

struct class_mismatch : error {
    explicit class_mismatch(const std::string& what = "computed class does not have the expected shape") : error(what) {}
};

} // namespace m0nbar
