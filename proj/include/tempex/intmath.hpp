#pragma once

#include <cstdint>

namespace tempex {

// The bound formulas mix integers with square roots (k = 2*sqrt(n*q),
// budgets like ceil(6*n^3.5/q^1.5)). Evaluating them in floating point can
// round the wrong way exactly at perfect-square inputs, so the comparisons
// are done in integer arithmetic throughout.

/// Largest m >= 0 with m*m*den <= num. Requires num >= 0, den > 0.
std::int64_t floor_sqrt_ratio(std::int64_t num, std::int64_t den);

/// Smallest m >= 0 with m*m*den >= num. Requires num >= 0, den > 0.
std::int64_t ceil_sqrt_ratio(std::int64_t num, std::int64_t den);

/// ceil(a/b) for a >= 0, b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// base^exp without overflow checks beyond int64 (callers keep inputs small).
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace tempex
