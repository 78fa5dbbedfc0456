#include "tempex/intmath.hpp"

#include <cassert>
#include <cmath>

namespace tempex {

namespace {

using i128 = __int128;

bool square_times_den_leq(std::int64_t m, std::int64_t den, std::int64_t num) {
  return i128(m) * m * den <= i128(num);
}

}  // namespace

std::int64_t floor_sqrt_ratio(std::int64_t num, std::int64_t den) {
  assert(num >= 0 && den > 0);
  auto m = static_cast<std::int64_t>(
      std::sqrt(static_cast<double>(num) / static_cast<double>(den)));
  while (m > 0 && !square_times_den_leq(m, den, num)) --m;
  while (square_times_den_leq(m + 1, den, num)) ++m;
  return m;
}

std::int64_t ceil_sqrt_ratio(std::int64_t num, std::int64_t den) {
  assert(num >= 0 && den > 0);
  std::int64_t m = floor_sqrt_ratio(num, den);
  if (i128(m) * m * den == i128(num)) return m;
  return m + 1;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  assert(a >= 0 && b > 0);
  return (a + b - 1) / b;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace tempex
