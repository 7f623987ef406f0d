#pragma once

#include "knaster/plmap.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace knaster::test {

/// Uniform-ish rational in [0,1] with denominator up to max_den.
inline Rat random_unit_rational(std::mt19937_64& rng, std::int64_t max_den = 1000)
{
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, d);
  return make_rat(num(rng), d);
}

/// Rational in [-range, range].
inline Rat random_rational(std::mt19937_64& rng, std::int64_t range = 20, std::int64_t max_den = 97)
{
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(-range * d, range * d);
  return make_rat(num(rng), d);
}

inline std::vector<Breakpoint> pts(std::initializer_list<std::pair<Rat, Rat>> xy)
{
  std::vector<Breakpoint> out;
  for (const auto& [x, y] : xy) out.push_back({x, y});
  return out;
}

inline Rat r(std::int64_t p, std::int64_t q = 1) { return make_rat(p, q); }

/// The worked lift for m = 3, n = 7, q = 1, i = 0, f0 = id, written out by
/// hand from the five-case formula (k = 0, a = 0, b = 1, t_l = l/7).
inline PLMap f1_star()
{
  return PLMap(pts({{r(0), r(0)},
                    {r(3, 7), r(1)},
                    {r(4, 7), r(2, 3)},
                    {r(5, 7), r(1)},
                    {r(6, 7), r(2, 3)},
                    {r(1), r(1)}}));
}

} // namespace knaster::test
