#pragma once

#include "knaster/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace knaster {

struct Breakpoint {
  Rat x;
  Rat y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear map [0,1] -> [0,1], stored as the affine
/// interpolation of its breakpoints.
///
/// Invariants: x strictly increasing from 0 to 1, every y in [0,1], and no
/// three consecutive breakpoints collinear. The last one makes `==` on the
/// breakpoint lists the same thing as equality of maps.
class PLMap {
public:
  /// Validates and normalizes. Throws InvalidInput on bad lists.
  explicit PLMap(std::vector<Breakpoint> breakpoints);

  static PLMap identity();

  const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t segments() const noexcept { return points_.size() - 1; }

  friend bool operator==(const PLMap&, const PLMap&) = default;

private:
  std::vector<Breakpoint> points_;
};

/// The folding wave: t - floor(t) when floor(t) is even, floor(t) + 1 - t
/// when odd. Defined on all of Q with values in [0,1].
Rat wave_eval(const Rat& t);

/// n-fold stretch and fold of [0,1], i.e. x -> wave(n x).
PLMap tent(std::uint64_t n);

/// Merges collinear interior breakpoints. Throws InvalidInput when x is not
/// strictly increasing.
std::vector<Breakpoint> normalize(std::span<const Breakpoint> points);
PLMap normalize(const PLMap& f);

Rat eval(const PLMap& f, const Rat& x);

/// outer after inner.
PLMap compose(const PLMap& outer, const PLMap& inner);

/// Number of maximal monotone pieces; constant segments never start a new piece.
std::uint64_t lap(const PLMap& f);

/// Exact (min, max) of f over [a, b].
std::pair<Rat, Rat> range_on(const PLMap& f, const Rat& a, const Rat& b);

/// Leftmost / rightmost x in [0,1] with f(x) = c, if any.
std::optional<Rat> leftmost_preimage(const PLMap& f, const Rat& c);
std::optional<Rat> rightmost_preimage(const PLMap& f, const Rat& c);

/// x -> 1 - f(x).
PLMap complement(const PLMap& f);

bool is_onto(const PLMap& f);

} // namespace knaster
