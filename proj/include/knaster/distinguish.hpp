#pragma once

#include "knaster/tower.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knaster {

/// Finite witness that the towers for t < s induce non-homotopic maps.
///
/// At level j the point w = 2q/n_j lies just right of t's slot, so f^t_j(w)
/// is within 1/m_j of 1, while it lies left of s's slot and f^s_j(w) is
/// exactly 0. Any homotopy between the two maps then drags the level-j
/// coordinate of a point over I, which wraps the level-0 coordinate over I
/// at least p = m_1 ... m_{j-1} times. A homotopy whose level-0 track splits
/// into ell time slices, none covering I, allows at most ell such sweeps, so
/// p > ell rules it out.
struct Certificate {
  Rat t;
  Rat s;
  std::uint64_t ell = 0;
  std::uint64_t j = 0;
  Int q;
  Rat witness;
  Rat vt;
  Rat vs;
  Int p;
  Int r;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Least j with m_1 ... m_{j-1} > ell and 3/j < s - t.
std::uint64_t pick_level(const Rat& t, const Rat& s, std::uint64_t ell, const SeqSpec& M);

/// Least q >= 1 with (slot+1)/j <= 2q/n_j <= (slot+2)/j, the upper bound
/// clamped to 1. Returns (q, 2q/n_j).
std::pair<Int, Rat> pick_q(const Rat& t, std::uint64_t j, std::uint64_t n_j);

/// Builds both towers and evaluates them at the witness. `level` forces a
/// larger admissible j. t and s are swapped if given in decreasing order.
/// Throws InvalidInput for t == s and VerificationFailure if an exact fact
/// the construction guarantees does not hold.
Certificate make_certificate(const SeqSpec& rawN, const SeqSpec& M, Rat t, Rat s,
                             std::uint64_t ell, std::optional<std::uint64_t> level = {});

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Rebuilds both towers and rechecks every certificate field and invariant.
VerifyReport verify_certificate_report(const Certificate& cert, const SeqSpec& rawN,
                                       const SeqSpec& M);
bool verify_certificate(const Certificate& cert, const SeqSpec& rawN, const SeqSpec& M);

} // namespace knaster
