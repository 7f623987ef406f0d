#pragma once

#include "knaster/seqspec.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace knaster {

/// A naturally induced map x -> (g_{i_0}(x_{j_0}), g_{i_1}(x_{j_1}), ...)
/// between the continua of `source` (N) and `target` (M). Only i_0 is free;
/// the later indices are forced by the bonding data.
struct NaturalMapSpec {
  Int i0;
  std::vector<std::size_t> jseq;
  SeqSpec source;
  SeqSpec target;

  /// Number of levels past 0 the spec describes: jseq.size() - 1.
  std::size_t depth() const noexcept { return jseq.empty() ? 0 : jseq.size() - 1; }

  friend bool operator==(const NaturalMapSpec&, const NaturalMapSpec&) = default;
};

/// Throws InvalidInput unless i0 >= 1 and jseq is non-empty and strictly
/// increasing.
void validate(const NaturalMapSpec& spec);

/// i_k = i_0 n_{j_0+1} ... n_{j_k} / (m_1 ... m_k) for k = 1..depth, exactly.
std::vector<Rat> induced_indices(const NaturalMapSpec& spec, std::size_t depth);

/// Empty when every i_k (1 <= k <= depth) is a positive integer, otherwise
/// the least k where integrality fails.
std::optional<std::size_t> is_compatible(const NaturalMapSpec& spec, std::size_t depth);

/// All compatible specs with 1 <= i0 <= i0max, j_0 <= j0max and jseq a
/// strictly increasing (depth+1)-tuple in [0, jmax], ordered by (i0, jseq).
std::vector<NaturalMapSpec> enumerate(const SeqSpec& source, const SeqSpec& target,
                                      std::uint64_t i0max, std::size_t j0max,
                                      std::size_t jmax, std::size_t depth);

/// i_0 / (n_1 ... n_{j_0}). Two specs over the same N, M induce the same map
/// exactly when these agree: their level-0 coordinates g_{i_0}(x_{j_0}) then
/// coincide, and a natural map is determined by its level-0 coordinate.
Rat level0_key(const NaturalMapSpec& spec);
bool same_induced_map(const NaturalMapSpec& a, const NaturalMapSpec& b);

enum class PrimeSupport { possible, impossible, unknown };

/// Prime-support test on the eventual (constant or periodic) part of the
/// sequences: if some prime keeps dividing M but never divides the tail of N,
/// no natural map N -> M exists at any depth. Finite lists give `unknown`.
PrimeSupport prime_support_check(const SeqSpec& source, const SeqSpec& target);

} // namespace knaster
