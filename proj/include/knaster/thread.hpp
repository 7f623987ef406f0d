#pragma once

#include "knaster/natmap.hpp"
#include "knaster/tower.hpp"

#include <optional>
#include <vector>

namespace knaster {

/// Finite prefix (x_0, ..., x_k) of a point of the inverse limit of
/// I <-g_{n_1}- I <-g_{n_2}- ...
struct Thread {
  SeqSpec seq;
  std::vector<Rat> coords;

  std::size_t depth() const noexcept { return coords.empty() ? 0 : coords.size() - 1; }

  friend bool operator==(const Thread&, const Thread&) = default;
};

/// The all-zero thread of length k + 1.
Thread endpoint(const SeqSpec& seq, std::size_t k);

/// Projection to coordinate i.
const Rat& project(const Thread& x, std::size_t i);

/// Least i with x_{i-1} != g_{n_i}(x_i) or a coordinate outside [0,1]
/// (reported at its own index); empty when consistent.
std::optional<std::size_t> validate(const Thread& x);

/// Every one-step extension, new coordinates in increasing order.
std::vector<Thread> extend(const Thread& x);

/// y_k = g_{i_k}(x_{j_k}) for k = 0..spec.depth(), a thread over spec.target.
Thread apply_natmap(const NaturalMapSpec& spec, const Thread& x);

/// y_j = f^t_j(x_j), a thread over the tower's M. The input must be a thread
/// over the regrouped N.
Thread apply_tower(const Tower& tower, const Thread& x);

} // namespace knaster
