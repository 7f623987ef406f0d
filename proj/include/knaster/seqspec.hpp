#pragma once

#include "knaster/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knaster {

/// A bonding sequence n_1, n_2, ... of integers >= 2, indexed from 1.
class SeqSpec {
public:
  enum class Kind { constant, list, periodic };

  static SeqSpec constant(std::uint64_t n);
  static SeqSpec list(std::vector<std::uint64_t> items);
  static SeqSpec periodic(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period);

  /// Compact grammar: `const:2`, `list:2,3,5`, `periodic:8,16|32`.
  static SeqSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  /// constant: {n}; list: the items; periodic: the prefix.
  const std::vector<std::uint64_t>& head() const noexcept { return head_; }
  /// periodic only.
  const std::vector<std::uint64_t>& period() const noexcept { return period_; }

  bool is_finite() const noexcept { return kind_ == Kind::list; }
  /// Number of usable terms; only meaningful for finite lists.
  std::size_t length() const noexcept { return head_.size(); }

  /// The j-th term, j >= 1. Throws InvalidInput past the end of a list.
  std::uint64_t nth(std::size_t j) const;

  std::string to_string() const;

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;

private:
  SeqSpec(Kind kind, std::vector<std::uint64_t> head, std::vector<std::uint64_t> period);

  Kind kind_;
  std::vector<std::uint64_t> head_;
  std::vector<std::uint64_t> period_;
};

/// Product of the first j terms (1 for j = 0).
Int prefix_product(const SeqSpec& seq, std::size_t j);

/// Product of terms first..last inclusive (1 when first > last).
Int range_product(const SeqSpec& seq, std::size_t first, std::size_t last);

struct Block {
  std::size_t first; ///< raw index of the first factor (1-based)
  std::size_t last;  ///< raw index of the last factor, inclusive
  std::uint64_t product;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Raw sequence N regrouped into consecutive blocks so that block j has
/// product > (m_j + 2) j. Blocks are the shortest runs that work, taken
/// left to right.
///
/// Extending is a mutating operation; share a GroupedSeq across threads only
/// after it has been extended far enough.
class GroupedSeq {
public:
  GroupedSeq(SeqSpec raw, SeqSpec partner);

  /// Ensures at least `levels` blocks exist. Throws InvalidInput if the raw
  /// list runs out or a product overflows 64 bits.
  void extend_to(std::size_t levels);

  const SeqSpec& raw() const noexcept { return raw_; }
  const SeqSpec& partner() const noexcept { return partner_; }
  std::size_t levels() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Grouped term n_j, 1 <= j <= levels().
  std::uint64_t n(std::size_t j) const;
  /// Partner term m_j.
  std::uint64_t m(std::size_t j) const { return partner_.nth(j); }

  /// The first `levels` grouped terms as a finite list.
  SeqSpec as_list(std::size_t levels) const;

private:
  SeqSpec raw_;
  SeqSpec partner_;
  std::vector<Block> blocks_;
};

GroupedSeq regroup(const SeqSpec& raw, const SeqSpec& partner, std::size_t levels);

} // namespace knaster
