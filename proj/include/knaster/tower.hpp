#pragma once

#include "knaster/plmap.hpp"
#include "knaster/seqspec.hpp"

#include <array>
#include <optional>
#include <cstdint>
#include <utility>
#include <vector>

namespace knaster {

class BudgetExceeded : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

/// Input of the single-step lift: given an onto f0, build f1 with
/// f0 o g_n = g_m o f1 that sweeps all of I exactly on [i/q, (i+1)/q],
/// stays near 0 to the left of it and near 1 to the right.
struct LiftSpec {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t q = 1;
  std::uint64_t i = 0;
  PLMap f0 = PLMap::identity();
};

/// Where the lift turns. `a` and `b` are the chosen points with f0(a) = 0
/// and f0(b) = 1, `k` the first fold index at or past i/q, and folds[l] the
/// point of [(k+l)/n, (k+l+1)/n] sent by g_n to a (l even) or b (l odd).
struct FoldData {
  std::uint64_t k = 0;
  Rat a;
  Rat b;
  std::vector<Rat> folds; ///< m + 1 points, t_0 < ... < t_m

  friend bool operator==(const FoldData&, const FoldData&) = default;
};

struct LiftResult {
  PLMap map;
  FoldData data;
};

/// Throws InvalidInput unless m, n, q >= 1, i < q and (m + 2) q <= n.
void validate(const LiftSpec& spec);

/// Fold points for given (a, b); shared by the explicit and lazy paths.
FoldData lift_folds(std::uint64_t m, std::uint64_t n, std::uint64_t q, std::uint64_t i,
                    const Rat& a, const Rat& b);

/// The explicit lift, with a and b the leftmost zero and leftmost one of f0.
/// Throws InvalidInput on a precondition violation or when f0 is not onto.
LiftResult lemma21_construct(const LiftSpec& spec);

/// Affine rule on piece p (0..m) of a lift: f1 = (alpha + sigma * f0(g_n(x))) / m.
struct PieceRule {
  std::int64_t alpha;
  int sigma;
};
PieceRule piece_rule(std::uint64_t m, std::uint64_t piece);

/// Index of the piece holding x: the number of folds t_1..t_m below x.
std::uint64_t piece_of(const std::vector<Rat>& folds, const Rat& x);

struct ConditionReport {
  /// Conditions 1..5 at indices 0..4.
  std::array<bool, 5> passed{};
  bool all() const noexcept
  {
    for (bool b : passed)
      if (!b) return false;
    return true;
  }
};

/// Checks the five lift conclusions exactly; condition 2 as PLMap equality.
ConditionReport check_conditions(const PLMap& f1, const LiftSpec& spec);

/// i[t,j] = min(floor(t j), j - 1).
std::uint64_t slot_index(const Rat& t, std::uint64_t j);

struct LevelData {
  std::uint64_t j = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t slot = 0;
  FoldData fold;

  friend bool operator==(const LevelData&, const LevelData&) = default;
};

/// The family f^t_0 = id, f^t_1, f^t_2, ... over the regrouped N and M.
///
/// Only O(m_j) rationals per level are stored; f^t_j is evaluated lazily by
/// descending through the levels. Immutable once built.
class Tower {
public:
  static Tower build(const SeqSpec& rawN, const SeqSpec& M, const Rat& t, std::size_t depth);

  /// Rebuilds from (rawN, M, t, depth) and checks that `levels` agree
  /// exactly. Throws VerificationFailure on any mismatch.
  static Tower reload(const SeqSpec& rawN, const SeqSpec& M, const Rat& t, std::size_t depth,
                      const std::vector<LevelData>& levels);

  const GroupedSeq& grouped() const noexcept { return grouped_; }
  const SeqSpec& rawN() const noexcept { return grouped_.raw(); }
  const SeqSpec& M() const noexcept { return grouped_.partner(); }
  const Rat& t() const noexcept { return t_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  /// levels()[j - 1] describes level j.
  const std::vector<LevelData>& levels() const noexcept { return levels_; }
  const LevelData& level(std::size_t j) const;

  /// f^t_j(x), exact, in O(j) rational operations.
  Rat eval_level(std::size_t j, const Rat& x) const;

  /// Exact (min, max) of f^t_j on [lo, hi], without materializing.
  std::pair<Rat, Rat> range_level(std::size_t j, const Rat& lo, const Rat& hi) const;

  /// Leftmost (or rightmost) x in [lo, hi] with f^t_j(x) = c.
  std::optional<Rat> preimage_level(std::size_t j, const Rat& c, const Rat& lo, const Rat& hi,
                                    bool leftmost = true) const;

private:
  Tower(GroupedSeq grouped, Rat t, std::vector<LevelData> levels);

  GroupedSeq grouped_;
  Rat t_;
  std::vector<LevelData> levels_;
};

/// Conditions 1, 3, 4, 5 of level j checked through the lazy evaluator;
/// condition 2 at the given sample points. Level 0 passes trivially.
ConditionReport check_level_conditions(const Tower& tower, std::size_t j,
                                       const std::vector<Rat>& samples = {});

/// f^t_{j-1}(g_{n_j}(x)) == g_{m_j}(f^t_j(x)).
bool commutes_at(const Tower& tower, std::size_t j, const Rat& x);

/// n_1 ... n_j, the lap estimate used against the materialization budget.
Int lap_estimate(const Tower& tower, std::size_t j);

/// Explicit f^t_0 .. f^t_j built with lemma21_construct from the identity.
/// The fold data found on the way must match the stored levels exactly
/// (VerificationFailure otherwise). Throws BudgetExceeded when
/// lap_estimate(j) > budget.
std::vector<PLMap> materialize_levels(const Tower& tower, std::size_t j, const Int& budget);
PLMap materialize_level(const Tower& tower, std::size_t j, const Int& budget);

/// Distinct PL maps f with g_m o f = h, at most `cap` of them, fewest laps
/// first; ties go to the lower starting value, then the lower branch at each
/// fold.
std::vector<PLMap> enumerate_lifts(const PLMap& h, std::uint64_t m, std::size_t cap);

} // namespace knaster
