#include "knaster/tower.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <span>
#include <tuple>

namespace knaster {

// ---------------------------------------------------------------------------
// Single-step lift
// ---------------------------------------------------------------------------

void validate(const LiftSpec& spec)
{
  if (spec.m < 1 || spec.n < 1 || spec.q < 1) throw InvalidInput("lift needs m, n, q >= 1");
  if (spec.i >= spec.q) throw InvalidInput("lift needs 0 <= i < q");
  if (Int(spec.m + 2) * Int(spec.q) > Int(spec.n))
    throw InvalidInput("lift needs (m + 2) q <= n");
}

FoldData lift_folds(std::uint64_t m, std::uint64_t n, std::uint64_t q, std::uint64_t i,
                    const Rat& a, const Rat& b)
{
  FoldData fd;
  fd.k = to_uint64(ceil(make_rat(Int(i) * Int(n), Int(q))));
  fd.a = a;
  fd.b = b;
  fd.folds.reserve(m + 1);
  for (std::uint64_t l = 0; l <= m; ++l) {
    const Int lap = Int(fd.k + l);
    const Rat& target = l % 2 == 0 ? a : b;
    // g_n is affine on [lap/n, (lap+1)/n]: rising on even laps, falling on odd.
    Rat t = mpz_even_p(lap.get_mpz_t()) ? Rat(lap + target) : Rat(lap + 1 - target);
    t /= Int(n);
    fd.folds.push_back(t);
  }
  return fd;
}

PieceRule piece_rule(std::uint64_t m, std::uint64_t piece)
{
  const auto mi = static_cast<std::int64_t>(m);
  const auto p = static_cast<std::int64_t>(piece);
  if (piece == m) return m % 2 == 1 ? PieceRule{mi - 1, +1} : PieceRule{mi, -1};
  if (piece == 0) return {0, +1};
  return piece % 2 == 1 ? PieceRule{p + 1, -1} : PieceRule{p, +1};
}

std::uint64_t piece_of(const std::vector<Rat>& folds, const Rat& x)
{
  // folds[0] is t_0 and never bounds a piece.
  const auto it = std::lower_bound(folds.begin() + 1, folds.end(), x);
  return static_cast<std::uint64_t>(it - (folds.begin() + 1));
}

namespace {

Rat apply_rule(const PieceRule& r, std::uint64_t m, const Rat& inner)
{
  Rat v = r.sigma > 0 ? Rat(r.alpha + inner) : Rat(r.alpha - inner);
  v /= Int(m);
  return v;
}

} // namespace

LiftResult lemma21_construct(const LiftSpec& spec)
{
  validate(spec);
  if (!is_onto(spec.f0)) throw InvalidInput("lift needs f0 onto [0,1]");
  const Rat a = *leftmost_preimage(spec.f0, 0);
  const Rat b = *leftmost_preimage(spec.f0, 1);
  FoldData fd = lift_folds(spec.m, spec.n, spec.q, spec.i, a, b);

  const PLMap h = compose(spec.f0, tent(spec.n));
  const auto& hp = h.breakpoints();

  // Breakpoints of f1: those of f0 o g_n merged with t_1..t_m.
  std::vector<Breakpoint> pts;
  pts.reserve(hp.size() + spec.m);
  std::size_t next_fold = 1;
  const auto push = [&](const Rat& x, const Rat& hx) {
    pts.push_back({x, apply_rule(piece_rule(spec.m, piece_of(fd.folds, x)), spec.m, hx)});
  };
  for (const auto& p : hp) {
    while (next_fold <= spec.m && fd.folds[next_fold] < p.x) {
      push(fd.folds[next_fold], eval(h, fd.folds[next_fold]));
      ++next_fold;
    }
    if (next_fold <= spec.m && fd.folds[next_fold] == p.x) ++next_fold;
    push(p.x, p.y);
  }
  return {PLMap(std::move(pts)), std::move(fd)};
}

ConditionReport check_conditions(const PLMap& f1, const LiftSpec& spec)
{
  validate(spec);
  ConditionReport r;
  const Rat m(Int(spec.m));
  const Rat lo = make_rat(Int(spec.i), Int(spec.q));
  const Rat hi = make_rat(Int(spec.i + 1), Int(spec.q));

  r.passed[0] = eval(spec.f0, 0) != 0 || eval(f1, 0) == 0;
  r.passed[1] = compose(spec.f0, tent(spec.n)) == compose(tent(spec.m), f1);
  const auto [l3, h3] = range_on(f1, 0, lo);
  r.passed[2] = l3 >= 0 && h3 <= 1 / m;
  const auto [l4, h4] = range_on(f1, lo, hi);
  r.passed[3] = l4 == 0 && h4 == 1;
  const auto [l5, h5] = range_on(f1, hi, 1);
  r.passed[4] = l5 >= (m - 1) / m && h5 <= 1;
  return r;
}

std::uint64_t slot_index(const Rat& t, std::uint64_t j)
{
  if (!in_unit_interval(t)) throw InvalidInput("t must lie in [0,1]");
  if (j == 0) throw InvalidInput("slot index needs j >= 1");
  const Int s = floor(t * Int(j));
  return std::min(to_uint64(s), j - 1);
}

// ---------------------------------------------------------------------------
// Lazy evaluation over stored levels
// ---------------------------------------------------------------------------

namespace {

Rat lap_start(std::uint64_t lap, std::uint64_t n) { return make_rat(Int(lap), Int(n)); }

std::uint64_t first_lap(const Rat& x, std::uint64_t n)
{
  if (x == 1) return n - 1;
  return to_uint64(floor(x * Int(n)));
}

std::uint64_t last_lap(const Rat& x, std::uint64_t n)
{
  if (x == 0) return 0;
  return to_uint64(ceil(x * Int(n))) - 1;
}

/// Walks the pieces and g_n-laps of level j that meet [lo, hi], in either
/// direction, handing each (lap, sub-interval, rule) to `visit`. Stops when
/// `visit` returns true.
template <class Visit>
void for_each_lap(const LevelData& L, const Rat& lo, const Rat& hi, bool forward, Visit&& visit)
{
  const std::uint64_t m = L.m;
  for (std::uint64_t step = 0; step <= m; ++step) {
    const std::uint64_t p = forward ? step : m - step;
    const Rat& p0 = p == 0 ? Rat(0) : L.fold.folds[p];
    const Rat& p1 = p == m ? Rat(1) : L.fold.folds[p + 1];
    const Rat A = std::max(p0, lo);
    const Rat B = std::min(p1, hi);
    if (A > B) continue;
    const PieceRule rule = piece_rule(m, p);
    const std::uint64_t la = first_lap(A, L.n);
    const std::uint64_t lb = std::max(la, last_lap(B, L.n));
    for (std::uint64_t s = 0; s <= lb - la; ++s) {
      const std::uint64_t lap = forward ? la + s : lb - s;
      const Rat X0 = std::max(lap_start(lap, L.n), A);
      const Rat X1 = std::min(lap_start(lap + 1, L.n), B);
      if (X0 > X1) continue;
      if (visit(rule, lap, X0, X1)) return;
    }
  }
}

class LazyLevels {
public:
  explicit LazyLevels(std::span<const LevelData> levels) : levels_(levels) {}

  Rat eval(std::size_t j, Rat x) const
  {
    std::vector<std::pair<PieceRule, std::uint64_t>> rules;
    rules.reserve(j);
    for (std::size_t l = j; l >= 1; --l) {
      const LevelData& L = levels_[l - 1];
      rules.emplace_back(piece_rule(L.m, piece_of(L.fold.folds, x)), L.m);
      x = wave_eval(x * Int(L.n));
    }
    // x is f_0's argument and f_0 is the identity; climb back up.
    for (auto it = rules.rbegin(); it != rules.rend(); ++it)
      x = apply_rule(it->first, it->second, x);
    return x;
  }

  std::pair<Rat, Rat> range(std::size_t j, const Rat& lo, const Rat& hi)
  {
    if (j == 0) return {lo, hi};
    const auto key = std::make_tuple(j, lo, hi);
    if (auto it = range_memo_.find(key); it != range_memo_.end()) return it->second;

    const LevelData& L = levels_[j - 1];
    std::optional<std::pair<Rat, Rat>> acc;
    for_each_lap(L, lo, hi, true, [&](const PieceRule& rule, std::uint64_t, const Rat& X0,
                                      const Rat& X1) {
      Rat u0 = wave_eval(X0 * Int(L.n));
      Rat u1 = wave_eval(X1 * Int(L.n));
      if (u1 < u0) std::swap(u0, u1);
      const auto [vmin, vmax] = range(j - 1, u0, u1);
      Rat a = apply_rule(rule, L.m, vmin);
      Rat b = apply_rule(rule, L.m, vmax);
      if (b < a) std::swap(a, b);
      if (!acc) {
        acc.emplace(a, b);
      } else {
        if (a < acc->first) acc->first = a;
        if (b > acc->second) acc->second = b;
      }
      return acc->first == 0 && acc->second == 1;
    });
    range_memo_.emplace(key, *acc);
    return *acc;
  }

  std::optional<Rat> preimage(std::size_t j, const Rat& c, const Rat& lo, const Rat& hi,
                              bool leftmost)
  {
    if (lo > hi) return std::nullopt;
    if (j == 0) {
      if (lo <= c && c <= hi) return c;
      return std::nullopt;
    }
    const auto key = std::make_tuple(j, c, lo, hi, leftmost);
    if (auto it = search_memo_.find(key); it != search_memo_.end()) return it->second;

    const LevelData& L = levels_[j - 1];
    std::optional<Rat> found;
    for_each_lap(L, lo, hi, leftmost, [&](const PieceRule& rule, std::uint64_t lap,
                                          const Rat& X0, const Rat& X1) {
      // (alpha + sigma v) / m = c  <=>  v = sigma (m c - alpha)
      Rat inner = c * Int(L.m) - rule.alpha;
      if (rule.sigma < 0) inner = -inner;
      if (!in_unit_interval(inner)) return false;
      const bool rising = lap % 2 == 0;
      Rat u0 = wave_eval(X0 * Int(L.n));
      Rat u1 = wave_eval(X1 * Int(L.n));
      if (u1 < u0) std::swap(u0, u1);
      const auto u = preimage(j - 1, inner, u0, u1, rising ? leftmost : !leftmost);
      if (!u) return false;
      Rat x = rising ? Rat(Int(lap) + *u) : Rat(Int(lap + 1) - *u);
      x /= Int(L.n);
      found = x;
      return true;
    });
    search_memo_.emplace(key, found);
    return found;
  }

private:
  std::span<const LevelData> levels_;
  std::map<std::tuple<std::size_t, Rat, Rat>, std::pair<Rat, Rat>> range_memo_;
  std::map<std::tuple<std::size_t, Rat, Rat, Rat, bool>, std::optional<Rat>> search_memo_;
};

} // namespace

// ---------------------------------------------------------------------------
// Tower
// ---------------------------------------------------------------------------

Tower::Tower(GroupedSeq grouped, Rat t, std::vector<LevelData> levels)
    : grouped_(std::move(grouped)), t_(std::move(t)), levels_(std::move(levels))
{
}

Tower Tower::build(const SeqSpec& rawN, const SeqSpec& M, const Rat& t, std::size_t depth)
{
  if (!in_unit_interval(t)) throw InvalidInput("t must lie in [0,1]");
  GroupedSeq grouped = regroup(rawN, M, depth);

  std::vector<LevelData> levels;
  levels.reserve(depth);
  for (std::uint64_t j = 1; j <= depth; ++j) {
    const std::uint64_t n = grouped.n(j);
    const std::uint64_t m = grouped.m(j);
    if (Int(m + 2) * Int(j) >= Int(n))
      throw VerificationFailure("regrouped term n_" + std::to_string(j) + " too small");

    LazyLevels below(levels);
    const auto [lo, hi] = below.range(j - 1, 0, 1);
    if (lo != 0 || hi != 1)
      throw VerificationFailure("level " + std::to_string(j - 1) + " is not onto");
    const auto a = below.preimage(j - 1, 0, 0, 1, true);
    const auto b = below.preimage(j - 1, 1, 0, 1, true);

    const std::uint64_t slot = slot_index(t, j);
    levels.push_back({j, n, m, slot, lift_folds(m, n, j, slot, *a, *b)});
  }
  return Tower(std::move(grouped), t, std::move(levels));
}

Tower Tower::reload(const SeqSpec& rawN, const SeqSpec& M, const Rat& t, std::size_t depth,
                    const std::vector<LevelData>& levels)
{
  if (levels.size() != depth)
    throw VerificationFailure("tower lists " + std::to_string(levels.size()) +
                              " levels but declares depth " + std::to_string(depth));
  Tower tower = build(rawN, M, t, depth);
  for (std::size_t j = 1; j <= depth; ++j) {
    const LevelData& L = levels[j - 1];
    // Direct invariants first, so a bad file gets a precise message.
    if (L.j != j || L.fold.folds.size() != L.m + 1)
      throw VerificationFailure("level " + std::to_string(j) + " is malformed");
    if (Rat(Int(L.fold.k)) * Int(j) < Rat(Int(L.slot)) * Int(L.n) ||
        (L.fold.k > 0 && Rat(Int(L.fold.k - 1)) * Int(j) >= Rat(Int(L.slot)) * Int(L.n)))
      throw VerificationFailure("level " + std::to_string(j) + ": k is not the least fold index");
    for (std::uint64_t l = 0; l <= L.m; ++l) {
      const Rat& tl = L.fold.folds[l];
      const Rat left = make_rat(Int(L.fold.k + l), Int(L.n));
      const Rat right = make_rat(Int(L.fold.k + l + 1), Int(L.n));
      const Rat& target = l % 2 == 0 ? L.fold.a : L.fold.b;
      if (tl < left || tl > right || wave_eval(tl * Int(L.n)) != target)
        throw VerificationFailure("level " + std::to_string(j) + ": fold " + std::to_string(l) +
                                  " misplaced");
    }
    if (tower.eval_level(j - 1, L.fold.a) != 0 || tower.eval_level(j - 1, L.fold.b) != 1)
      throw VerificationFailure("level " + std::to_string(j) + ": a or b is not a preimage");
    if (!(L == tower.level(j)))
      throw VerificationFailure("level " + std::to_string(j) + " differs from the rebuilt tower");
  }
  return tower;
}

const LevelData& Tower::level(std::size_t j) const
{
  if (j == 0 || j > levels_.size())
    throw InvalidInput("tower level " + std::to_string(j) + " not built (depth " +
                       std::to_string(levels_.size()) + ")");
  return levels_[j - 1];
}

Rat Tower::eval_level(std::size_t j, const Rat& x) const
{
  if (j > levels_.size()) level(j);
  if (!in_unit_interval(x)) throw InvalidInput("evaluation point outside [0,1]: " + to_string(x));
  return LazyLevels(levels_).eval(j, x);
}

std::pair<Rat, Rat> Tower::range_level(std::size_t j, const Rat& lo, const Rat& hi) const
{
  if (j > levels_.size()) level(j);
  if (lo > hi || lo < 0 || hi > 1) throw InvalidInput("range needs 0 <= lo <= hi <= 1");
  return LazyLevels(levels_).range(j, lo, hi);
}

std::optional<Rat> Tower::preimage_level(std::size_t j, const Rat& c, const Rat& lo,
                                         const Rat& hi, bool leftmost) const
{
  if (j > levels_.size()) level(j);
  if (lo > hi || lo < 0 || hi > 1) throw InvalidInput("search needs 0 <= lo <= hi <= 1");
  return LazyLevels(levels_).preimage(j, c, lo, hi, leftmost);
}

bool commutes_at(const Tower& tower, std::size_t j, const Rat& x)
{
  const LevelData& L = tower.level(j);
  const Rat lhs = tower.eval_level(j - 1, wave_eval(x * Int(L.n)));
  const Rat rhs = wave_eval(tower.eval_level(j, x) * Int(L.m));
  return lhs == rhs;
}

ConditionReport check_level_conditions(const Tower& tower, std::size_t j,
                                       const std::vector<Rat>& samples)
{
  ConditionReport r;
  if (j == 0) {
    r.passed.fill(true);
    return r;
  }
  const LevelData& L = tower.level(j);
  const Rat m(Int(L.m));
  const Rat lo = make_rat(Int(L.slot), Int(j));
  const Rat hi = make_rat(Int(L.slot + 1), Int(j));

  r.passed[0] = tower.eval_level(j, 0) == 0;
  r.passed[1] = std::all_of(samples.begin(), samples.end(),
                            [&](const Rat& x) { return commutes_at(tower, j, x); });
  const auto [l3, h3] = tower.range_level(j, 0, lo);
  r.passed[2] = l3 >= 0 && h3 <= 1 / m;
  const auto [l4, h4] = tower.range_level(j, lo, hi);
  r.passed[3] = l4 == 0 && h4 == 1;
  const auto [l5, h5] = tower.range_level(j, hi, 1);
  r.passed[4] = l5 >= (m - 1) / m && h5 <= 1;
  return r;
}

Int lap_estimate(const Tower& tower, std::size_t j)
{
  Int p = 1;
  for (std::size_t l = 1; l <= j; ++l) p *= Int(tower.level(l).n);
  return p;
}

std::vector<PLMap> materialize_levels(const Tower& tower, std::size_t j, const Int& budget)
{
  const Int estimate = lap_estimate(tower, j);
  if (estimate > budget)
    throw BudgetExceeded("materializing level " + std::to_string(j) + " needs ~" +
                         estimate.get_str() + " laps, budget is " + budget.get_str());
  std::vector<PLMap> maps{PLMap::identity()};
  maps.reserve(j + 1);
  for (std::size_t l = 1; l <= j; ++l) {
    const LevelData& L = tower.level(l);
    LiftResult r = lemma21_construct({L.m, L.n, l, L.slot, maps.back()});
    if (!(r.data == L.fold))
      throw VerificationFailure("explicit lift at level " + std::to_string(l) +
                                " disagrees with the lazy fold data");
    maps.push_back(std::move(r.map));
  }
  return maps;
}

PLMap materialize_level(const Tower& tower, std::size_t j, const Int& budget)
{
  return std::move(materialize_levels(tower, j, budget).back());
}

// ---------------------------------------------------------------------------
// Lifts through g_m
// ---------------------------------------------------------------------------

std::vector<PLMap> enumerate_lifts(const PLMap& h, std::uint64_t m, std::size_t cap)
{
  if (m == 0) throw InvalidInput("lifts need m >= 1");
  const auto& hp = h.breakpoints();
  const Int mi(m);

  // Point of lap `lap` that g_m sends to y.
  const auto on_lap = [&](std::uint64_t lap, const Rat& y) {
    Rat v = lap % 2 == 0 ? Rat(Int(lap) + y) : Rat(Int(lap + 1) - y);
    v /= mi;
    return v;
  };
  // Laps whose closure holds v, lowest first.
  const auto laps_at = [&](const Rat& v) {
    std::vector<std::uint64_t> laps;
    const Rat mv = v * mi;
    if (is_integer(mv)) {
      const std::uint64_t f = to_uint64(mv.get_num());
      if (f > 0) laps.push_back(f - 1);
      if (f < m) laps.push_back(f);
    } else {
      laps.push_back(to_uint64(floor(mv)));
    }
    return laps;
  };

  // Best-first over partial lifts keyed by (lap number so far, values). The
  // lap count never drops along an extension and a prefix sorts before its
  // extensions, so complete lifts come out in (lap, lexicographic) order.
  struct Partial {
    std::uint64_t laps;
    int dir; // sign of the last non-constant segment, 0 if none yet
    std::vector<Rat> values;
  };
  const auto later = [](const Partial& a, const Partial& b) {
    if (a.laps != b.laps) return a.laps > b.laps;
    return b.values < a.values;
  };
  std::priority_queue<Partial, std::vector<Partial>, decltype(later)> open(later);

  std::vector<Rat> starts;
  for (std::uint64_t lap = 0; lap < m; ++lap) starts.push_back(on_lap(lap, hp.front().y));
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  for (const Rat& v0 : starts) open.push({1, 0, {v0}});

  std::vector<PLMap> out;
  while (!open.empty() && out.size() < cap) {
    Partial cur = open.top();
    open.pop();
    const std::size_t s = cur.values.size() - 1;
    if (s + 1 == hp.size()) {
      std::vector<Breakpoint> pts;
      pts.reserve(hp.size());
      for (std::size_t i = 0; i < hp.size(); ++i) pts.push_back({hp[i].x, cur.values[i]});
      PLMap f(std::move(pts));
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
      continue;
    }
    for (std::uint64_t lap : laps_at(cur.values[s])) {
      Partial next = cur;
      next.values.push_back(on_lap(lap, hp[s + 1].y));
      const int d = sgn(next.values[s + 1] - next.values[s]);
      if (d != 0) {
        if (next.dir != 0 && d != next.dir) ++next.laps;
        next.dir = d;
      }
      open.push(std::move(next));
    }
  }
  return out;
}

} // namespace knaster
