#include "knaster/thread.hpp"

#include <algorithm>

namespace knaster {

Thread endpoint(const SeqSpec& seq, std::size_t k)
{
  return Thread{seq, std::vector<Rat>(k + 1, Rat(0))};
}

const Rat& project(const Thread& x, std::size_t i)
{
  if (i >= x.coords.size()) throw InvalidInput("thread has no coordinate " + std::to_string(i));
  return x.coords[i];
}

std::optional<std::size_t> validate(const Thread& x)
{
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (!in_unit_interval(x.coords[i])) return i;
    if (i > 0 && wave_eval(x.coords[i] * Int(x.seq.nth(i))) != x.coords[i - 1]) return i;
  }
  return std::nullopt;
}

std::vector<Thread> extend(const Thread& x)
{
  if (x.coords.empty()) throw InvalidInput("cannot extend an empty thread");
  const std::uint64_t n = x.seq.nth(x.coords.size());
  const Rat& last = x.coords.back();

  std::vector<Rat> pre;
  pre.reserve(n);
  for (std::uint64_t lap = 0; lap < n; ++lap) {
    Rat v = lap % 2 == 0 ? Rat(Int(lap) + last) : Rat(Int(lap + 1) - last);
    v /= Int(n);
    pre.push_back(v);
  }
  std::sort(pre.begin(), pre.end());
  pre.erase(std::unique(pre.begin(), pre.end()), pre.end());

  std::vector<Thread> out;
  out.reserve(pre.size());
  for (auto& v : pre) {
    Thread t = x;
    t.coords.push_back(std::move(v));
    out.push_back(std::move(t));
  }
  return out;
}

Thread apply_natmap(const NaturalMapSpec& spec, const Thread& x)
{
  const std::size_t depth = spec.depth();
  if (auto k = is_compatible(spec, depth))
    throw InvalidInput("natural map spec is incompatible at k = " + std::to_string(*k));
  if (spec.jseq.back() >= x.coords.size())
    throw InvalidInput("thread too short: need coordinate " + std::to_string(spec.jseq.back()));
  if (!(x.seq == spec.source)) throw InvalidInput("thread is not over the map's source sequence");

  const auto indices = induced_indices(spec, depth);
  Thread y{spec.target, {}};
  y.coords.reserve(depth + 1);
  for (std::size_t k = 0; k <= depth; ++k) {
    const Int i = k == 0 ? spec.i0 : indices[k - 1].get_num();
    y.coords.push_back(wave_eval(x.coords[spec.jseq[k]] * i));
  }
  return y;
}

Thread apply_tower(const Tower& tower, const Thread& x)
{
  if (x.depth() > tower.depth())
    throw InvalidInput("thread depth " + std::to_string(x.depth()) + " exceeds tower depth " +
                       std::to_string(tower.depth()));
  for (std::size_t j = 1; j <= x.depth(); ++j)
    if (x.seq.nth(j) != tower.grouped().n(j))
      throw InvalidInput("thread is not over the tower's regrouped sequence");

  Thread y{tower.M(), {}};
  y.coords.reserve(x.coords.size());
  for (std::size_t j = 0; j < x.coords.size(); ++j) y.coords.push_back(tower.eval_level(j, x.coords[j]));
  return y;
}

} // namespace knaster
