#include "knaster/plmap.hpp"

#include <algorithm>

namespace knaster {

namespace {

int sign(const Rat& v) { return sgn(v); }

// Index s of the segment [x_s, x_{s+1}] containing x (the left one at an
// interior breakpoint).
std::size_t segment_index(const std::vector<Breakpoint>& pts, const Rat& x)
{
  auto it = std::upper_bound(pts.begin() + 1, pts.end(), x,
                             [](const Rat& v, const Breakpoint& b) { return v <= b.x; });
  if (it == pts.end()) --it;
  return static_cast<std::size_t>(it - pts.begin()) - 1;
}

Rat interpolate(const Breakpoint& p, const Breakpoint& q, const Rat& x)
{
  if (x == p.x) return p.y;
  if (x == q.x) return q.y;
  return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

} // namespace

std::vector<Breakpoint> normalize(std::span<const Breakpoint> points)
{
  if (points.size() < 2) throw InvalidInput("a PL map needs at least two breakpoints");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].x <= points[i - 1].x)
      throw InvalidInput("breakpoint x-coordinates must be strictly increasing");

  std::vector<Breakpoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      // collinear iff (b - a) x (p - b) == 0
      if ((b.y - a.y) * (p.x - b.x) != (p.y - b.y) * (b.x - a.x)) break;
      out.pop_back();
    }
    out.push_back(p);
  }
  return out;
}

PLMap::PLMap(std::vector<Breakpoint> breakpoints)
{
  if (breakpoints.size() < 2) throw InvalidInput("a PL map needs at least two breakpoints");
  if (breakpoints.front().x != 0 || breakpoints.back().x != 1)
    throw InvalidInput("PL map domain must be exactly [0,1]");
  for (const auto& b : breakpoints)
    if (!in_unit_interval(b.y)) throw InvalidInput("PL map value outside [0,1]: " + to_string(b.y));
  points_ = normalize(breakpoints);
}

PLMap PLMap::identity() { return PLMap({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}); }

PLMap normalize(const PLMap& f) { return PLMap(normalize(std::span(f.breakpoints()))); }

Rat wave_eval(const Rat& t)
{
  const Int fl = floor(t);
  if (mpz_even_p(fl.get_mpz_t())) return t - fl;
  return Rat(fl) + 1 - t;
}

PLMap tent(std::uint64_t n)
{
  if (n == 0) throw InvalidInput("tent(n) needs n >= 1");
  std::vector<Breakpoint> pts;
  pts.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k)
    pts.push_back({make_rat(Int(k), Int(n)), Rat(static_cast<long>(k % 2))});
  return PLMap(std::move(pts));
}

Rat eval(const PLMap& f, const Rat& x)
{
  if (!in_unit_interval(x)) throw InvalidInput("evaluation point outside [0,1]: " + to_string(x));
  const auto& pts = f.breakpoints();
  const std::size_t s = segment_index(pts, x);
  return interpolate(pts[s], pts[s + 1], x);
}

PLMap compose(const PLMap& outer, const PLMap& inner)
{
  const auto& op = outer.breakpoints();
  const auto& ip = inner.breakpoints();
  const auto by_x = [](const Breakpoint& b, const Rat& v) { return b.x < v; };

  std::vector<Breakpoint> out;
  out.reserve(ip.size() * 2);
  out.push_back({ip.front().x, eval(outer, ip.front().y)});

  for (std::size_t s = 0; s + 1 < ip.size(); ++s) {
    const auto& p = ip[s];
    const auto& q = ip[s + 1];
    if (p.y != q.y) {
      const Rat lo = p.y < q.y ? p.y : q.y;
      const Rat hi = p.y < q.y ? q.y : p.y;
      auto first = std::lower_bound(op.begin(), op.end(), lo, by_x);
      if (first != op.end() && first->x == lo) ++first;
      auto last = std::lower_bound(first, op.end(), hi, by_x);
      const Rat dx_dy = (q.x - p.x) / (q.y - p.y);
      const auto emit = [&](const Breakpoint& ob) {
        out.push_back({p.x + (ob.x - p.y) * dx_dy, ob.y});
      };
      if (p.y < q.y)
        std::for_each(first, last, emit);
      else
        std::for_each(std::make_reverse_iterator(last), std::make_reverse_iterator(first), emit);
    }
    out.push_back({q.x, eval(outer, q.y)});
  }
  return PLMap(std::move(out));
}

std::uint64_t lap(const PLMap& f)
{
  std::uint64_t laps = 1;
  int dir = 0;
  const auto& pts = f.breakpoints();
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const int d = sign(pts[s + 1].y - pts[s].y);
    if (d == 0) continue;
    if (dir != 0 && d != dir) ++laps;
    dir = d;
  }
  return laps;
}

std::pair<Rat, Rat> range_on(const PLMap& f, const Rat& a, const Rat& b)
{
  if (a > b) throw InvalidInput("range_on needs a <= b");
  Rat lo = eval(f, a);
  Rat hi = eval(f, b);
  if (hi < lo) std::swap(lo, hi);
  for (const auto& p : f.breakpoints()) {
    if (p.x <= a) continue;
    if (p.x >= b) break;
    if (p.y < lo) lo = p.y;
    if (p.y > hi) hi = p.y;
  }
  return {lo, hi};
}

std::optional<Rat> leftmost_preimage(const PLMap& f, const Rat& c)
{
  const auto& pts = f.breakpoints();
  if (pts.front().y == c) return pts.front().x;
  for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
    const auto& p = pts[s];
    const auto& q = pts[s + 1];
    if ((p.y < c && c <= q.y) || (q.y <= c && c < p.y))
      return q.y == c ? q.x : p.x + (c - p.y) * (q.x - p.x) / (q.y - p.y);
  }
  return std::nullopt;
}

std::optional<Rat> rightmost_preimage(const PLMap& f, const Rat& c)
{
  const auto& pts = f.breakpoints();
  if (pts.back().y == c) return pts.back().x;
  for (std::size_t s = pts.size() - 1; s > 0; --s) {
    const auto& p = pts[s - 1];
    const auto& q = pts[s];
    if ((p.y <= c && c < q.y) || (q.y < c && c <= p.y))
      return p.y == c ? p.x : p.x + (c - p.y) * (q.x - p.x) / (q.y - p.y);
  }
  return std::nullopt;
}

PLMap complement(const PLMap& f)
{
  std::vector<Breakpoint> pts;
  pts.reserve(f.size());
  for (const auto& b : f.breakpoints()) pts.push_back({b.x, 1 - b.y});
  return PLMap(std::move(pts));
}

bool is_onto(const PLMap& f)
{
  const auto [lo, hi] = range_on(f, 0, 1);
  return lo == 0 && hi == 1;
}

} // namespace knaster
