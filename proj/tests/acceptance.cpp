// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// Usage: knaster_acceptance [--cli PATH_TO_KNASTER]
// Criterion 11 drives the command-line tool and fails if --cli is missing.

#include "knaster/distinguish.hpp"
#include "knaster/json_io.hpp"
#include "knaster/natmap.hpp"
#include "knaster/svg.hpp"
#include "knaster/thread.hpp"
#include "knaster/tower.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace knaster;
namespace fs = std::filesystem;
using io::json;

namespace {

// Pinned limits, seconds.
constexpr double semigroup_limit = 1.0;
constexpr double lift_grid_limit = 30.0;
constexpr double tower_suite_limit = 60.0;
constexpr double separation_limit = 120.0;
constexpr double eval_point_limit = 0.100;
constexpr double deep_build_limit = 10.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rat r(std::int64_t p, std::int64_t q = 1) { return make_rat(p, q); }

Rat random_unit(std::mt19937_64& rng, std::int64_t max_den = 100000)
{
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, d);
  return make_rat(num(rng), d);
}

PLMap f1_star()
{
  return PLMap({{r(0), r(0)}, {r(3, 7), r(1)}, {r(4, 7), r(2, 3)}, {r(5, 7), r(1)}, {r(6, 7), r(2, 3)}, {r(1), r(1)}});
}

const SeqSpec two = SeqSpec::constant(2);

/// Collects failure notes; a criterion passes when none were recorded.
struct Outcome {
  std::vector<std::string> notes;
  std::string summary;

  void require(bool ok, const std::string& what)
  {
    if (!ok && notes.size() < 8) notes.push_back(what);
    if (!ok) ++failures;
  }
  std::size_t failures = 0;
};

std::string fmt(const char* f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ------------------------------------------------------------------ 1

void semigroup_suite(Outcome& o)
{
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (std::uint64_t m = 2; m <= 12; ++m)
    for (std::uint64_t n = 2; n <= 12; ++n) {
      const PLMap mn = compose(tent(m), tent(n));
      o.require(mn == tent(m * n), "g_m o g_n != g_mn at m=" + std::to_string(m) + " n=" + std::to_string(n));
      o.require(mn == compose(tent(n), tent(m)), "no commutation at m=" + std::to_string(m) + " n=" + std::to_string(n));
      ++pairs;
    }
  const double dt = seconds_since(t0);
  o.require(dt < semigroup_limit, "runtime " + fmt("%.3f", dt) + " s");
  o.summary = std::to_string(pairs) + " pairs, " + fmt("%.3f", dt) + " s";
}

// ------------------------------------------------------------------ 2

void lift_grid(Outcome& o)
{
  const auto t0 = Clock::now();
  const std::vector<std::pair<PLMap, std::string>> bases = {
      {PLMap::identity(), "id"}, {tent(2), "tent(2)"}, {f1_star(), "f1*"}};
  std::size_t count = 0;
  for (const auto& [f0, name] : bases)
    for (std::uint64_t m = 1; m <= 6; ++m)
      for (std::uint64_t q = 1; q <= 4; ++q)
        for (std::uint64_t i = 0; i < q; ++i)
          for (std::uint64_t n = (m + 2) * q; n <= 60; ++n) {
            const LiftSpec spec{m, n, q, i, f0};
            const ConditionReport rep = check_conditions(lemma21_construct(spec).map, spec);
            o.require(rep.all(), "conditions fail at f0=" + name + " m=" + std::to_string(m) + " n=" +
                                     std::to_string(n) + " q=" + std::to_string(q) + " i=" + std::to_string(i));
            ++count;
          }
  const double dt = seconds_since(t0);
  o.require(dt < lift_grid_limit, "runtime " + fmt("%.1f", dt) + " s");
  o.summary = std::to_string(count) + " lifts, " + std::to_string(o.failures) + " failures, " + fmt("%.1f", dt) + " s";
}

// ------------------------------------------------------------------ 3

void worked_example(Outcome& o)
{
  const PLMap f1 = lemma21_construct({3, 7, 1, 0, PLMap::identity()}).map;
  o.require(f1 == f1_star(), "lift differs from the 6-breakpoint map");
  o.require(f1.size() == 6, "breakpoint count " + std::to_string(f1.size()));
  o.require(compose(tent(3), f1) == tent(7), "g_3 o f1 != g_7");
  o.summary = "f1 has " + std::to_string(f1.size()) + " breakpoints, g_3 o f1 = g_7";
}

// ------------------------------------------------------------------ 4

const std::vector<Rat>& tower_params()
{
  static const std::vector<Rat> ts = {r(0), r(1, 3), r(1, 2), r(1)};
  return ts;
}

void tower_suite(Outcome& o)
{
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  const std::vector<std::uint64_t> desk = {8, 16, 16, 32, 32, 32, 32};
  for (const Rat& t : tower_params()) {
    const std::string tag = "t=" + to_string(t);
    const Tower tw = Tower::build(two, two, t, 7);
    for (std::size_t j = 1; j <= 7; ++j) o.require(tw.level(j).n == desk[j - 1], tag + " regrouped n_" + std::to_string(j));

    // (a) exact squares through level 4
    const auto maps = materialize_levels(tw, 4, Int(65536));
    for (std::size_t j = 1; j <= 4; ++j) {
      const LevelData& L = tw.level(j);
      o.require(compose(maps[j - 1], tent(L.n)) == compose(tent(L.m), maps[j]),
                tag + " square fails at j=" + std::to_string(j));
      o.require(lap(maps[j]) <= 65536, tag + " lap too large at j=" + std::to_string(j));
    }
    // (b) pointwise squares at deeper levels
    for (std::size_t j = 5; j <= 7; ++j)
      for (int k = 0; k < 100; ++k) {
        const Rat x = random_unit(rng);
        o.require(commutes_at(tw, j, x), tag + " pointwise square fails at j=" + std::to_string(j) + " x=" + to_string(x));
      }
    // (c) conditions 1, 3, 4, 5 at every level
    for (std::size_t j = 0; j <= 7; ++j) {
      const ConditionReport rep = check_level_conditions(tw, j);
      for (std::size_t c : {0u, 2u, 3u, 4u})
        o.require(rep.passed[c], tag + " condition " + std::to_string(c + 1) + " fails at j=" + std::to_string(j));
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < tower_suite_limit, "runtime " + fmt("%.1f", dt) + " s");
  o.summary = "4 towers to depth 7, " + fmt("%.1f", dt) + " s";
}

// ------------------------------------------------------------------ 5

void separation_suite(Outcome& o)
{
  const auto t0 = Clock::now();
  std::vector<Rat> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(r(k, 8));
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      const Rat& t = grid[a];
      const Rat& s = grid[b];
      if (s - t < r(1, 8)) continue;
      const std::string tag = "(" + to_string(t) + ", " + to_string(s) + ")";
      try {
        const Certificate c = make_certificate(two, two, t, s, 4);
        o.require(c.vs == 0, tag + " vs != 0");
        o.require(c.vt >= r(1, 2), tag + " vt < 1/2");
        o.require(verify_certificate(c, two, two), tag + " verify failed");
        if (t == 0 && s == r(1, 2)) {
          o.require(c.j == 7 && c.q == 3 && c.witness == r(3, 16) && c.p == 64,
                    "(0, 1/2) gave j=" + std::to_string(c.j) + " q=" + c.q.get_str() + " witness=" +
                        to_string(c.witness) + " p=" + c.p.get_str());
        }
      } catch (const std::exception& e) {
        o.require(false, tag + " threw: " + e.what());
      }
      ++pairs;
    }
  const double dt = seconds_since(t0);
  o.require(dt < separation_limit, "runtime " + fmt("%.1f", dt) + " s");
  o.summary = std::to_string(pairs) + " pairs certified and verified, " + fmt("%.1f", dt) + " s";
}

// ------------------------------------------------------------------ 6

Thread random_thread(std::mt19937_64& rng, const SeqSpec& seq, std::size_t depth)
{
  Thread x{seq, {random_unit(rng, 1000)}};
  for (std::size_t k = 1; k <= depth; ++k) {
    auto next = extend(x);
    std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
    x = std::move(next[pick(rng)]);
  }
  return x;
}

void thread_suite(Outcome& o)
{
  std::mt19937_64 rng(606);
  std::size_t towers = 0, natmaps = 0, images = 0;

  // towers over the desk configuration and one with non-constant sequences
  const std::vector<std::pair<SeqSpec, SeqSpec>> configs = {
      {two, two}, {SeqSpec::constant(3), SeqSpec::constant(3)}, {SeqSpec::periodic({5}, {2, 3}), SeqSpec::periodic({}, {3, 2})}};
  for (const auto& [N, M] : configs)
    for (const Rat& t : {r(0), r(1, 8), r(1, 3), r(1, 2), r(5, 7), r(1)}) {
      const Tower tw = Tower::build(N, M, t, 6);
      const SeqSpec grouped = tw.grouped().as_list(6);
      const Thread img = apply_tower(tw, endpoint(grouped, 6));
      o.require(img == endpoint(M, 6), "endpoint not fixed by tower t=" + to_string(t));
      ++towers;
    }
  const Tower desk = Tower::build(two, two, r(1, 3), 6);
  const SeqSpec grouped = desk.grouped().as_list(6);
  for (int k = 0; k < 50; ++k) {
    const Thread x = random_thread(rng, grouped, 6);
    o.require(!validate(x).has_value(), "random thread is inconsistent");
    const Thread y = apply_tower(desk, x);
    o.require(!validate(y).has_value(), "tower image of a thread does not validate");
    ++images;
  }

  // every compatible natural map over a few sequence pairs
  const std::vector<SeqSpec> seqs = {two, SeqSpec::constant(3), SeqSpec::constant(6)};
  for (const auto& N : seqs)
    for (const auto& M : seqs)
      for (const auto& spec : enumerate(N, M, 12, 3, 8, 4)) {
        const Thread img = apply_natmap(spec, endpoint(N, spec.jseq.back()));
        o.require(img == endpoint(M, spec.depth()), "endpoint not fixed by a natural map");
        const Thread x = random_thread(rng, N, spec.jseq.back());
        o.require(!validate(apply_natmap(spec, x)).has_value(), "natural-map image does not validate");
        ++natmaps;
      }
  o.summary = std::to_string(towers) + " towers, " + std::to_string(natmaps) + " natural maps, " +
              std::to_string(images) + " random thread images";
}

// ------------------------------------------------------------------ 7

std::optional<std::size_t> divisibility_oracle(std::uint64_t i0, const std::vector<std::size_t>& jseq,
                                               const SeqSpec& N, const SeqSpec& M)
{
  std::map<std::uint64_t, long> e;
  const auto add = [&](std::uint64_t n, long sign) {
    for (std::uint64_t p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        e[p] += sign;
        n /= p;
      }
    if (n > 1) e[n] += sign;
  };
  add(i0, +1);
  for (std::size_t k = 1; k < jseq.size(); ++k) {
    for (std::size_t i = jseq[k - 1] + 1; i <= jseq[k]; ++i) add(N.nth(i), +1);
    add(M.nth(k), -1);
    for (const auto& [p, x] : e)
      if (x < 0) return k;
  }
  return std::nullopt;
}

void natmap_suite(Outcome& o)
{
  constexpr std::size_t jmax = 8;
  const std::vector<SeqSpec> seqs = {two, SeqSpec::constant(3), SeqSpec::constant(6)};
  std::vector<std::vector<std::size_t>> tuples[7];
  const std::function<void(std::vector<std::size_t>&)> gen = [&](std::vector<std::size_t>& cur) {
    if (cur.size() >= 2) tuples[cur.size() - 1].push_back(cur);
    if (cur.size() == 7) return;
    for (std::size_t j = cur.empty() ? 0 : cur.back() + 1; j <= jmax; ++j) {
      cur.push_back(j);
      gen(cur);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> cur;
  gen(cur);

  std::size_t checks = 0;
  for (const auto& N : seqs)
    for (const auto& M : seqs)
      for (std::size_t depth = 1; depth <= 6; ++depth)
        for (std::uint64_t i0 = 1; i0 <= 20; ++i0)
          for (const auto& js : tuples[depth]) {
            const NaturalMapSpec spec{Int(i0), js, N, M};
            o.require(is_compatible(spec, depth) == divisibility_oracle(i0, js, N, M),
                      "disagreement at N=" + N.to_string() + " M=" + M.to_string() + " i0=" + std::to_string(i0));
            ++checks;
          }
  const auto none = enumerate(two, SeqSpec::constant(3), 20, 10, 30, 6);
  o.require(none.empty(), "found a compatible spec from constant(2) to constant(3)");
  o.summary = std::to_string(checks) + " specs checked against the oracle; 2 -> 3 admits none";
}

// ------------------------------------------------------------------ 8

void lazy_vs_materialized(Outcome& o)
{
  std::mt19937_64 rng(808);
  std::size_t points = 0;
  for (const Rat& t : tower_params()) {
    const Tower tw = Tower::build(two, two, t, 4);
    const auto maps = materialize_levels(tw, 4, Int(65536));
    for (std::size_t j = 0; j <= 4; ++j)
      for (int k = 0; k < 1000; ++k) {
        const Rat x = random_unit(rng);
        o.require(tw.eval_level(j, x) == eval(maps[j], x),
                  "t=" + to_string(t) + " j=" + std::to_string(j) + " x=" + to_string(x));
        ++points;
      }
  }
  o.summary = std::to_string(points) + " exact agreements";
}

// ------------------------------------------------------------------ 9

void lift_suite(Outcome& o)
{
  std::size_t total = 0;
  for (const auto& [h, name] : std::vector<std::pair<PLMap, std::string>>{{tent(6), "tent(6)"}, {tent(7), "tent(7)"}, {f1_star(), "f1*"}})
    for (std::uint64_t m : {2u, 3u}) {
      const auto lifts = enumerate_lifts(h, m, 64);
      o.require(!lifts.empty(), "no lift of " + name);
      for (const auto& f : lifts) {
        o.require(compose(tent(m), f) == h, "bad lift of " + name + " through g_" + std::to_string(m));
        ++total;
      }
    }
  const auto six = enumerate_lifts(tent(6), 2, 10);
  o.require(std::find(six.begin(), six.end(), tent(3)) != six.end(), "tent(3) missing");
  o.require(std::find(six.begin(), six.end(), complement(tent(3))) != six.end(), "1 - tent(3) missing");
  o.summary = std::to_string(total) + " lifts checked; tent(3) and 1 - tent(3) among the first 10";
}

// ------------------------------------------------------------------ 10

void performance(Outcome& o)
{
  std::mt19937_64 rng(1010);
  double worst_build = 0, worst_eval = 0;
  std::size_t stored = 0, bound = 0;
  for (const Rat& t : tower_params()) {
    const auto t0 = Clock::now();
    const Tower tw = Tower::build(two, two, t, 100);
    worst_build = std::max(worst_build, seconds_since(t0));
    for (int k = 0; k < 25; ++k) {
      const Rat x = random_unit(rng);
      const auto t1 = Clock::now();
      const Rat v = tw.eval_level(100, x);
      worst_eval = std::max(worst_eval, seconds_since(t1));
      o.require(in_unit_interval(v), "value outside [0,1]");
    }
    // stored state: m_j + 1 folds plus a, b per level
    stored = bound = 0;
    for (const auto& L : tw.levels()) {
      stored += L.fold.folds.size() + 2;
      bound += L.m + 3;
    }
    o.require(stored <= bound, "stored rationals exceed O(sum m_j)");
  }
  o.require(worst_build < deep_build_limit, "build " + fmt("%.2f", worst_build) + " s");
  o.require(worst_eval < eval_point_limit, "eval " + fmt("%.4f", worst_eval) + " s");
  o.summary = "depth-100 build worst " + fmt("%.2f", worst_build) + " s, eval at j=100 worst " +
              fmt("%.2f", worst_eval * 1000) + " ms, " + std::to_string(stored) + " stored rationals";
}

// ------------------------------------------------------------------ 11

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cli, const std::string& args, const fs::path& dir)
{
  const std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// Tag balance and a single <svg> root; enough to catch truncated output.
bool well_formed_svg(const std::string& s)
{
  if (s.rfind("<?xml", 0) != 0) return false;
  std::vector<std::string> stack;
  std::size_t roots = 0;
  const std::regex tag(R"re(<(/?)([A-Za-z][A-Za-z0-9]*)[^>]*?(/?)>)re");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const std::string name = m[2];
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (m[3] != "/") {
      if (stack.empty() && name == "svg") ++roots;
      else if (stack.empty()) return false;
      stack.push_back(name);
    }
  }
  return stack.empty() && roots == 1;
}

std::vector<std::size_t> polyline_counts(const std::string& svg)
{
  std::vector<std::size_t> out;
  const std::regex poly(R"re(<polyline[^>]*points="([^"]*)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
    std::istringstream pts((*it)[1].str());
    std::size_t n = 0;
    for (std::string p; pts >> p;) ++n;
    out.push_back(n);
  }
  return out;
}

void cli_round_trip(Outcome& o, const std::string& cli)
{
  if (cli.empty()) {
    o.require(false, "no --cli given");
    return;
  }
  const fs::path dir = fs::temp_directory_path() / ("knaster_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const auto step = [&](const std::string& args) {
    o.require(run(cli, args, dir) == 0, "`" + args + "` failed");
  };
  step("lemma21 --m 3 --n 7 --q 1 --i 0 --f0 id --out f1.json");
  step("tower build --N const:2 --M const:2 --t 1/3 --depth 5 --out tower.json");
  step("distinguish --N const:2 --M const:2 --t 0 --s 1/2 --ell 4 --out cert.json");
  step("natmap enum --N const:6 --M const:2 --i0max 4 --j0max 2 --jmax 5 --depth 3 --out specs.json");
  {
    std::ofstream th(dir / "thread.json");
    th << io::to_json(Thread{two, {r(1), r(1, 2), r(1, 4)}}).dump(2) << '\n';
  }
  step("thread extend --thread thread.json --out threads.json");
  step("lifts --h tent:7 --m 3 --cap 3 --out lifts.json");
  step("plot --lifts lifts.json --grid 7 --out fig.svg");
  step("plot --lifts lifts.json --grid 7 --out fig2.svg");
  if (o.failures > 0) return;

  // Parse then serialize must reproduce the written bytes.
  const auto same_bytes = [&](const char* file, const json& j) {
    o.require(slurp(dir / file) == j.dump(2) + "\n", std::string(file) + " does not round-trip");
  };
  std::size_t formats = 0;
  const json f1 = io::read_json_file(dir / "f1.json");
  o.require(io::plmap_from_json(f1) == f1_star(), "f1.json is not f1*");
  same_bytes("f1.json", io::to_json(io::plmap_from_json(f1)));
  ++formats;

  const json tower = io::read_json_file(dir / "tower.json");
  same_bytes("tower.json", io::to_json(io::tower_from_json(tower)));
  o.require(io::to_json(io::seqspec_from_json(tower["rawN"])) == tower["rawN"], "SeqSpec does not round-trip");
  formats += 2;

  json cert = io::read_json_file(dir / "cert.json");
  const Certificate c = io::certificate_from_json(cert);
  o.require(c.j == 7 && c.witness == r(3, 16), "certificate from the CLI has wrong j or witness");
  json rebuilt = io::to_json(c);
  rebuilt["N"] = io::to_json(io::seqspec_from_json(cert["N"]));
  rebuilt["M"] = io::to_json(io::seqspec_from_json(cert["M"]));
  same_bytes("cert.json", rebuilt);
  ++formats;

  const json threads = io::read_json_file(dir / "threads.json");
  json tarr = json::array();
  for (const auto& t : threads["threads"]) tarr.push_back(io::to_json(io::thread_from_json(t)));
  same_bytes("threads.json", json{{"threads", tarr}});
  ++formats;

  const json specs = io::read_json_file(dir / "specs.json");
  json sarr = json::array();
  for (const auto& s : specs["specs"]) sarr.push_back(io::to_json(io::natmap_from_json(s)));
  o.require(!sarr.empty(), "natmap enum wrote no specs");
  same_bytes("specs.json", json{{"specs", sarr}});
  ++formats;

  // The plot: valid SVG, one polyline per lift with one point per breakpoint.
  const json lifts = io::read_json_file(dir / "lifts.json");
  std::vector<std::size_t> want;
  for (const auto& f : lifts["lifts"]) {
    const PLMap g = io::plmap_from_json(f);
    o.require(compose(tent(3), g) == tent(7), "lift file holds a non-lift");
    want.push_back(g.size());
  }
  o.require(want.size() == 3, "expected three lifts");
  const std::string svg = slurp(dir / "fig.svg");
  o.require(well_formed_svg(svg), "fig.svg is not well formed");
  o.require(polyline_counts(svg) == want, "polyline point counts differ from breakpoint counts");
  o.require(svg == slurp(dir / "fig2.svg"), "plot output is not deterministic");

  fs::remove_all(dir);
  std::string counts;
  for (auto n : want) counts += (counts.empty() ? "" : "/") + std::to_string(n);
  o.summary = std::to_string(formats) + " JSON formats round-trip byte-exactly; SVG polylines " + counts + " points";
}

} // namespace

int main(int argc, char** argv)
{
  std::string cli;
  for (int k = 1; k + 1 < argc; ++k)
    if (std::string(argv[k]) == "--cli") cli = fs::absolute(argv[k + 1]).string();

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"semigroup identities", semigroup_suite},
      {"lift grid", lift_grid},
      {"worked lift example", worked_example},
      {"tower suite", tower_suite},
      {"separation certificates", separation_suite},
      {"endpoints and threads", thread_suite},
      {"natural-map compatibility", natmap_suite},
      {"lazy vs materialized", lazy_vs_materialized},
      {"lift enumeration", lift_suite},
      {"performance", performance},
      {"CLI round trip and plot", [&](Outcome& o) { cli_round_trip(o, cli); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const bool pass = o.failures == 0;
    if (!pass) ++failed;
    std::printf("%s criterion %zu (%s): %s\n", pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.summary.c_str());
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
