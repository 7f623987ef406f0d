// Command-line front end for the knaster library.
//
// Exit codes: 0 success, 1 a verification or exact check failed, 2 invalid input.

#include "knaster/distinguish.hpp"
#include "knaster/json_io.hpp"
#include "knaster/natmap.hpp"
#include "knaster/svg.hpp"
#include "knaster/thread.hpp"
#include "knaster/tower.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

using namespace knaster;
using io::json;

namespace {

constexpr int ok_code = 0;
constexpr int fail_code = 1;
constexpr int invalid_code = 2;

Int lap_budget()
{
  const char* env = std::getenv("KNASTER_LAP_BUDGET");
  if (env == nullptr || *env == '\0') return Int(1000000);
  const Int b = parse_int(env);
  if (b < 1) throw InvalidInput("KNASTER_LAP_BUDGET must be positive");
  return b;
}

/// "id", "tent:N" or a PLMap JSON file.
PLMap map_arg(const std::string& s)
{
  if (s == "id") return PLMap::identity();
  if (s.rfind("tent:", 0) == 0) return tent(to_uint64(parse_int(s.substr(5))));
  return io::plmap_from_json(io::read_json_file(s));
}

std::vector<std::size_t> index_list(const std::string& s)
{
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    out.push_back(to_uint64(parse_int(s.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return out;
}

void print_map(const PLMap& f)
{
  for (const auto& b : f.breakpoints()) std::cout << "  (" << to_string(b.x) << ", " << to_string(b.y) << ")\n";
}

void write_or_print(const std::string& out, const json& j)
{
  if (out.empty()) std::cout << j.dump(2) << '\n';
  else io::write_json_file(out, j);
}

void write_text(const std::string& path, const std::string& text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
  if (!f) throw InvalidInput("write failed: " + path);
}

json lifts_json(const std::vector<PLMap>& maps)
{
  json arr = json::array();
  for (const auto& f : maps) arr.push_back(io::to_json(f));
  return {{"lifts", arr}};
}

// ---------------------------------------------------------------- commands

int cmd_semigroup(std::uint64_t maxn)
{
  if (maxn < 2) throw InvalidInput("--maxn must be >= 2");
  std::size_t bad = 0, pairs = 0;
  std::printf("%4s %4s  %-9s %-9s\n", "m", "n", "g_m.g_n", "commutes");
  for (std::uint64_t m = 2; m <= maxn; ++m)
    for (std::uint64_t n = 2; n <= maxn; ++n) {
      const PLMap mn = compose(tent(m), tent(n));
      const bool prod = mn == tent(m * n);
      const bool comm = mn == compose(tent(n), tent(m));
      std::printf("%4llu %4llu  %-9s %-9s\n", static_cast<unsigned long long>(m),
                  static_cast<unsigned long long>(n), prod ? "ok" : "FAIL", comm ? "ok" : "FAIL");
      ++pairs;
      if (!prod || !comm) ++bad;
    }
  std::printf("%zu pairs, %zu failures\n", pairs, bad);
  return bad == 0 ? ok_code : fail_code;
}

int cmd_lemma21(const LiftSpec& spec, const std::string& out)
{
  const LiftResult res = lemma21_construct(spec);
  const ConditionReport rep = check_conditions(res.map, spec);
  std::cout << "lift: k=" << res.data.k << " a=" << to_string(res.data.a)
            << " b=" << to_string(res.data.b) << " laps=" << lap(res.map) << '\n';
  print_map(res.map);
  for (std::size_t c = 0; c < 5; ++c)
    std::cout << "condition " << c + 1 << ": " << (rep.passed[c] ? "ok" : "FAIL") << '\n';
  if (!out.empty()) io::write_json_file(out, io::to_json(res.map));
  return rep.all() ? ok_code : fail_code;
}

int cmd_tower_build(const SeqSpec& N, const SeqSpec& M, const Rat& t, std::size_t depth,
                    const std::string& out)
{
  const Tower tw = Tower::build(N, M, t, depth);
  std::cout << "tower t=" << to_string(t) << " depth=" << depth << '\n';
  for (const auto& L : tw.levels())
    std::cout << "  j=" << L.j << " n=" << L.n << " m=" << L.m << " slot=" << L.slot
              << " k=" << L.fold.k << '\n';
  write_or_print(out, io::to_json(tw));
  return ok_code;
}

int cmd_tower_eval(const std::string& file, std::size_t j, const Rat& x)
{
  const Tower tw = io::tower_from_json(io::read_json_file(file));
  if (j > tw.depth()) throw InvalidInput("level beyond tower depth");
  if (!in_unit_interval(x)) throw InvalidInput("x must lie in [0,1]");
  std::cout << to_string(tw.eval_level(j, x)) << '\n';
  return ok_code;
}

int cmd_tower_materialize(const std::string& file, std::size_t j, const std::string& out)
{
  const Tower tw = io::tower_from_json(io::read_json_file(file));
  if (j > tw.depth()) throw InvalidInput("level beyond tower depth");
  const auto maps = materialize_levels(tw, j, lap_budget());
  for (std::size_t i = 1; i <= j; ++i) {
    const std::uint64_t n = tw.level(i).n, m = tw.level(i).m;
    if (compose(maps[i - 1], tent(n)) != compose(tent(m), maps[i])) {
      std::cout << "commuting square fails at level " << i << '\n';
      return fail_code;
    }
  }
  std::cout << "level " << j << ": " << maps[j].size() << " breakpoints, " << lap(maps[j])
            << " laps, squares exact\n";
  if (!out.empty()) io::write_json_file(out, io::to_json(maps[j]));
  return ok_code;
}

int cmd_distinguish(const SeqSpec& N, const SeqSpec& M, const Rat& t, const Rat& s,
                    std::uint64_t ell, std::optional<std::uint64_t> level, const std::string& out)
{
  const Certificate c = make_certificate(N, M, t, s, ell, level);
  std::cout << "t=" << to_string(c.t) << " s=" << to_string(c.s) << " ell=" << c.ell << '\n'
            << "level j=" << c.j << " q=" << c.q.get_str() << " witness=" << to_string(c.witness)
            << '\n'
            << "f^t_j(witness)=" << to_string(c.vt) << " f^s_j(witness)=" << to_string(c.vs) << '\n'
            << "p=" << c.p.get_str() << " r=" << c.r.get_str() << '\n';
  if (!verify_certificate(c, N, M)) {
    std::cout << "self-check failed\n";
    return fail_code;
  }
  json j = io::to_json(c);
  j["N"] = io::to_json(N);
  j["M"] = io::to_json(M);
  write_or_print(out, j);
  return ok_code;
}

int cmd_verify_cert(const std::string& file, const std::string& nflag, const std::string& mflag)
{
  const json j = io::read_json_file(file);
  const Certificate c = io::certificate_from_json(j);
  const auto seq = [&](const std::string& flag, const char* key) {
    if (!flag.empty()) return SeqSpec::parse(flag);
    if (!j.contains(key)) throw InvalidInput(std::string("certificate has no ") + key + "; pass --" + key);
    return io::seqspec_from_json(j[key]);
  };
  const SeqSpec N = seq(nflag, "N");
  const SeqSpec M = seq(mflag, "M");
  const VerifyReport rep = verify_certificate_report(c, N, M);
  if (rep.ok) {
    std::cout << "certificate verified\n";
    return ok_code;
  }
  for (const auto& f : rep.failures) std::cout << "FAIL: " << f << '\n';
  return fail_code;
}

int cmd_natmap_check(const NaturalMapSpec& spec)
{
  validate(spec);
  const std::size_t depth = spec.depth();
  if (auto k = is_compatible(spec, depth)) {
    std::cout << "fails at k=" << *k << '\n';
    return fail_code;
  }
  const auto idx = induced_indices(spec, depth);
  std::cout << "compatible: i = " << spec.i0.get_str();
  for (const auto& i : idx) std::cout << ", " << to_string(i);
  std::cout << '\n';
  return ok_code;
}

int cmd_natmap_enum(const SeqSpec& N, const SeqSpec& M, std::uint64_t i0max, std::size_t j0max,
                    std::size_t jmax, std::size_t depth, const std::string& out)
{
  switch (prime_support_check(N, M)) {
  case PrimeSupport::impossible: std::cout << "prime support: no compatible map can exist\n"; break;
  case PrimeSupport::possible: std::cout << "prime support: compatible maps possible\n"; break;
  case PrimeSupport::unknown: std::cout << "prime support: undecided (finite sequence)\n"; break;
  }
  const auto specs = enumerate(N, M, i0max, j0max, jmax, depth);
  json arr = json::array();
  for (const auto& s : specs) {
    std::cout << "  i0=" << s.i0.get_str() << " jseq=";
    for (std::size_t k = 0; k < s.jseq.size(); ++k) std::cout << (k ? "," : "") << s.jseq[k];
    std::cout << '\n';
    arr.push_back(io::to_json(s));
  }
  std::cout << specs.size() << " compatible specs\n";
  if (!out.empty()) io::write_json_file(out, json{{"specs", arr}});
  return ok_code;
}

int cmd_lifts(const PLMap& h, std::uint64_t m, std::size_t cap, const std::string& out,
              const std::string& svg)
{
  const auto lifts = enumerate_lifts(h, m, cap);
  const PLMap gm = tent(m);
  bool all = true;
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    const bool good = compose(gm, lifts[k]) == h;
    all = all && good;
    std::cout << "lift " << k << ": " << lifts[k].size() << " breakpoints, " << lap(lifts[k])
              << " laps" << (good ? "" : "  FAIL") << '\n';
  }
  if (!out.empty()) io::write_json_file(out, lifts_json(lifts));
  if (!svg.empty()) {
    PlotSpec spec;
    for (std::size_t k = 0; k < lifts.size(); ++k) spec.maps.emplace_back(lifts[k], "lift " + std::to_string(k));
    spec.grid = h.size() - 1;
    write_text(svg, render_svg(spec));
  }
  return all ? ok_code : fail_code;
}

int cmd_thread_validate(const std::string& file)
{
  const Thread x = io::thread_from_json(io::read_json_file(file));
  if (auto i = validate(x)) {
    std::cout << "inconsistent at coordinate " << *i << '\n';
    return fail_code;
  }
  std::cout << "valid thread of depth " << x.depth() << '\n';
  return ok_code;
}

int cmd_thread_extend(const std::string& file, const std::string& out)
{
  const Thread x = io::thread_from_json(io::read_json_file(file));
  if (auto i = validate(x)) throw InvalidInput("input thread inconsistent at coordinate " + std::to_string(*i));
  json arr = json::array();
  for (const auto& y : extend(x)) arr.push_back(io::to_json(y));
  std::cout << arr.size() << " extensions\n";
  write_or_print(out, json{{"threads", arr}});
  return ok_code;
}

int cmd_thread_map(const std::string& file, const std::string& natmap, const std::string& tower,
                   const std::string& out)
{
  const Thread x = io::thread_from_json(io::read_json_file(file));
  if (auto i = validate(x)) throw InvalidInput("input thread inconsistent at coordinate " + std::to_string(*i));
  if (natmap.empty() == tower.empty()) throw InvalidInput("give exactly one of --natmap, --tower");
  const Thread y = natmap.empty()
                       ? apply_tower(io::tower_from_json(io::read_json_file(tower)), x)
                       : apply_natmap(io::natmap_from_json(io::read_json_file(natmap)), x);
  write_or_print(out, io::to_json(y));
  if (auto i = validate(y)) {
    std::cerr << "image inconsistent at coordinate " << *i << '\n';
    return fail_code;
  }
  return ok_code;
}

int cmd_plot(const std::vector<std::string>& maps, const std::vector<std::string>& labels,
             const std::string& lifts, int width, int height, std::uint64_t grid,
             const std::string& out)
{
  PlotSpec spec;
  spec.width = width;
  spec.height = height;
  if (grid > 0) spec.grid = grid;
  for (const auto& m : maps) spec.maps.emplace_back(map_arg(m), m);
  if (!lifts.empty()) {
    const json j = io::read_json_file(lifts);
    if (!j.is_object() || !j.contains("lifts") || !j["lifts"].is_array())
      throw InvalidInput("lifts file must hold {\"lifts\": [...]}");
    for (std::size_t k = 0; k < j["lifts"].size(); ++k)
      spec.maps.emplace_back(io::plmap_from_json(j["lifts"][k]), "lift " + std::to_string(k));
  }
  if (labels.size() > spec.maps.size()) throw InvalidInput("more labels than maps");
  for (std::size_t k = 0; k < labels.size(); ++k) spec.maps[k].second = labels[k];
  const std::string svg = render_svg(spec);
  if (out.empty()) std::cout << svg;
  else write_text(out, svg);
  return ok_code;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact tent-map algebra, map towers and separation certificates"};
  app.require_subcommand(1);

  std::function<int()> action;
  const auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // semigroup
  std::uint64_t maxn = 12;
  auto* sg = app.add_subcommand("semigroup", "Check g_m o g_n = g_mn and commutation");
  sg->add_option("--maxn", maxn, "Largest m, n")->capture_default_str();
  on(sg, [&] { return cmd_semigroup(maxn); });

  // lemma21
  LiftSpec ls;
  std::string f0 = "id", out;
  auto* l21 = app.add_subcommand("lemma21", "Build and check one lift step");
  l21->add_option("--m", ls.m)->required();
  l21->add_option("--n", ls.n)->required();
  l21->add_option("--q", ls.q)->required();
  l21->add_option("--i", ls.i)->required();
  l21->add_option("--f0", f0, "id, tent:N or a PLMap JSON file")->capture_default_str();
  l21->add_option("--out", out);
  on(l21, [&] {
    ls.f0 = map_arg(f0);
    return cmd_lemma21(ls, out);
  });

  // tower
  std::string nspec, mspec, tstr, sstr, xstr, file;
  std::size_t depth = 0, level_j = 0;
  auto* tw = app.add_subcommand("tower", "Build, evaluate and materialize towers");
  tw->require_subcommand(1);
  auto* twb = tw->add_subcommand("build");
  twb->add_option("--N", nspec)->required();
  twb->add_option("--M", mspec)->required();
  twb->add_option("--t", tstr)->required();
  twb->add_option("--depth", depth)->required();
  twb->add_option("--out", out);
  on(twb, [&] { return cmd_tower_build(SeqSpec::parse(nspec), SeqSpec::parse(mspec), parse_rat(tstr), depth, out); });
  auto* twe = tw->add_subcommand("eval");
  twe->add_option("--tower", file)->required();
  twe->add_option("--j", level_j)->required();
  twe->add_option("--x", xstr)->required();
  on(twe, [&] { return cmd_tower_eval(file, level_j, parse_rat(xstr)); });
  auto* twm = tw->add_subcommand("materialize");
  twm->add_option("--tower", file)->required();
  twm->add_option("--j", level_j)->required();
  twm->add_option("--out", out);
  on(twm, [&] { return cmd_tower_materialize(file, level_j, out); });

  // distinguish / verify-cert
  std::uint64_t ell = 4;
  std::optional<std::uint64_t> level;
  auto* ds = app.add_subcommand("distinguish", "Certify that two towers are not homotopic");
  ds->add_option("--N", nspec)->required();
  ds->add_option("--M", mspec)->required();
  ds->add_option("--t", tstr)->required();
  ds->add_option("--s", sstr)->required();
  ds->add_option("--ell", ell)->capture_default_str();
  ds->add_option("--level", level);
  ds->add_option("--out", out);
  on(ds, [&] {
    return cmd_distinguish(SeqSpec::parse(nspec), SeqSpec::parse(mspec), parse_rat(tstr),
                           parse_rat(sstr), ell, level, out);
  });
  auto* vc = app.add_subcommand("verify-cert", "Independently recheck a certificate");
  vc->add_option("--cert", file)->required();
  vc->add_option("--N", nspec);
  vc->add_option("--M", mspec);
  on(vc, [&] { return cmd_verify_cert(file, nspec, mspec); });

  // natmap
  std::string i0str, jseq;
  std::uint64_t i0max = 10;
  std::size_t j0max = 3, jmax = 8, nm_depth = 3;
  auto* nm = app.add_subcommand("natmap", "Naturally induced maps");
  nm->require_subcommand(1);
  auto* nmc = nm->add_subcommand("check");
  nmc->add_option("--N", nspec);
  nmc->add_option("--M", mspec);
  nmc->add_option("--i0", i0str);
  nmc->add_option("--jseq", jseq);
  nmc->add_option("--spec", file, "NaturalMapSpec JSON instead of the flags");
  on(nmc, [&] {
    if (!file.empty()) return cmd_natmap_check(io::natmap_from_json(io::read_json_file(file)));
    if (nspec.empty() || mspec.empty() || i0str.empty() || jseq.empty())
      throw InvalidInput("give --spec or all of --N --M --i0 --jseq");
    return cmd_natmap_check({parse_int(i0str), index_list(jseq), SeqSpec::parse(nspec), SeqSpec::parse(mspec)});
  });
  auto* nme = nm->add_subcommand("enum");
  nme->add_option("--N", nspec)->required();
  nme->add_option("--M", mspec)->required();
  nme->add_option("--i0max", i0max)->capture_default_str();
  nme->add_option("--j0max", j0max)->capture_default_str();
  nme->add_option("--jmax", jmax)->capture_default_str();
  nme->add_option("--depth", nm_depth)->capture_default_str();
  nme->add_option("--out", out);
  on(nme, [&] {
    return cmd_natmap_enum(SeqSpec::parse(nspec), SeqSpec::parse(mspec), i0max, j0max, jmax, nm_depth, out);
  });

  // lifts
  std::string hstr, svg;
  std::uint64_t lm = 2;
  std::size_t cap = 10;
  auto* lf = app.add_subcommand("lifts", "Enumerate maps f with g_m o f = h");
  lf->set_help_flag("--help", "Print this help message and exit");
  lf->add_option("--h", hstr, "id, tent:N or a PLMap JSON file")->required();
  lf->add_option("--m", lm)->required();
  lf->add_option("--cap", cap)->capture_default_str();
  lf->add_option("--out", out);
  lf->add_option("--svg", svg);
  on(lf, [&] { return cmd_lifts(map_arg(hstr), lm, cap, out, svg); });

  // thread
  std::string natmap_file, tower_file;
  auto* th = app.add_subcommand("thread", "Finite threads of the inverse limit");
  th->require_subcommand(1);
  auto* thv = th->add_subcommand("validate");
  thv->add_option("--thread", file)->required();
  on(thv, [&] { return cmd_thread_validate(file); });
  auto* the = th->add_subcommand("extend");
  the->add_option("--thread", file)->required();
  the->add_option("--out", out);
  on(the, [&] { return cmd_thread_extend(file, out); });
  auto* thm = th->add_subcommand("map");
  thm->add_option("--thread", file)->required();
  thm->add_option("--natmap", natmap_file);
  thm->add_option("--tower", tower_file);
  thm->add_option("--out", out);
  on(thm, [&] { return cmd_thread_map(file, natmap_file, tower_file, out); });

  // plot
  std::vector<std::string> maps, labels;
  std::string lifts_file;
  int width = 480, height = 480;
  std::uint64_t grid = 0;
  auto* pl = app.add_subcommand("plot", "Render PL maps as SVG");
  pl->add_option("--map", maps, "id, tent:N or a PLMap JSON file (repeatable)");
  pl->add_option("--lifts", lifts_file, "JSON written by `lifts --out`");
  pl->add_option("--label", labels, "Panel labels, in order (repeatable)");
  pl->add_option("--width", width)->capture_default_str();
  pl->add_option("--height", height)->capture_default_str();
  pl->add_option("--grid", grid, "Draw fold lines at k/grid");
  pl->add_option("--out", out);
  on(pl, [&] { return cmd_plot(maps, labels, lifts_file, width, height, grid, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid_code;
  }

  try {
    return action();
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return fail_code;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return invalid_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fail_code;
  }
}
