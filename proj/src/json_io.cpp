#include "knaster/json_io.hpp"

#include <fstream>

namespace knaster::io {

namespace {

const json& field(const json& j, const char* key)
{
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

Rat rat_of(const json& j)
{
  if (!j.is_string()) throw InvalidInput("expected a rational string, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

Int int_of(const json& j)
{
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  throw InvalidInput("expected an integer, got " + j.dump());
}

std::uint64_t u64_of(const json& j)
{
  if (!j.is_number_unsigned()) throw InvalidInput("expected a non-negative integer, got " + j.dump());
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> terms_of(const json& j)
{
  if (!j.is_array()) throw InvalidInput("expected an array of integers");
  std::vector<std::uint64_t> out;
  for (const auto& e : j) out.push_back(u64_of(e));
  return out;
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace

json to_json(const PLMap& f)
{
  json pts = json::array();
  for (const auto& b : f.breakpoints()) pts.push_back({to_string(b.x), to_string(b.y)});
  return {{"breakpoints", pts}};
}

PLMap plmap_from_json(const json& j)
{
  return guarded([&] {
    const json& pts = field(j, "breakpoints");
    if (!pts.is_array()) throw InvalidInput("breakpoints must be an array");
    std::vector<Breakpoint> out;
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2) throw InvalidInput("breakpoint must be [x, y]");
      Rat x = rat_of(p[0]);
      Rat y = rat_of(p[1]);
      if (!in_unit_interval(x) || !in_unit_interval(y))
        throw InvalidInput("breakpoint outside the unit square");
      out.push_back({std::move(x), std::move(y)});
    }
    return PLMap(std::move(out));
  });
}

json to_json(const SeqSpec& s)
{
  switch (s.kind()) {
  case SeqSpec::Kind::constant: return {{"kind", "constant"}, {"n", s.head().front()}};
  case SeqSpec::Kind::list: return {{"kind", "list"}, {"items", s.head()}};
  case SeqSpec::Kind::periodic:
    return {{"kind", "periodic"}, {"prefix", s.head()}, {"period", s.period()}};
  }
  return {};
}

SeqSpec seqspec_from_json(const json& j)
{
  return guarded([&] {
    const json& kind = field(j, "kind");
    if (!kind.is_string()) throw InvalidInput("sequence kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "constant") return SeqSpec::constant(u64_of(field(j, "n")));
    if (k == "list") return SeqSpec::list(terms_of(field(j, "items")));
    if (k == "periodic")
      return SeqSpec::periodic(terms_of(field(j, "prefix")), terms_of(field(j, "period")));
    throw InvalidInput("unknown sequence kind '" + k + "'");
  });
}

json to_json(const Thread& x)
{
  json coords = json::array();
  for (const auto& c : x.coords) coords.push_back(to_string(c));
  return {{"seq", to_json(x.seq)}, {"coords", coords}};
}

Thread thread_from_json(const json& j)
{
  return guarded([&] {
    Thread x{seqspec_from_json(field(j, "seq")), {}};
    const json& coords = field(j, "coords");
    if (!coords.is_array()) throw InvalidInput("coords must be an array");
    for (const auto& c : coords) {
      Rat v = rat_of(c);
      if (!in_unit_interval(v)) throw InvalidInput("thread coordinate outside [0,1]");
      x.coords.push_back(std::move(v));
    }
    return x;
  });
}

json to_json(const NaturalMapSpec& spec)
{
  // A number when it fits, a decimal string otherwise.
  json i0 = spec.i0.fits_ulong_p() ? json(spec.i0.get_ui()) : json(spec.i0.get_str());
  return {{"i0", i0},
          {"jseq", spec.jseq},
          {"N", to_json(spec.source)},
          {"M", to_json(spec.target)}};
}

NaturalMapSpec natmap_from_json(const json& j)
{
  return guarded([&] {
    NaturalMapSpec spec{int_of(field(j, "i0")), {}, seqspec_from_json(field(j, "N")),
                        seqspec_from_json(field(j, "M"))};
    const json& js = field(j, "jseq");
    if (!js.is_array()) throw InvalidInput("jseq must be an array");
    for (const auto& e : js) spec.jseq.push_back(u64_of(e));
    validate(spec);
    return spec;
  });
}

json to_json(const Tower& tower)
{
  json levels = json::array();
  for (const auto& L : tower.levels()) {
    json folds = json::array();
    for (const auto& t : L.fold.folds) folds.push_back(to_string(t));
    levels.push_back({{"n", L.n},
                      {"m", L.m},
                      {"slot", L.slot},
                      {"k", L.fold.k},
                      {"a", to_string(L.fold.a)},
                      {"b", to_string(L.fold.b)},
                      {"folds", folds}});
  }
  return {{"rawN", to_json(tower.rawN())},
          {"M", to_json(tower.M())},
          {"t", to_string(tower.t())},
          {"depth", tower.depth()},
          {"levels", levels}};
}

Tower tower_from_json(const json& j)
{
  return guarded([&] {
    const SeqSpec rawN = seqspec_from_json(field(j, "rawN"));
    const SeqSpec M = seqspec_from_json(field(j, "M"));
    const Rat t = rat_of(field(j, "t"));
    const std::uint64_t depth = u64_of(field(j, "depth"));
    const json& lv = field(j, "levels");
    if (!lv.is_array()) throw InvalidInput("levels must be an array");

    std::vector<LevelData> levels;
    std::uint64_t level = 0;
    for (const auto& e : lv) {
      LevelData L;
      L.j = ++level;
      L.n = u64_of(field(e, "n"));
      L.m = u64_of(field(e, "m"));
      L.slot = u64_of(field(e, "slot"));
      L.fold.k = u64_of(field(e, "k"));
      L.fold.a = rat_of(field(e, "a"));
      L.fold.b = rat_of(field(e, "b"));
      const json& folds = field(e, "folds");
      if (!folds.is_array()) throw InvalidInput("folds must be an array");
      for (const auto& f : folds) L.fold.folds.push_back(rat_of(f));
      levels.push_back(std::move(L));
    }
    return Tower::reload(rawN, M, t, depth, levels);
  });
}

json to_json(const Certificate& c)
{
  return {{"t", to_string(c.t)},          {"s", to_string(c.s)},
          {"ell", std::to_string(c.ell)}, {"j", std::to_string(c.j)},
          {"q", c.q.get_str()},           {"witness", to_string(c.witness)},
          {"vt", to_string(c.vt)},        {"vs", to_string(c.vs)},
          {"p", c.p.get_str()},           {"r", c.r.get_str()}};
}

Certificate certificate_from_json(const json& j)
{
  return guarded([&] {
    const auto u64 = [&](const char* key) {
      const json& v = field(j, key);
      if (!v.is_string()) throw InvalidInput(std::string(key) + " must be an integer string");
      const Int i = parse_int(v.get<std::string>());
      if (i < 0) throw InvalidInput(std::string(key) + " must be non-negative");
      return to_uint64(i);
    };
    const auto integer = [&](const char* key) {
      const json& v = field(j, key);
      if (!v.is_string()) throw InvalidInput(std::string(key) + " must be an integer string");
      return parse_int(v.get<std::string>());
    };
    Certificate c;
    c.t = rat_of(field(j, "t"));
    c.s = rat_of(field(j, "s"));
    c.ell = u64("ell");
    c.j = u64("j");
    c.q = integer("q");
    c.witness = rat_of(field(j, "witness"));
    c.vt = rat_of(field(j, "vt"));
    c.vs = rat_of(field(j, "vs"));
    c.p = integer("p");
    c.r = integer("r");
    return c;
  });
}

json read_json_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j)
{
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw InvalidInput("write failed: " + path.string());
}

} // namespace knaster::io
