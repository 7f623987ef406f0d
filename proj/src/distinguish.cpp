#include "knaster/distinguish.hpp"

namespace knaster {

std::uint64_t pick_level(const Rat& t, const Rat& s, std::uint64_t ell, const SeqSpec& M)
{
  if (!(t < s)) throw InvalidInput("pick_level needs t < s");
  if (ell < 1) throw InvalidInput("ell must be >= 1");
  const Rat gap = s - t;
  Int p = 1; // m_1 ... m_{j-1}
  for (std::uint64_t j = 1;; ++j) {
    if (j > 1) p *= Int(M.nth(j - 1));
    if (p > Int(ell) && make_rat(3, static_cast<std::int64_t>(j)) < gap) return j;
  }
}

std::pair<Int, Rat> pick_q(const Rat& t, std::uint64_t j, std::uint64_t n_j)
{
  const std::uint64_t slot = slot_index(t, j);
  const Rat lower = make_rat(Int(slot + 1), Int(j));
  const Rat upper = std::min(make_rat(Int(slot + 2), Int(j)), Rat(1));
  Int q = ceil(lower * Int(n_j) / 2);
  if (q < 1) q = 1;
  Rat w = make_rat(2 * q, Int(n_j));
  if (w > upper)
    throw InvalidInput("no even fold point 2q/" + std::to_string(n_j) + " in [" +
                       to_string(lower) + ", " + to_string(upper) + "]");
  return {q, w};
}

Certificate make_certificate(const SeqSpec& rawN, const SeqSpec& M, Rat t, Rat s,
                             std::uint64_t ell, std::optional<std::uint64_t> level)
{
  if (t == s) throw InvalidInput("t and s must differ");
  if (s < t) std::swap(t, s);
  if (!in_unit_interval(t) || !in_unit_interval(s)) throw InvalidInput("t, s must lie in [0,1]");

  const std::uint64_t least = pick_level(t, s, ell, M);
  const std::uint64_t j = level.value_or(least);
  // Both level conditions are monotone in j, so every j >= least works.
  if (j < least)
    throw InvalidInput("level " + std::to_string(j) + " is below the least admissible level " +
                       std::to_string(least));

  const Tower tower_t = Tower::build(rawN, M, t, j);
  const Tower tower_s = Tower::build(rawN, M, s, j);
  const LevelData& L = tower_t.level(j);

  Certificate c;
  c.t = t;
  c.s = s;
  c.ell = ell;
  c.j = j;
  std::tie(c.q, c.witness) = pick_q(t, j, L.n);
  c.vt = tower_t.eval_level(j, c.witness);
  c.vs = tower_s.eval_level(j, c.witness);
  c.p = prefix_product(M, j - 1);
  c.r = c.p * Int(L.m);

  // g_{m_j}(f^s_j(w)) = f^s_{j-1}(g_{n_j}(w)) = f^s_{j-1}(0) = 0, and
  // f^s_j(w) <= 1/m_j, so the value is pinned to 0.
  if (wave_eval(c.witness * Int(L.n)) != 0)
    throw VerificationFailure("witness is not an even fold point of g_n");
  if (wave_eval(c.vs * Int(L.m)) != 0 || c.vs > make_rat(1, static_cast<std::int64_t>(L.m)))
    throw VerificationFailure("f^s_j(witness) escaped [0, 1/m_j] or g_m of it is not 0");
  if (c.vs != 0) throw VerificationFailure("f^s_j(witness) is not exactly 0");
  if (c.vt < make_rat(Int(L.m - 1), Int(L.m)))
    throw VerificationFailure("f^t_j(witness) is below (m_j - 1)/m_j");
  return c;
}

VerifyReport verify_certificate_report(const Certificate& c, const SeqSpec& rawN,
                                       const SeqSpec& M)
{
  VerifyReport rep;
  const auto check = [&](bool ok, const std::string& what) {
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back(what);
    }
    return ok;
  };

  if (!check(in_unit_interval(c.t) && in_unit_interval(c.s) && c.t < c.s, "0 <= t < s <= 1"))
    return rep;
  if (!check(c.ell >= 1 && c.j >= 1, "ell >= 1 and j >= 1")) return rep;
  check(make_rat(3, static_cast<std::int64_t>(c.j)) < c.s - c.t, "3/j < s - t");

  Int p;
  std::uint64_t m_j = 0;
  try {
    p = prefix_product(M, c.j - 1);
    m_j = M.nth(c.j);
  } catch (const InvalidInput& e) {
    check(false, std::string("M undefined up to j: ") + e.what());
    return rep;
  }
  check(c.p == p, "p = m_1 ... m_{j-1}");
  check(c.p > Int(c.ell), "p > ell");
  check(c.r == c.p * Int(m_j), "r = p m_j");

  std::optional<Tower> tower_t, tower_s;
  try {
    tower_t.emplace(Tower::build(rawN, M, c.t, c.j));
    tower_s.emplace(Tower::build(rawN, M, c.s, c.j));
  } catch (const std::exception& e) {
    check(false, std::string("tower rebuild failed: ") + e.what());
    return rep;
  }
  const LevelData& L = tower_t->level(c.j);

  check(c.q >= 1, "q >= 1");
  check(c.witness == make_rat(2 * c.q, Int(L.n)), "witness = 2q/n_j");
  const Rat lower = make_rat(Int(L.slot + 1), Int(c.j));
  const Rat upper = make_rat(Int(L.slot + 2), Int(c.j));
  check(lower <= c.witness && c.witness <= upper && c.witness <= 1,
        "(slot_t + 1)/j <= witness <= (slot_t + 2)/j");
  if (!check(in_unit_interval(c.witness), "witness in [0,1]")) return rep;
  check(c.witness < make_rat(Int(tower_s->level(c.j).slot), Int(c.j)),
        "witness left of s's slot");

  check(c.vs == 0, "vs = 0");
  check(c.vt >= make_rat(Int(m_j - 1), Int(m_j)), "vt >= (m_j - 1)/m_j");
  check(c.vt == tower_t->eval_level(c.j, c.witness), "vt = f^t_j(witness)");
  check(c.vs == tower_s->eval_level(c.j, c.witness), "vs = f^s_j(witness)");
  // Commuting square at the witness, through the level below.
  const Rat below = tower_s->eval_level(c.j - 1, wave_eval(c.witness * Int(L.n)));
  check(below == 0 && wave_eval(c.vs * Int(m_j)) == below, "g_m(vs) = f^s_{j-1}(g_n(witness)) = 0");
  return rep;
}

bool verify_certificate(const Certificate& cert, const SeqSpec& rawN, const SeqSpec& M)
{
  return verify_certificate_report(cert, rawN, M).ok;
}

} // namespace knaster
