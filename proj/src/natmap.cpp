#include "knaster/natmap.hpp"

#include <functional>
#include <set>

namespace knaster {

void validate(const NaturalMapSpec& spec)
{
  if (spec.i0 < 1) throw InvalidInput("i0 must be a positive integer");
  if (spec.jseq.empty()) throw InvalidInput("jseq must not be empty");
  for (std::size_t k = 1; k < spec.jseq.size(); ++k)
    if (spec.jseq[k] <= spec.jseq[k - 1]) throw InvalidInput("jseq must be strictly increasing");
}

std::vector<Rat> induced_indices(const NaturalMapSpec& spec, std::size_t depth)
{
  validate(spec);
  if (depth >= spec.jseq.size())
    throw InvalidInput("jseq has no entry for depth " + std::to_string(depth));
  std::vector<Rat> out;
  out.reserve(depth);
  // Accumulate numerator and denominator separately so each i_k is the
  // formula's quotient, not a chain of rounded steps.
  Int num = spec.i0;
  Int den = 1;
  for (std::size_t k = 1; k <= depth; ++k) {
    num *= range_product(spec.source, spec.jseq[k - 1] + 1, spec.jseq[k]);
    den *= Int(spec.target.nth(k));
    out.push_back(make_rat(num, den));
  }
  return out;
}

std::optional<std::size_t> is_compatible(const NaturalMapSpec& spec, std::size_t depth)
{
  const auto indices = induced_indices(spec, depth);
  for (std::size_t k = 0; k < indices.size(); ++k)
    if (!is_integer(indices[k]) || indices[k] <= 0) return k + 1;
  return std::nullopt;
}

std::vector<NaturalMapSpec> enumerate(const SeqSpec& source, const SeqSpec& target,
                                      std::uint64_t i0max, std::size_t j0max,
                                      std::size_t jmax, std::size_t depth)
{
  std::vector<NaturalMapSpec> out;
  std::vector<std::size_t> jseq;

  // Depth-first over jseq in lexicographic order; `current` is i_k as an
  // integer, so a non-divisible step prunes the whole subtree.
  std::function<void(const Int&, const Int&)> extend = [&](const Int& i0, const Int& current) {
    const std::size_t k = jseq.size();
    if (k == depth + 1) {
      out.push_back({i0, jseq, source, target});
      return;
    }
    const Int m = Int(target.nth(k));
    for (std::size_t j = jseq.back() + 1; j + (depth - k) <= jmax; ++j) {
      const Int num = current * range_product(source, jseq.back() + 1, j);
      if (!mpz_divisible_p(num.get_mpz_t(), m.get_mpz_t())) continue;
      jseq.push_back(j);
      extend(i0, Int(num / m));
      jseq.pop_back();
    }
  };

  for (std::uint64_t i = 1; i <= i0max; ++i) {
    const Int i0(i);
    for (std::size_t j0 = 0; j0 <= j0max && j0 + depth <= jmax; ++j0) {
      jseq.assign(1, j0);
      extend(i0, i0);
    }
  }

  std::set<std::pair<Int, std::vector<std::size_t>>> seen;
  for (const auto& s : out)
    if (!seen.emplace(s.i0, s.jseq).second)
      throw VerificationFailure("natural map enumeration produced a duplicate spec");
  return out;
}

Rat level0_key(const NaturalMapSpec& spec)
{
  validate(spec);
  return make_rat(spec.i0, prefix_product(spec.source, spec.jseq.front()));
}

bool same_induced_map(const NaturalMapSpec& a, const NaturalMapSpec& b)
{
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  return level0_key(a) == level0_key(b);
}

namespace {

std::set<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::set<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ps.insert(p);
      n /= p;
    }
  if (n > 1) ps.insert(n);
  return ps;
}

std::set<std::uint64_t> tail_support(const SeqSpec& s)
{
  std::set<std::uint64_t> ps;
  const auto& terms = s.kind() == SeqSpec::Kind::constant ? s.head() : s.period();
  for (auto t : terms) ps.merge(prime_factors(t));
  return ps;
}

} // namespace

PrimeSupport prime_support_check(const SeqSpec& source, const SeqSpec& target)
{
  if (source.is_finite() || target.is_finite()) return PrimeSupport::unknown;
  const auto have = tail_support(source);
  for (auto p : tail_support(target))
    if (!have.contains(p)) return PrimeSupport::impossible;
  return PrimeSupport::possible;
}

} // namespace knaster
