#include "knaster/seqspec.hpp"

#include <charconv>
#include <sstream>

namespace knaster {

namespace {

void require_terms(const std::vector<std::uint64_t>& v, const char* what)
{
  for (auto n : v)
    if (n < 2) throw InvalidInput(std::string(what) + " terms must be integers >= 2");
}

std::vector<std::uint64_t> parse_terms(std::string_view text)
{
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw InvalidInput("bad sequence term: '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

} // namespace

SeqSpec::SeqSpec(Kind kind, std::vector<std::uint64_t> head, std::vector<std::uint64_t> period)
    : kind_(kind), head_(std::move(head)), period_(std::move(period))
{
  require_terms(head_, "sequence");
  require_terms(period_, "sequence");
}

SeqSpec SeqSpec::constant(std::uint64_t n) { return SeqSpec(Kind::constant, {n}, {}); }

SeqSpec SeqSpec::list(std::vector<std::uint64_t> items)
{
  return SeqSpec(Kind::list, std::move(items), {});
}

SeqSpec SeqSpec::periodic(std::vector<std::uint64_t> prefix, std::vector<std::uint64_t> period)
{
  if (period.empty()) throw InvalidInput("periodic sequence needs a non-empty period");
  return SeqSpec(Kind::periodic, std::move(prefix), std::move(period));
}

SeqSpec SeqSpec::parse(const std::string& text)
{
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("sequence spec needs 'kind:terms': " + text);
  const std::string kind = text.substr(0, colon);
  const std::string_view body = std::string_view(text).substr(colon + 1);
  if (kind == "const") {
    const auto terms = parse_terms(body);
    if (terms.size() != 1) throw InvalidInput("const: takes exactly one term");
    return constant(terms.front());
  }
  if (kind == "list") {
    auto terms = parse_terms(body);
    if (terms.empty()) throw InvalidInput("list: needs at least one term");
    return list(std::move(terms));
  }
  if (kind == "periodic") {
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) throw InvalidInput("periodic: needs 'prefix|period'");
    return periodic(parse_terms(body.substr(0, bar)), parse_terms(body.substr(bar + 1)));
  }
  throw InvalidInput("unknown sequence kind: " + kind);
}

std::uint64_t SeqSpec::nth(std::size_t j) const
{
  if (j == 0) throw InvalidInput("sequence index starts at 1");
  switch (kind_) {
  case Kind::constant:
    return head_.front();
  case Kind::list:
    if (j > head_.size())
      throw InvalidInput("sequence index " + std::to_string(j) + " beyond list length " +
                         std::to_string(head_.size()));
    return head_[j - 1];
  case Kind::periodic:
    if (j <= head_.size()) return head_[j - 1];
    return period_[(j - head_.size() - 1) % period_.size()];
  }
  return 0;
}

std::string SeqSpec::to_string() const
{
  switch (kind_) {
  case Kind::constant: return "const:" + std::to_string(head_.front());
  case Kind::list: return "list:" + join(head_);
  case Kind::periodic: return "periodic:" + join(head_) + "|" + join(period_);
  }
  return {};
}

Int range_product(const SeqSpec& seq, std::size_t first, std::size_t last)
{
  Int p = 1;
  for (std::size_t i = first; i <= last; ++i) p *= Int(seq.nth(i));
  return p;
}

Int prefix_product(const SeqSpec& seq, std::size_t j) { return range_product(seq, 1, j); }

GroupedSeq::GroupedSeq(SeqSpec raw, SeqSpec partner)
    : raw_(std::move(raw)), partner_(std::move(partner))
{
}

void GroupedSeq::extend_to(std::size_t levels)
{
  while (blocks_.size() < levels) {
    const std::size_t j = blocks_.size() + 1;
    const std::size_t first = blocks_.empty() ? 1 : blocks_.back().last + 1;
    const Int bound = (Int(partner_.nth(j)) + 2) * Int(j);
    Int product = 1;
    std::size_t last = first - 1;
    while (product <= bound) product *= Int(raw_.nth(++last));
    blocks_.push_back({first, last, to_uint64(product)});
  }
}

std::uint64_t GroupedSeq::n(std::size_t j) const
{
  if (j == 0 || j > blocks_.size())
    throw InvalidInput("grouped level " + std::to_string(j) + " not built");
  return blocks_[j - 1].product;
}

SeqSpec GroupedSeq::as_list(std::size_t levels) const
{
  std::vector<std::uint64_t> terms;
  for (std::size_t j = 1; j <= levels; ++j) terms.push_back(n(j));
  return SeqSpec::list(std::move(terms));
}

GroupedSeq regroup(const SeqSpec& raw, const SeqSpec& partner, std::size_t levels)
{
  GroupedSeq g(raw, partner);
  g.extend_to(levels);
  return g;
}

} // namespace knaster
