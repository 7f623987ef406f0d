#include "knaster/rational.hpp"

#include <cctype>

namespace knaster {

Rat make_rat(const Int& num, const Int& den)
{
  if (den == 0) throw InvalidInput("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(std::int64_t num, std::int64_t den)
{
  return make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
}

Int floor(const Rat& x)
{
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& x)
{
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

bool in_unit_interval(const Rat& x) { return x >= 0 && x <= 1; }

std::string to_string(const Rat& x)
{
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

namespace {

bool canonical_integer_text(std::string_view s, bool allow_sign)
{
  if (s.empty()) return false;
  if (s.front() == '-') {
    if (!allow_sign) return false;
    s.remove_prefix(1);
    if (s == "0") return false; // "-0"
  }
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return s.size() == 1 || s.front() != '0';
}

bool loose_integer_text(std::string_view s)
{
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Int parse_int(std::string_view text)
{
  if (!canonical_integer_text(text, true))
    throw InvalidInput("not a canonical integer: '" + std::string(text) + "'");
  return Int(std::string(text));
}

Rat parse_rat(std::string_view text, bool strict)
{
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

  const auto ok = [&](std::string_view s, bool sign) {
    return strict ? canonical_integer_text(s, sign) : loose_integer_text(s);
  };
  if (!ok(num_text, true) || !ok(den_text, false))
    throw InvalidInput("not a rational: '" + std::string(text) + "'");

  std::string n(num_text), d(den_text);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  if (!d.empty() && d.front() == '+') d.erase(0, 1);
  const Int num(n), den(d);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");

  Rat r = make_rat(num, den);
  if (strict) {
    if (slash != std::string_view::npos && den == 1)
      throw InvalidInput("integer written with denominator 1: '" + std::string(text) + "'");
    if (r.get_den() != den)
      throw InvalidInput("rational not in lowest terms: '" + std::string(text) + "'");
  }
  return r;
}

std::int64_t to_int64(const Int& x)
{
  if (!x.fits_slong_p()) throw InvalidInput("integer out of 64-bit range: " + x.get_str());
  return x.get_si();
}

std::uint64_t to_uint64(const Int& x)
{
  if (!x.fits_ulong_p()) throw InvalidInput("integer out of unsigned 64-bit range: " + x.get_str());
  return x.get_ui();
}

} // namespace knaster
