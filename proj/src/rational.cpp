#include "hgfm/rational.hpp"

#include <cctype>

namespace hgfm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<BigInt> parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  // Leading zeros would trigger the octal prefix rule of the big-int parser.
  while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(s.substr(0, slash));
    auto den = parse_integer(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }

  // Decimal form: [sign] digits [. digits] [ (e|E) [sign] digits ]
  std::string_view mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_part = parse_integer(s.substr(e + 1));
    if (!exp_part || *exp_part > 4096 || *exp_part < -4096) return std::nullopt;
    exp10 = exp_part->convert_to<long>();
    mant = s.substr(0, e);
  }

  bool neg = false;
  if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
    neg = mant[0] == '-';
    mant.remove_prefix(1);
  }

  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    if (!fp.empty() && !all_digits(fp)) return std::nullopt;
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) return std::nullopt;
    digits = std::string(mant);
  }
  if (digits.empty()) return std::nullopt;
  while (digits.size() > 1 && digits.front() == '0') digits.erase(digits.begin());

  Rational v{BigInt(digits)};
  BigInt pow10 = 1;
  for (long i = 0; i < std::labs(exp10); ++i) pow10 *= 10;
  if (exp10 >= 0)
    v *= Rational(pow10);
  else
    v /= Rational(pow10);
  return neg ? Rational(-v) : v;
}

}  // namespace hgfm
