#include "apz/format.hpp"

#include <cctype>
#include <string>

#include "apz/errors.hpp"

namespace apz {

std::string format_paper_style(const Real& x, int digits_shown, PaperStyle style) {
  if (!x.is_finite()) throw NumericError("cannot format a non-finite value");
  if (digits_shown < 1) throw UsageError("digits_shown must be >= 1");
  std::string out = x.sign() < 0 ? "-" : "";
  if (x.is_zero()) return out + "0." + std::string(static_cast<std::size_t>(digits_shown - 1), '0');
  const auto [digits, e] = x.decimal_digits(digits_shown);  // |x| = 0.digits * 10^e

  // 1 <= |x| < 10 reads naturally as d.ddd in either style
  if (e == 1) return out + digits.substr(0, 1) + "." + digits.substr(1);
  if (style == PaperStyle::leading_dot) {
    out += "." + digits;
    if (e != 0) out += "(" + std::to_string(e) + ")";
  } else {
    out += digits.substr(0, 1) + "." + digits.substr(1);
    out += "(" + std::to_string(e - 1) + ")";
  }
  return out;
}

DecimalValue parse_decimal(std::string_view text) {
  auto fail = [&]() -> DecimalValue { throw UsageError("malformed decimal '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return fail();

  DecimalValue v;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    v.negative = s[0] == '-';
    pos = 1;
  }
  long tag = 0;
  std::string mantissa;
  const std::size_t paren = s.find('('), echar = s.find_first_of("eE");
  auto parse_exponent = [&](const std::string& t) {
    if (t.empty()) fail();
    std::size_t used = 0;
    try {
      tag = std::stol(t, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != t.size()) fail();
  };
  if (paren != std::string::npos) {
    if (s.back() != ')') fail();
    mantissa = s.substr(pos, paren - pos);
    parse_exponent(s.substr(paren + 1, s.size() - paren - 2));
  } else if (echar != std::string::npos) {
    mantissa = s.substr(pos, echar - pos);
    parse_exponent(s.substr(echar + 1));
  } else {
    mantissa = s.substr(pos);
  }

  const std::size_t dot = mantissa.find('.');
  const std::string int_part = dot == std::string::npos ? mantissa : mantissa.substr(0, dot);
  const std::string frac_part = dot == std::string::npos ? "" : mantissa.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) fail();
  for (char c : int_part + frac_part)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail();

  // value = 0.(int frac) * 10^(len(int) + tag)
  std::string digits = int_part + frac_part;
  long exponent = static_cast<long>(int_part.size()) + tag;
  std::size_t lead = 0;
  while (lead < digits.size() && digits[lead] == '0') ++lead;
  exponent -= static_cast<long>(lead);
  digits.erase(0, lead);
  if (digits.empty()) exponent = 0;
  v.digits = digits;
  v.exponent = exponent;
  return v;
}

GoldenComparison compare_to_reference(const Real& x, std::string_view reference, int max_digits) {
  GoldenComparison r;
  const DecimalValue ref = parse_decimal(reference);
  std::string expected = ref.digits;
  // trailing zeros in the reference ("1.") carry no information beyond the value
  if (max_digits > 0 && static_cast<int>(expected.size()) > max_digits) expected.resize(max_digits);
  r.expected = expected;
  r.digits_compared = static_cast<int>(expected.size());
  if (expected.empty()) {
    r.ok = x.is_zero();
    r.message = r.ok ? "" : "expected zero";
    return r;
  }
  if (x.is_zero() || !x.is_finite()) {
    r.message = "value is zero or non-finite";
    return r;
  }
  if ((x.sign() < 0) != ref.negative) {
    r.message = "sign differs";
    return r;
  }
  const auto [digits, e] = x.decimal_digits(r.digits_compared);
  r.actual = digits;
  if (e != ref.exponent) {
    r.message = "decimal exponent " + std::to_string(e) + " != " + std::to_string(ref.exponent);
    return r;
  }
  if (digits != expected) {
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == expected[i]) ++i;
    r.message = "digits differ from position " + std::to_string(i + 1);
    return r;
  }
  r.ok = true;
  return r;
}

std::string format_scientific(const Real& x, int digits_shown) {
  if (!x.is_finite()) throw NumericError("cannot format a non-finite value");
  if (digits_shown < 1) throw UsageError("digits_shown must be >= 1");
  return x.to_scientific(digits_shown);
}

}  // namespace apz
