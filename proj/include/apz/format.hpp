#pragma once

#include <string>
#include <string_view>

#include "apz/real.hpp"

namespace apz {

enum class PaperStyle {
  leading_dot,  // .9936(-3), 1.375, .2643
  unit_digit,   // 9.936(-4), 1.375, 2.643(-1)
};

/// Digits are truncated toward zero, never rounded; an exponent tag "(e)"
/// is appended unless the mantissa already shows the value unscaled.
std::string format_paper_style(const Real& x, int digits_shown, PaperStyle style = PaperStyle::leading_dot);

/// A decimal string read back as  +-0.d1 d2 d3 ... x 10^exponent.
struct DecimalValue {
  bool negative = false;
  std::string digits;  // no leading zeros; empty for zero
  long exponent = 0;
};

/// Accepts paper renderings (".345(-2)", "3.45(-3)", "-4.9(-1)", "1.",
/// "0.00345") as well as "3.45e-3".  Throws UsageError on anything else.
DecimalValue parse_decimal(std::string_view text);

struct GoldenComparison {
  bool ok = false;
  int digits_compared = 0;
  std::string expected;  // significant digits from the reference
  std::string actual;    // our truncated digits, same count
  std::string message;
};

/// Prefix match of the truncated digits of x against a reference string,
/// optionally limited to the first `max_digits` significant digits.
GoldenComparison compare_to_reference(const Real& x, std::string_view reference, int max_digits = -1);

/// Round-to-nearest scientific notation ("3.45e-03") for CSV and plain output.
std::string format_scientific(const Real& x, int digits_shown);

}  // namespace apz
