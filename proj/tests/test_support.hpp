#pragma once

#include <string>

#include "doctest.h"

#include "apz/format.hpp"
#include "apz/real.hpp"

// Prefix comparison against printed reference digits with a readable failure.
inline void check_reference(const apz::Real& x, const std::string& reference, int max_digits = -1) {
  const auto r = apz::compare_to_reference(x, reference, max_digits);
  INFO("reference ", reference, " got ", apz::format_paper_style(x, 70), " : ", r.message);
  CHECK(r.ok);
}

inline apz::Real rel_err(const apz::Real& a, const apz::Real& b) { return apz::abs(a - b) / apz::abs(b); }
