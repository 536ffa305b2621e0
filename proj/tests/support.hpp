#pragma once

// Shared doctest configuration for every test binary. Each test source file
// defines DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN before including this header
// (one translation unit per binary).
#include <doctest.h>

#include <cmath>
#include <string>

namespace testsupport {

// |a - b| <= tol, written out so failures print both operands.
inline bool near(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace testsupport
