#pragma once

#include <doctest.h>

#include <random>
#include <sstream>

#include "jetsym/checks.hpp"
#include "jetsym/diffpoly.hpp"
#include "jetsym/errors.hpp"
#include "jetsym/exppoly.hpp"

using namespace jetsym;
using sym::jet;
using sym::par;

inline DiffPoly T() { return sym::t(); }
inline DiffPoly X() { return sym::x(); }
inline Rational q(long n, long d = 1) { return ratio(n, d); }

namespace doctest {
template <>
struct StringMaker<DiffPoly> {
  static String convert(const DiffPoly& p) { return to_text(p).c_str(); }
};
template <>
struct StringMaker<ExpPoly> {
  static String convert(const ExpPoly& p) { return to_text(p).c_str(); }
};
}  // namespace doctest
