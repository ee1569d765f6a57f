#ifndef THREEFOLD_TEST_FIXTURES_HPP
#define THREEFOLD_TEST_FIXTURES_HPP

#include "threefold/ideal.hpp"
#include "threefold/io.hpp"

namespace threefold::fixtures {

inline Ring p3() { return Ring{kDefaultPrime, 4}; }

// x0 > x1 > x2 > x3 stand for x > y > z > w below

inline Ideal twisted_cubic() {
  return parse_ideal_string(
      "ring p=32003 vars=4\n"
      "x0*x2 - x1^2\n"
      "x1*x3 - x2^2\n"
      "x0*x3 - x1*x2\n");
}

inline Ideal line_x0_x1() {
  return parse_ideal_string("ring p=32003 vars=4\nx0\nx1\n");
}

inline Ideal point_0100() {
  // the point (0:1:0:0)
  return parse_ideal_string("ring p=32003 vars=4\nx0\nx2\nx3\n");
}

inline Ideal skew_lines() {
  // V(x0,x1) ∪ V(x2,x3)
  return parse_ideal_string(
      "ring p=32003 vars=4\nx0*x2\nx0*x3\nx1*x2\nx1*x3\n");
}

inline Ideal fat_line() {
  return parse_ideal_string("ring p=32003 vars=4\nx0^2\nx0*x1\nx1^2\n");
}

}  // namespace threefold::fixtures

#endif
