#pragma once

#include <compare>
#include <string>

namespace wblow {

/// Bidegree of a homogeneous element.
///
/// `weight` is the primary grading (the t-grading of a Rees algebra, or the
/// weights of a weighted projective stack). `aux` is an auxiliary grading that
/// gives base-ring variables positive degree so that every graded piece of a
/// non-localized ring is finite-dimensional.
struct Degree {
  int weight = 0;
  int aux = 0;

  friend auto operator<=>(const Degree&, const Degree&) = default;

  Degree& operator+=(const Degree& o) {
    weight += o.weight;
    aux += o.aux;
    return *this;
  }
  Degree& operator-=(const Degree& o) {
    weight -= o.weight;
    aux -= o.aux;
    return *this;
  }
  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
  friend Degree operator-(const Degree& a) { return {-a.weight, -a.aux}; }
  friend Degree operator*(int k, const Degree& a) { return {k * a.weight, k * a.aux}; }
};

inline std::string to_string(const Degree& d) {
  return "(" + std::to_string(d.weight) + "," + std::to_string(d.aux) + ")";
}

}  // namespace wblow
