#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string>

#include "gpdrep/bisection.hpp"
#include "gpdrep/bundle.hpp"
#include "gpdrep/error.hpp"
#include "gpdrep/groupoid.hpp"

namespace testsupport {

using gpdrep::Matrix;
using gpdrep::Rational;

inline gpdrep::ArrId named(const gpdrep::FiniteGroupoid& G, const std::string& name) {
  const auto a = G.find_arrow(name);
  REQUIRE_MESSAGE(a.has_value(), "no arrow " << name);
  return *a;
}

inline Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           rows.size() == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const Rational& x : row) {
      m(r, c++) = x;
    }
    ++r;
  }
  return m;
}

inline Matrix scalar(const Rational& x) { return mat({{x}}); }

// Section of a line bundle from its values.
inline gpdrep::Section line_section(std::initializer_list<Rational> xs) {
  gpdrep::Section s;
  for (const Rational& x : xs) {
    gpdrep::Vector v(1);
    v(0) = x;
    s.values.push_back(v);
  }
  return s;
}

// Bisection from arrow names, one per object in id order.
inline gpdrep::Bisection bis(const gpdrep::FiniteGroupoid& G,
                             std::initializer_list<const char*> names) {
  gpdrep::Bisection s;
  for (const char* n : names) {
    s.values.push_back(named(G, n));
  }
  return s;
}

template <typename F>
gpdrep::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const gpdrep::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return gpdrep::ErrorKind::UnknownElement;
}

}  // namespace testsupport
