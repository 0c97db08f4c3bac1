#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "outerstring/geom.hpp"
#include "outerstring/io.hpp"

namespace fixtures {

inline outerstring::Instance load(const std::string& name) {
  return outerstring::instance_from_json(outerstring::read_json_file(std::string(OUTERSTRING_TEST_DATA) + "/" + name));
}

inline outerstring::GroundedString str(const std::string& id, std::vector<outerstring::Point> pts) {
  return {id, std::move(pts)};
}

inline outerstring::Point pt(long x, long y) { return outerstring::Point(x, y); }

inline outerstring::Rational q(long num, long den) {
  outerstring::Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline outerstring::Point pt(long xn, long xd, long yn, long yd) { return outerstring::Point(q(xn, xd), q(yn, yd)); }

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace fixtures
