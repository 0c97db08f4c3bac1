#pragma once

#include <cstdint>
#include <vector>

#include "outerstring/geom.hpp"
#include "outerstring/minor.hpp"
#include "outerstring/minor_witness.hpp"

namespace outerstring {

// Two arms per V-shape. The arms of one V are grounded a small distance eta
// apart and cross just above the ground; adjacent Vs overlap slightly at
// the top so their arms cross there. Arm direction is (-4, 7) or (4, 7).
// Apexes sit at x = xOffset + width/2 + width*j.
struct FolkShape {
  Rational eta{1, 10};
  Rational tau{1, 20};
};

std::vector<GroundedString> folk(const Rational& width, int size, const Rational& x_offset,
                                 const std::string& prefix = "F", const FolkShape& shape = {});

// Folks F_1..F_m with widths 2^i and sizes 2^m / 2^i.
Instance lowerbound_instance(int m);

// Branch set i holds the strings of folk F_{i+1}. Strings with a copy suffix
// "~c" go to a separate branch set per copy, so an alpha-copy instance gives
// a model of K_{alpha m}.
MinorModel folk_contraction_model(const Instance& inst);

// Every string of lowerbound_instance(m) replaced by alpha pairwise crossing
// copies. The copy distance starts at feature_gap / epsilon_divisor and is
// halved whenever a perturbation is rejected.
Instance lowerbound_instance_alpha(int m, int alpha, int epsilon_divisor = 8);

// n grounded polylines with at most max_bends bends each, integer
// coordinates, in general position. Deterministic per seed.
Instance random_instance(int n, int max_bends, std::uint64_t seed);

// 2k x-monotone double-grounded curves in circular order.
std::vector<DoubleGroundedCurve> circular_family(int k, std::uint64_t seed);

// Splits every curve into two grounded strings that cross once near the
// middle of the curve. String 2i starts at x_i and string 2i+1 at y_i.
Instance instance_from_family(const std::vector<DoubleGroundedCurve>& curves);

}  // namespace outerstring
