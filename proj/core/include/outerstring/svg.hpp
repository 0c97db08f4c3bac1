#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outerstring/geom.hpp"
#include "outerstring/minor_witness.hpp"

namespace outerstring {

struct SvgLayers {
  bool strings = true;
  bool levels = false;   // faces shaded by exact crossing-level
  bool witness = false;  // witness point and its curve family
  bool folks = false;    // strings coloured by folk
};

// Comma-separated subset of strings,levels,witness,folks. An empty list
// selects strings only. Throws ParseError on unknown names.
SvgLayers parse_layers(const std::string& spec);

struct SvgOverlay {
  std::vector<DoubleGroundedCurve> curves;
  std::optional<Point> witness;
};

// Deterministic output for identical inputs. One <polyline class="string">
// per string, one <path class="face"> per face when levels are shown.
std::string render_svg(const Instance& inst, const SvgLayers& layers, const SvgOverlay& overlay = {});

}  // namespace outerstring
