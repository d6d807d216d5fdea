#pragma once

#include <optional>
#include <utility>

#include "coverdec/geometry.hpp"

namespace coverdec {

/// The five relative positions of an unordered wedge pair. Exactly one applies:
///   Big       - some wedge has angle > pi
///   Contain   - the closure of one cone contains the other (or its reflection)
///   Halfplane - the union of the closed cones covers a halfplane
///   Special   - the union fits in an open halfplane, neither contains the other
///   Hard      - everything else (one side in Left, the other in Upper/Lower)
enum class WedgePairType { Big, Halfplane, Contain, Hard, Special };

const char* to_string(WedgePairType t);

WedgePairType classify_pair(const Wedge& v, const Wedge& w);

/// Closed-cone membership of a direction.
bool cone_contains_dir(const Wedge& w, const Direction& d, bool strict = false);

/// Exhaustive search over vertex pairs for a Special pair of polygon wedges.
std::optional<std::pair<int, int>> find_special_pair(const Polygon& p);

} // namespace coverdec
