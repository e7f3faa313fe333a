#pragma once

#include <cstdint>
#include <vector>

#include "asymlat/analyzer.hpp"

namespace asymlat {

// Rewrites the flags so that invariant R1 holds: per maximal collinear
// chain, the contiguous window agreeing best with the requested flags is
// kept (ties broken toward inclusion); a vertex shared by two chains is
// included only if both keep it. Low-dimensional results that would end
// up empty are closed completely instead.
FlaggedBody2 repair_flags(FlaggedBody2 k);

// Seeded corpus of valid flagged bodies: points, segments, closed
// polygons, assembled compact certificates, and theta_0-recession bodies
// with randomized repaired flag patterns. Deterministic per seed. Every
// closure has recession cone either empty or exactly theta_0.
std::vector<FlaggedBody2> generate_bodies(std::uint64_t seed,
                                          std::size_t count);

// Bounded convex sets only (points, segments, fully closed polygons).
std::vector<FlaggedBody2> generate_bounded_sets(std::uint64_t seed,
                                                std::size_t count);

}  // namespace asymlat
