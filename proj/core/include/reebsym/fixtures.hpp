#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "reebsym/srf.hpp"

namespace reebsym {

/// Generated test surfaces with a known symmetry.
///
/// sphere_height   octahedron with a height function, two extrema.
/// torus_height    6x6 grid torus with the height function of an upright torus;
///                 min, two Saddle(2), max.  Symmetric under (i, j) -> (-i, -j).
/// beachball(k)    sphere whose zero level is 2k meridians between two Saddle(k)
///                 poles; symmetric under rotation by 2 columns (Z_k).
/// flower(k)       disc of k petal maxima around a Saddle(k) centre; symmetric
///                 under rotation by one petal (Z_k).
///
/// The seed drives a small jitter that keeps values level-generic and
/// distinct without breaking the documented symmetry.
struct FixtureSpec {
  enum class Kind { SphereHeight, TorusHeight, Beachball, Flower };

  Kind kind = Kind::SphereHeight;
  int k = 0;
  std::uint64_t seed = 0;

  /// Accepts "sphere_height", "torus_height", "beachball", "beachball(3)", ...
  /// A parameter in the name overrides `k`; BadParameter on unknown names.
  static FixtureSpec parse(std::string_view name, int k = 0, std::uint64_t seed = 0);
  std::string name() const;
};

/// Throws BadParameter when k < 2 for the parametrised fixtures.
SrfDocument make_fixture(const FixtureSpec& spec);

}  // namespace reebsym
