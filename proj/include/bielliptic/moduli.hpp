#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bielliptic/lattice.hpp"
#include "bielliptic/transforms.hpp"

namespace bielliptic {

struct NonEmptinessReport {
  bool muss_nonempty = false;
  bool mus_nonempty = false;
  std::optional<Int> stable_dimension;
  std::optional<Exceptional> exceptional;
  std::vector<std::string> notes;
};

// Gieseker moduli for a generic polarization; requires r >= 1.
NonEmptinessReport gieseker_report(SurfaceType t, const MukaiVector& v);

bool bridgeland_nonempty(SurfaceType t, const MukaiVector& v);

// Ordered from best to worst.
enum class SingularityClass { Smooth, TerminalLCI, Canonical, NormalGorensteinTorsionK, PossiblyNonNormal };

std::string singularity_class_name(SingularityClass c);

struct SingularityCase {
  std::string condition;
  SingularityClass cls;
};

struct SingularityReport {
  std::vector<SingularityCase> cases;
  Rational sing_dim_bound;
  std::vector<std::string> notes;
};

// Requires v primitive with v^2 >= 0.
SingularityReport singularity_report(SurfaceType t, const MukaiVector& v, bool generic_surface);

}  // namespace bielliptic
