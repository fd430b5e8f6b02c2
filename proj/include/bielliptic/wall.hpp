#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bielliptic/lattice.hpp"

namespace bielliptic {

// Rank-2 primitive sublattice containing v with Gram matrix of signature (1,-1).
struct HyperbolicPair {
  SurfaceType surface;
  MukaiVector v;
  MukaiVector e1, e2;  // row Hermite normal form of the saturation
  Int g11, g12, g22;

  Int det() const { return g11 * g22 - g12 * g12; }
  MukaiVector combine(const Int& x, const Int& y) const;
  // Integer coordinates of p in (e1, e2), or nullopt when p is outside the lattice.
  std::optional<std::pair<Int, Int>> coordinates(const MukaiVector& p) const;
};

// Saturation of span{v, w}; requires v^2 > 0, w independent of v, and a hyperbolic result.
HyperbolicPair saturate_lattice(SurfaceType t, const MukaiVector& v, const MukaiVector& w);

// Primitive isotropic classes u of H with <v,u> > 0, sorted; empty or two entries.
std::vector<MukaiVector> isotropic_rays(const HyperbolicPair& h);

using Decomposition = std::vector<MukaiVector>;  // nondecreasing

// Every multiset of 2..max_parts classes a in H with a^2 >= 0, <v,a> > 0, summing to v; sorted.
std::vector<Decomposition> enumerate_decompositions(const HyperbolicPair& h, int max_parts = 4);

Int hn_codim_bound(SurfaceType t, const std::vector<MukaiVector>& parts);

enum class WallLabel {
  HilbertChowDivisorial,
  LGUDivisorial,
  LGUOrd2Divisorial,
  Ord2ExceptionalDivisorial,
  Ord3ExceptionalDivisorial,
  P1Fibration,
  Flopping,
  FakeWall,
  NoWall,
  IndeterminateNonPrimitive,
};

std::string label_name(WallLabel l);

struct WallClassification {
  bool totally_semistable = false;
  std::optional<MukaiVector> tss_witness;
  std::set<WallLabel> labels;
  std::map<WallLabel, std::vector<MukaiVector>> witnesses;
  std::optional<Int> codim_bound;  // nullopt encodes +infinity
};

WallClassification classify_wall(const HyperbolicPair& h, int max_parts = 4);

struct IsotropicApproximation {
  MukaiVector v0;
  Rational ray_gap;   // max-norm distance between c1/r of w and of v0
  Int n_tilde;        // multiplier used by the congruence stage
};

// w primitive isotropic with r >= 1, n >= 1.
IsotropicApproximation approximate_isotropic_full_l(SurfaceType t, const MukaiVector& w, const Int& n);

}  // namespace bielliptic
