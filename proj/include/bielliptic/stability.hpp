#pragma once

#include <vector>

#include "bielliptic/lattice.hpp"

namespace bielliptic {

struct ComplexRational {
  Rational re, im;
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

ComplexRational operator+(const ComplexRational& x, const ComplexRational& y);
ComplexRational operator*(const ComplexRational& x, const ComplexRational& y);
ComplexRational conj(const ComplexRational& z);

// sigma_{omega,beta}; omega ample.
struct GeometricStability {
  RationalDivisor beta;
  RationalDivisor omega;
};

ComplexRational central_charge(SurfaceType t, const MukaiVector& v, const GeometricStability& sigma);

// Throws DegenerateChargeError when Z(v) = 0.
bool same_ray(SurfaceType t, const MukaiVector& v, const MukaiVector& w, const GeometricStability& sigma);

RationalMukaiVector bayer_macri_class(SurfaceType t, const MukaiVector& v, const GeometricStability& sigma);

// alpha (x^2 + y^2) + beta x + gamma = 0 in the slice beta = x H0, omega = y H0, y > 0.
struct WallLocus {
  enum class Kind { Quadratic, Everywhere, Nowhere };
  Kind kind;
  Int alpha, beta, gamma;  // content 1, first nonzero coefficient positive; zero unless Quadratic
};

WallLocus wall_in_slice(SurfaceType t, const MukaiVector& v, const MukaiVector& w, const DivisorClass& h0);

struct SlicePoint {
  Rational x, y;  // y > 0
  friend bool operator==(const SlicePoint&, const SlicePoint&) = default;
};

// Im(Z(w) * conj(Z(v))) at the slice point (x, y).
Rational slice_cross(SurfaceType t, const MukaiVector& v, const MukaiVector& w, const DivisorClass& h0,
                     const SlicePoint& p);

// Up to k distinct rational points of the locus with y > 0; empty when the locus has none.
std::vector<SlicePoint> sample_locus(const WallLocus& locus, int k);

bool linearly_independent(const MukaiVector& v, const MukaiVector& w);

}  // namespace bielliptic
