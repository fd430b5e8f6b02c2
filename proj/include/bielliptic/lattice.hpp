#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "bielliptic/arith.hpp"
#include "bielliptic/surface.hpp"

namespace bielliptic {

// a*A0 + b*B0 in Num(S), with A0.B0 = 1 and A0^2 = B0^2 = 0.
struct DivisorClass {
  Int a, b;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

Int intersect(const DivisorClass& d, const DivisorClass& e);

// (r, a*A0 + b*B0, s).
struct MukaiVector {
  Int r, a, b, s;

  DivisorClass c1() const { return {a, b}; }
  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend std::strong_ordering operator<=>(const MukaiVector& x, const MukaiVector& y);
};

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x);
MukaiVector operator*(const Int& k, const MukaiVector& x);

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w);
inline Int square(const MukaiVector& v) { return mukai_pairing(v, v); }

// gcd of all four coordinates; 0 only for the zero vector.
Int content(const MukaiVector& v);
inline bool is_primitive(const MukaiVector& v) { return content(v) == 1; }

// v = n * p with p primitive and n > 0; v != 0.
struct PrimitiveSplit {
  Int n;
  MukaiVector p;
};
PrimitiveSplit primitive_split(const MukaiVector& v);

// Vector on the canonical cover X in the basis (A_X, B_X), A_X.B_X = lambda.
struct CoverMukaiVector {
  Int r, alpha, beta, s;
  int lambda;
  friend bool operator==(const CoverMukaiVector&, const CoverMukaiVector&) = default;
};

Int cover_pairing(const CoverMukaiVector& u, const CoverMukaiVector& w);
Int content(const CoverMukaiVector& u);

Int l_invariant(SurfaceType t, const MukaiVector& v);
CoverMukaiVector pullback_canonical(SurfaceType t, const MukaiVector& v);

enum class IntermediateKind { OrderDivisor, LambdaCover };

// The pulled-back vector lives on a bielliptic surface with these invariants.
struct IntermediatePullback {
  MukaiVector v;
  int ord_k;
  int lambda;
};

// d is read only for OrderDivisor and must be a proper divisor (d > 1) of ord_k.
IntermediatePullback pullback_intermediate(SurfaceType t, IntermediateKind kind, int d, const MukaiVector& v);

struct DivisorNumerics {
  Int chi;
  bool ample;
  bool effective_cone_ok;
  Int d_pA;
  Int d_pB;
};

DivisorNumerics divisor_numerics(SurfaceType t, const DivisorClass& d);

struct RationalDivisor {
  Rational a, b;
  friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;
};

struct RationalMukaiVector {
  Rational r, a, b, s;
  friend bool operator==(const RationalMukaiVector&, const RationalMukaiVector&) = default;
};

Rational intersect(const RationalDivisor& d, const RationalDivisor& e);
Rational mukai_pairing(const RationalMukaiVector& v, const RationalMukaiVector& w);
RationalMukaiVector to_rational(const MukaiVector& v);
RationalDivisor to_rational(const DivisorClass& d);

inline bool is_ample(const RationalDivisor& d) { return d.a > 0 && d.b > 0; }

// Value of the twisted slope; rank-zero classes get +infinity, which sits above every rational.
class Slope {
 public:
  static Slope infinity() { return Slope(true, Rational(0)); }
  static Slope finite(const Rational& q) { return Slope(false, q); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;  // precondition: finite

  friend bool operator==(const Slope& x, const Slope& y);
  friend std::strong_ordering operator<=>(const Slope& x, const Slope& y);

 private:
  Slope(bool inf, Rational q) : infinite_(inf), value_(std::move(q)) {}
  bool infinite_;
  Rational value_;
};

Slope slope(const MukaiVector& v, const RationalDivisor& omega, const RationalDivisor& beta);

// The primitive isotropic vector (n0 r, n0 D, s0) with minimal n0 > 0.
MukaiVector primitive_isotropic_in_series(const Int& r, const DivisorClass& d);

std::string format_vector(const MukaiVector& v);       // "r,a,b,s"
MukaiVector parse_vector(std::string_view text);       // throws ParseError
DivisorClass parse_divisor(std::string_view text);     // "a,b"
std::string format_slope(const Slope& s);              // "p/q" or "+inf"

}  // namespace bielliptic
