#include "bielliptic/lattice.hpp"

#include <string>
#include <vector>

namespace bielliptic {

namespace {

std::strong_ordering cmp_int(const Int& x, const Int& y) {
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

Int intersect(const DivisorClass& d, const DivisorClass& e) { return d.a * e.b + e.a * d.b; }

std::strong_ordering operator<=>(const MukaiVector& x, const MukaiVector& y) {
  if (auto c = cmp_int(x.r, y.r); c != 0) return c;
  if (auto c = cmp_int(x.a, y.a); c != 0) return c;
  if (auto c = cmp_int(x.b, y.b); c != 0) return c;
  return cmp_int(x.s, y.s);
}

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y) {
  return {x.r + y.r, x.a + y.a, x.b + y.b, x.s + y.s};
}
MukaiVector operator-(const MukaiVector& x, const MukaiVector& y) {
  return {x.r - y.r, x.a - y.a, x.b - y.b, x.s - y.s};
}
MukaiVector operator-(const MukaiVector& x) { return {-x.r, -x.a, -x.b, -x.s}; }
MukaiVector operator*(const Int& k, const MukaiVector& x) {
  return {k * x.r, k * x.a, k * x.b, k * x.s};
}

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
  return v.a * w.b + w.a * v.b - v.r * w.s - w.r * v.s;
}

Int content(const MukaiVector& v) { return gcd(gcd(v.r, v.a), gcd(v.b, v.s)); }

PrimitiveSplit primitive_split(const MukaiVector& v) {
  Int n = content(v);
  if (n == 0) throw PreconditionError("zero Mukai vector has no primitive part");
  return {n, {v.r / n, v.a / n, v.b / n, v.s / n}};
}

Int cover_pairing(const CoverMukaiVector& u, const CoverMukaiVector& w) {
  if (u.lambda != w.lambda) throw PreconditionError("cover vectors use different A_X.B_X");
  return Int(u.lambda) * (u.alpha * w.beta + w.alpha * u.beta) - u.r * w.s - w.r * u.s;
}

Int content(const CoverMukaiVector& u) { return gcd(gcd(u.r, u.alpha), gcd(u.beta, u.s)); }

CoverMukaiVector pullback_canonical(SurfaceType t, const MukaiVector& v) {
  SurfaceData d = surface_invariants(t);
  int ratio = d.ord_k / d.lambda;
  return {v.r, v.a, ratio * v.b, d.ord_k * v.s, d.lambda};
}

Int l_invariant(SurfaceType t, const MukaiVector& v) {
  if (!is_primitive(v)) throw PreconditionError("l(v) requires primitive v, got " + format_vector(v));
  return content(pullback_canonical(t, v));
}

IntermediatePullback pullback_intermediate(SurfaceType t, IntermediateKind kind, int d, const MukaiVector& v) {
  SurfaceData s = surface_invariants(t);
  if (kind == IntermediateKind::OrderDivisor) {
    if (d <= 1 || d >= s.ord_k || s.ord_k % d != 0)
      throw PreconditionError("d=" + std::to_string(d) + " is not a proper divisor of ord(K_S)=" +
                              std::to_string(s.ord_k));
    return {{v.r, v.a, d * v.b, d * v.s}, s.ord_k / d, s.lambda};
  }
  if (s.lambda == 1) throw PreconditionError("lambda-cover requires lambda > 1");
  return {{v.r, s.lambda * v.a, v.b, s.lambda * v.s}, s.ord_k, 1};
}

DivisorNumerics divisor_numerics(SurfaceType t, const DivisorClass& d) {
  SurfaceData s = surface_invariants(t);
  return {d.a * d.b, d.a > 0 && d.b > 0, d.a >= 0 && d.b >= 0, s.lambda * d.a, s.ord_k * d.b};
}

Rational intersect(const RationalDivisor& d, const RationalDivisor& e) { return d.a * e.b + e.a * d.b; }

Rational mukai_pairing(const RationalMukaiVector& v, const RationalMukaiVector& w) {
  return v.a * w.b + w.a * v.b - v.r * w.s - w.r * v.s;
}

RationalMukaiVector to_rational(const MukaiVector& v) {
  return {Rational(v.r), Rational(v.a), Rational(v.b), Rational(v.s)};
}

RationalDivisor to_rational(const DivisorClass& d) { return {Rational(d.a), Rational(d.b)}; }

const Rational& Slope::value() const {
  if (infinite_) throw PreconditionError("infinite slope has no rational value");
  return value_;
}

bool operator==(const Slope& x, const Slope& y) {
  if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
  return x.value_ == y.value_;
}

std::strong_ordering operator<=>(const Slope& x, const Slope& y) {
  if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
  if (x.infinite_) return std::strong_ordering::greater;
  if (y.infinite_) return std::strong_ordering::less;
  int c = cmp(x.value_, y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Slope slope(const MukaiVector& v, const RationalDivisor& omega, const RationalDivisor& beta) {
  if (!is_ample(omega)) throw PreconditionError("slope requires ample omega");
  if (v.r == 0) return Slope::infinity();
  RationalDivisor twisted{v.a - v.r * beta.a, v.b - v.r * beta.b};
  Rational q = intersect(omega, twisted) / Rational(v.r);
  q.canonicalize();
  return Slope::finite(q);
}

MukaiVector primitive_isotropic_in_series(const Int& r, const DivisorClass& d) {
  if (r < 1) throw PreconditionError("primitive_isotropic_in_series requires r >= 1");
  if (gcd(gcd(r, d.a), d.b) != 1) throw PreconditionError("primitive_isotropic_in_series requires gcd(r,a,b)=1");
  // u^2 = 0 forces s0 = n0 ab / r; n0 = r / gcd(r, ab) is the least clearing multiplier.
  Int ab = d.a * d.b;
  Int g = gcd(r, ab);
  Int n0 = r / g;
  Int s0 = ab / g;
  return {n0 * r, n0 * d.a, n0 * d.b, s0};
}

std::string format_vector(const MukaiVector& v) {
  return to_string(v.r) + "," + to_string(v.a) + "," + to_string(v.b) + "," + to_string(v.s);
}

MukaiVector parse_vector(std::string_view text) {
  auto parts = split_commas(text);
  if (parts.size() != 4)
    throw ParseError("Mukai vector must be 'r,a,b,s', got '" + std::string(text) + "'");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
}

DivisorClass parse_divisor(std::string_view text) {
  auto parts = split_commas(text);
  if (parts.size() != 2) throw ParseError("divisor must be 'a,b', got '" + std::string(text) + "'");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

std::string format_slope(const Slope& s) { return s.is_infinite() ? "+inf" : to_string(s.value()); }

}  // namespace bielliptic
