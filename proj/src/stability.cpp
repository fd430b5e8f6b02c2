#include "bielliptic/stability.hpp"

#include <algorithm>
#include <array>

namespace bielliptic {

namespace {

Rational sq(const RationalDivisor& d) { return intersect(d, d); }

// z / Z(v) written as Im(z * conj Z) / |Z|^2; |Z|^2 > 0.
Rational im_ratio(const ComplexRational& z, const ComplexRational& zv, const Rational& norm) {
  Rational out = (z.im * zv.re - z.re * zv.im) / norm;
  out.canonicalize();
  return out;
}

}  // namespace

ComplexRational operator+(const ComplexRational& x, const ComplexRational& y) { return {x.re + y.re, x.im + y.im}; }

ComplexRational operator*(const ComplexRational& x, const ComplexRational& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

ComplexRational central_charge(SurfaceType, const MukaiVector& v, const GeometricStability& sigma) {
  RationalDivisor c = to_rational(v.c1());
  Rational r(v.r), s(v.s);
  const auto& b = sigma.beta;
  const auto& w = sigma.omega;
  ComplexRational z{intersect(b, c) - s - r * (sq(b) - sq(w)) / 2, intersect(w, c) - r * intersect(b, w)};
  z.re.canonicalize();
  z.im.canonicalize();
  return z;
}

bool same_ray(SurfaceType t, const MukaiVector& v, const MukaiVector& w, const GeometricStability& sigma) {
  ComplexRational zv = central_charge(t, v, sigma);
  if (zv.re == 0 && zv.im == 0) throw DegenerateChargeError("Z(v) = 0 for v = " + format_vector(v));
  ComplexRational p = central_charge(t, w, sigma) * conj(zv);
  return p.im == 0 && p.re > 0;
}

RationalMukaiVector bayer_macri_class(SurfaceType t, const MukaiVector& v, const GeometricStability& sigma) {
  ComplexRational zv = central_charge(t, v, sigma);
  Rational norm = zv.re * zv.re + zv.im * zv.im;
  if (norm == 0) throw DegenerateChargeError("Z(v) = 0 for v = " + format_vector(v));
  const auto& b = sigma.beta;
  const auto& w = sigma.omega;
  // exp(beta + i omega) = (1, beta + i omega, (beta^2 - omega^2)/2 + i beta.omega)
  ComplexRational e_r{1, 0};
  ComplexRational e_a{b.a, w.a};
  ComplexRational e_b{b.b, w.b};
  ComplexRational e_s{(sq(b) - sq(w)) / 2, intersect(b, w)};
  return {im_ratio(e_r, zv, norm), im_ratio(e_a, zv, norm), im_ratio(e_b, zv, norm), im_ratio(e_s, zv, norm)};
}

bool linearly_independent(const MukaiVector& v, const MukaiVector& w) {
  std::array<const Int*, 4> x{&v.r, &v.a, &v.b, &v.s};
  std::array<const Int*, 4> y{&w.r, &w.a, &w.b, &w.s};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*x[i] * *y[j] - *x[j] * *y[i] != 0) return true;
  return false;
}

WallLocus wall_in_slice(SurfaceType, const MukaiVector& v, const MukaiVector& w, const DivisorClass& h0) {
  if (h0.a <= 0 || h0.b <= 0) throw PreconditionError("H0 must be ample (both coefficients > 0)");
  if (!linearly_independent(v, w)) throw PreconditionError("v and w are collinear");
  Int h = intersect(h0, h0);
  Int ev = intersect(v.c1(), h0);
  Int ew = intersect(w.c1(), h0);
  Int k = w.r * ev - v.r * ew;
  // 2 Im(Z(w) conj Z(v)) / y, expanded in x and y.
  Int alpha = -h * k;
  Int beta = 2 * h * (w.r * v.s - v.r * w.s);
  Int gamma = 2 * (ev * w.s - ew * v.s);
  if (alpha == 0 && beta == 0 && gamma == 0) return {WallLocus::Kind::Everywhere, 0, 0, 0};
  if (alpha == 0 && beta == 0) return {WallLocus::Kind::Nowhere, 0, 0, 0};
  Int g = gcd(gcd(alpha, beta), gamma);
  alpha /= g;
  beta /= g;
  gamma /= g;
  int lead = alpha != 0 ? sign(alpha) : sign(beta);
  if (lead < 0) {
    alpha = -alpha;
    beta = -beta;
    gamma = -gamma;
  }
  if (alpha != 0 && beta * beta - 4 * alpha * gamma <= 0) return {WallLocus::Kind::Nowhere, 0, 0, 0};
  return {WallLocus::Kind::Quadratic, alpha, beta, gamma};
}

Rational slice_cross(SurfaceType t, const MukaiVector& v, const MukaiVector& w, const DivisorClass& h0,
                     const SlicePoint& p) {
  RationalDivisor hr = to_rational(h0);
  GeometricStability sigma{{p.x * hr.a, p.x * hr.b}, {p.y * hr.a, p.y * hr.b}};
  ComplexRational prod = central_charge(t, w, sigma) * conj(central_charge(t, v, sigma));
  prod.im.canonicalize();
  return prod.im;
}

std::vector<SlicePoint> sample_locus(const WallLocus& locus, int k) {
  std::vector<SlicePoint> out;
  if (k <= 0 || locus.kind == WallLocus::Kind::Nowhere) return out;
  if (locus.kind == WallLocus::Kind::Everywhere) {
    for (int j = 1; j <= k; ++j) out.push_back({Rational(j - 1), Rational(j)});
    return out;
  }
  if (locus.alpha == 0) {
    Rational x(-locus.gamma, locus.beta);
    x.canonicalize();
    for (int j = 1; j <= k; ++j) out.push_back({x, Rational(j)});
    return out;
  }
  // (2 alpha x + beta)^2 + (2 alpha y)^2 = n, n > 0.
  const Int& al = locus.alpha;
  Int n = locus.beta * locus.beta - 4 * al * locus.gamma;
  Int x0 = -1, y0 = 0;
  Int top = isqrt(n);
  for (Int x = 0; x <= top; ++x) {
    Int rest = n - x * x;
    if (is_square(rest)) {
      x0 = x;
      y0 = isqrt(rest);
      break;
    }
  }
  if (x0 < 0) return out;
  Rational X0(x0), Y0(y0);
  auto push = [&](Rational X, Rational Y) {
    if (Y == 0) return;
    if (Y < 0) Y = -Y;
    SlicePoint p{(X - locus.beta) / (2 * al), Y / (2 * al)};
    p.x.canonicalize();
    p.y.canonicalize();
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  push(X0, Y0);
  // Second intersections of lines of rational slope m through (X0, Y0).
  for (long num = 1; static_cast<int>(out.size()) < k && num < 64L * (k + 1); ++num) {
    for (long den = 1; den <= num && static_cast<int>(out.size()) < k; ++den) {
      if (gcd(Int(num), Int(den)) != 1) continue;
      for (int sgn_m : {1, -1}) {
        Rational m(Int(sgn_m * num), Int(den));
        m.canonicalize();
        Rational tpar = -2 * (X0 + m * Y0) / (1 + m * m);
        push(X0 + tpar, Y0 + m * tpar);
        if (static_cast<int>(out.size()) >= k) break;
      }
    }
  }
  if (static_cast<int>(out.size()) > k) out.resize(static_cast<std::size_t>(k));
  return out;
}

}  // namespace bielliptic
