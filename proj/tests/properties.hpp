#pragma once

// Randomized invariant checks shared by the property test binary and the acceptance runner.

#include <functional>
#include <string>
#include <vector>

#include "bielliptic/moduli.hpp"
#include "bielliptic/oracle.hpp"
#include "bielliptic/stability.hpp"
#include "bielliptic/transforms.hpp"
#include "bielliptic/wall.hpp"
#include "oracles.hpp"

namespace props {

using namespace bielliptic;

struct Outcome {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what();
  }
};

inline std::string fv(const MukaiVector& v) { return format_vector(v); }

inline MukaiVector random_primitive(oracle::Rng& rng, long rlo, long rhi, long bound) {
  for (;;) {
    MukaiVector v = rng.vector(rlo, rhi, bound);
    if (oracle::primitive(v)) return v;
  }
}

constexpr StepKind kAllSteps[] = {StepKind::TwistBy, StepKind::Dual,       StepKind::Shift,      StepKind::Phi,
                                  StepKind::PhiInv,  StepKind::Psi,        StepKind::PsiInv,     StepKind::Type6AMove,
                                  StepKind::Ord3BMove, StepKind::PsiDualMove};

inline Outcome pairing_bilinear(long n) {
  Outcome o{"pairing bilinear and symmetric"};
  oracle::Rng rng(101);
  for (long i = 0; i < n; ++i) {
    MukaiVector u = rng.vector(-50, 50, 50), v = rng.vector(-50, 50, 50), w = rng.vector(-50, 50, 50);
    Int k = rng.uniform(-9, 9);
    bool ok = mukai_pairing(v, w) == mukai_pairing(w, v) && mukai_pairing(v, w) == oracle::pairing(v, w) &&
              mukai_pairing(u + k * v, w) == mukai_pairing(u, w) + k * mukai_pairing(v, w);
    o.check(ok, [&] { return fv(u) + " " + fv(v) + " " + fv(w); });
  }
  return o;
}

inline Outcome steps_are_isometries(long n) {
  Outcome o{"every transform step is an isometry"};
  oracle::Rng rng(202);
  for (long i = 0; i < n; ++i) {
    SurfaceType t(static_cast<int>(rng.uniform(1, 7)));
    MukaiVector v = rng.vector(-30, 30, 30), w = rng.vector(-30, 30, 30);
    for (StepKind k : kAllSteps) {
      if (!step_valid_for(t, k)) continue;
      TransformStep s = k == StepKind::TwistBy ? TransformStep::twist_by(rng.uniform(-5, 5), rng.uniform(-5, 5))
                                               : TransformStep::of(k);
      MukaiVector tv = apply_transform(t, s, v), tw = apply_transform(t, s, w);
      o.check(oracle::pairing(tv, tw) == oracle::pairing(v, w),
              [&] { return step_name(k) + " on type " + std::to_string(t.index()) + " " + fv(v) + " " + fv(w); });
    }
  }
  return o;
}

inline Outcome l_divides_ord(long n) {
  Outcome o{"l(v) | ord and pi^*v / l(v) primitive"};
  oracle::Rng rng(303);
  for (long i = 0; i < n; ++i) {
    int type = static_cast<int>(rng.uniform(1, 7));
    SurfaceType t(type);
    MukaiVector v = random_primitive(rng, -40, 40, 40);
    Int l = l_invariant(t, v);
    CoverMukaiVector c = pullback_canonical(t, v);
    CoverMukaiVector reduced{c.r / l, c.alpha / l, c.beta / l, c.s / l, c.lambda};
    bool ok = l == oracle::l_of(type, v) && divides(l, Int(oracle::invariants(type).ord)) && content(reduced) == 1;
    o.check(ok, [&] { return "type " + std::to_string(type) + " " + fv(v); });
  }
  return o;
}

inline Outcome pullback_scales_pairing(long n) {
  Outcome o{"<pi^*v, pi^*w> = ord <v, w>"};
  oracle::Rng rng(404);
  for (long i = 0; i < n; ++i) {
    int type = static_cast<int>(rng.uniform(1, 7));
    SurfaceType t(type);
    MukaiVector v = rng.vector(-40, 40, 40), w = rng.vector(-40, 40, 40);
    Int expect = Int(oracle::invariants(type).ord) * oracle::pairing(v, w);
    bool ok = cover_pairing(pullback_canonical(t, v), pullback_canonical(t, w)) == expect &&
              oracle::cover_pair(type, oracle::cover(type, v), oracle::cover(type, w)) == expect;
    o.check(ok, [&] { return "type " + std::to_string(type) + " " + fv(v) + " " + fv(w); });
  }
  return o;
}

inline Outcome isotropic_series_divisible(long n) {
  Outcome o{"r | <u, v'> for v' in the (r, D) series"};
  oracle::Rng rng(505);
  for (long i = 0; i < n; ++i) {
    Int r = rng.uniform(1, 30);
    DivisorClass d{rng.uniform(-30, 30), rng.uniform(-30, 30)};
    if (oracle::gcd4(r, d.a, d.b, 0) != 1) {
      --i;
      continue;
    }
    MukaiVector u = primitive_isotropic_in_series(r, d);
    Int np = rng.uniform(-10, 10);
    MukaiVector vp{np * r, np * d.a, np * d.b, rng.uniform(-200, 200)};
    Int n0 = u.r / r;
    bool ok = oracle::pairing(u, u) == 0 && oracle::primitive(u) && u.r == n0 * r && u.a == n0 * d.a &&
              u.b == n0 * d.b && n0 >= 1 && divides(r, oracle::pairing(u, vp));
    o.check(ok, [&] { return "r=" + to_string(r) + " D=" + to_string(d.a) + "," + to_string(d.b) + " u=" + fv(u); });
  }
  return o;
}

inline Outcome positive_pairs_codim(long n) {
  Outcome o{"hn_codim_bound > 2 for positive-square pairs spanning a hyperbolic plane"};
  oracle::Rng rng(606);
  while (o.cases < n) {
    int type = static_cast<int>(rng.uniform(1, 7));
    MukaiVector a1 = rng.vector(-8, 8, 8), a2 = rng.vector(-8, 8, 8);
    Int s1 = oracle::pairing(a1, a1), s2 = oracle::pairing(a2, a2), p = oracle::pairing(a1, a2);
    if (s1 <= 0 || s2 <= 0 || p <= 0 || s1 * s2 - p * p >= 0) continue;
    Int c = hn_codim_bound(SurfaceType(type), {a1, a2});
    o.check(c > 2, [&] { return fv(a1) + " " + fv(a2) + " -> " + to_string(c); });
  }
  return o;
}

inline Outcome bayer_macri_orthogonal(long n) {
  Outcome o{"<xi_sigma, v> = 0"};
  oracle::Rng rng(707);
  while (o.cases < n) {
    SurfaceType t(static_cast<int>(rng.uniform(1, 7)));
    MukaiVector v = rng.vector(-20, 20, 20);
    auto q = [&](long lo, long hi) { return Rational(Int(rng.uniform(lo, hi)), Int(rng.uniform(1, 9))); };
    Rational ba = q(-20, 20), bb = q(-20, 20), wa = q(1, 20), wb = q(1, 20);
    ba.canonicalize(), bb.canonicalize(), wa.canonicalize(), wb.canonicalize();
    GeometricStability sigma{{ba, bb}, {wa, wb}};
    ComplexRational z = central_charge(t, v, sigma);
    if (z.re == 0 && z.im == 0) continue;
    RationalMukaiVector xi = bayer_macri_class(t, v, sigma);
    o.check(mukai_pairing(xi, to_rational(v)) == 0, [&] { return fv(v); });
  }
  return o;
}

inline Outcome classifier_matches_oracle(long n) {
  Outcome o{"classify_wall codim_bound = brute-force oracle"};
  oracle::Rng rng(808);
  while (o.cases < n) {
    SurfaceType t(static_cast<int>(rng.uniform(1, 7)));
    MukaiVector v = rng.vector(0, 3, 3), w = rng.vector(-3, 3, 3);
    if (oracle::pairing(v, v) <= 0 || oracle::pairing(v, v) > 12 || !linearly_independent(v, w)) continue;
    std::optional<HyperbolicPair> h;
    try {
      h = saturate_lattice(t, v, w);
    } catch (const PreconditionError&) {
      continue;
    }
    auto a = classify_wall(*h).codim_bound;
    auto b = min_codim_oracle(*h);
    o.check(a == b, [&] {
      auto s = [](const std::optional<Int>& x) { return x ? to_string(*x) : std::string("inf"); };
      return "type " + std::to_string(t.index()) + " v=" + fv(v) + " w=" + fv(w) + " classifier " + s(a) + " oracle " +
             s(b);
    });
  }
  return o;
}

inline std::vector<Outcome> run_all() {
  constexpr long kCases = 10000;
  return {pairing_bilinear(kCases),       steps_are_isometries(kCases),    l_divides_ord(kCases),
          pullback_scales_pairing(kCases), isotropic_series_divisible(kCases), positive_pairs_codim(kCases),
          bayer_macri_orthogonal(kCases),  classifier_matches_oracle(200)};
}

}  // namespace props
