#include "bielliptic/wall.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace bielliptic {

namespace {

using Row4 = std::array<Int, 4>;

Row4 to_row(const MukaiVector& v) { return {v.r, v.a, v.b, v.s}; }
MukaiVector from_row(const Row4& x) { return {x[0], x[1], x[2], x[3]}; }

void row_axpy(Row4& dst, const Int& k, const Row4& src) {
  for (std::size_t i = 0; i < 4; ++i) dst[i] += k * src[i];
}

void row_negate(Row4& x) {
  for (auto& c : x) c = -c;
}

int first_nonzero(const Row4& x) {
  for (int i = 0; i < 4; ++i)
    if (x[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Unique row Hermite normal form of a rank-2 integer 2x4 matrix.
std::pair<Row4, Row4> hermite_2x4(Row4 b0, Row4 b1) {
  int c = 0;
  while (c < 4 && b0[static_cast<std::size_t>(c)] == 0 && b1[static_cast<std::size_t>(c)] == 0) ++c;
  auto col = static_cast<std::size_t>(c);
  while (b1[col] != 0) {
    Int q = floor_div(b0[col], b1[col]);
    row_axpy(b0, -q, b1);
    std::swap(b0, b1);
  }
  if (b0[col] < 0) row_negate(b0);
  int c2 = first_nonzero(b1);
  auto col2 = static_cast<std::size_t>(c2);
  if (b1[col2] < 0) row_negate(b1);
  row_axpy(b0, -floor_div(b0[col2], b1[col2]), b1);
  return {b0, b1};
}

// Rows spanning (Q v + Q w) intersected with Z^4. Column reduction M C = [T | 0] with W = C^-1
// gives M = [T | 0] W, and the first two rows of the unimodular W span a saturated lattice.
std::pair<Row4, Row4> saturation(const MukaiVector& v, const MukaiVector& w) {
  std::array<Row4, 2> m{to_row(v), to_row(w)};
  std::array<Row4, 4> inv{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) inv[i][j] = i == j ? 1 : 0;

  auto col_add = [&](std::size_t j, std::size_t i, const Int& k) {  // col_j += k col_i
    for (auto& row : m) row[j] += k * row[i];
    row_axpy(inv[i], -k, inv[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : m) std::swap(row[i], row[j]);
    std::swap(inv[i], inv[j]);
  };

  for (std::size_t row = 0; row < 2; ++row) {
    std::size_t p = row;
    while (true) {
      std::size_t best = 4;
      for (std::size_t c = p; c < 4; ++c)
        if (m[row][c] != 0 && (best == 4 || abs(m[row][c]) < abs(m[row][best]))) best = c;
      if (best == 4) throw PreconditionError("v and w are collinear");
      col_swap(p, best);
      bool done = true;
      for (std::size_t c = p + 1; c < 4; ++c) {
        if (m[row][c] == 0) continue;
        col_add(c, p, -floor_div(m[row][c], m[row][p]));
        if (m[row][c] != 0) done = false;
      }
      if (done) break;
    }
  }
  return {inv[0], inv[1]};
}

std::optional<std::pair<Int, Int>> primitive_direction(Int x, Int y) {
  Int g = gcd(x, y);
  if (g == 0) return std::nullopt;
  return std::pair<Int, Int>{x / g, y / g};
}

bool is_contraction_label(WallLabel l) {
  switch (l) {
    case WallLabel::HilbertChowDivisorial:
    case WallLabel::LGUDivisorial:
    case WallLabel::LGUOrd2Divisorial:
    case WallLabel::Ord2ExceptionalDivisorial:
    case WallLabel::Ord3ExceptionalDivisorial:
    case WallLabel::P1Fibration:
      return true;
    default:
      return false;
  }
}

unsigned valuation(Int n, unsigned p) {
  if (n == 0) return 0;
  n = abs(n);
  unsigned e = 0;
  while (divides(p, n)) {
    n /= p;
    ++e;
  }
  return e;
}

Int power(unsigned base, unsigned e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ArithmeticError("no inverse of " + to_string(a) + " mod " + to_string(m));
  return mod_floor(out, m);
}

// Primitive integral generator of Q_+ (1, x, x_a x_b).
MukaiVector primitive_exp(const Rational& xa, const Rational& xb) {
  Rational s = xa * xb;
  s.canonicalize();
  Int den = lcm(lcm(xa.get_den(), xb.get_den()), s.get_den());
  MukaiVector u{den, xa.get_num() * (den / xa.get_den()), xb.get_num() * (den / xb.get_den()),
                s.get_num() * (den / s.get_den())};
  return primitive_split(u).p;
}

}  // namespace

MukaiVector HyperbolicPair::combine(const Int& x, const Int& y) const { return x * e1 + y * e2; }

std::optional<std::pair<Int, Int>> HyperbolicPair::coordinates(const MukaiVector& p) const {
  Row4 a = to_row(e1), b = to_row(e2), q = to_row(p);
  auto c1 = static_cast<std::size_t>(first_nonzero(a));
  auto c2 = static_cast<std::size_t>(first_nonzero(b));
  if (!divides(a[c1], q[c1])) return std::nullopt;
  Int x = q[c1] / a[c1];
  Int rest = q[c2] - x * a[c2];
  if (!divides(b[c2], rest)) return std::nullopt;
  Int y = rest / b[c2];
  if (combine(x, y) != p) return std::nullopt;
  return std::pair<Int, Int>{x, y};
}

HyperbolicPair saturate_lattice(SurfaceType t, const MukaiVector& v, const MukaiVector& w) {
  if (square(v) <= 0) throw PreconditionError("wall lattice requires v^2 > 0, got v = " + format_vector(v));
  auto [s0, s1] = saturation(v, w);
  auto [h0, h1] = hermite_2x4(s0, s1);
  HyperbolicPair h{t, v, from_row(h0), from_row(h1), 0, 0, 0};
  h.g11 = square(h.e1);
  h.g12 = mukai_pairing(h.e1, h.e2);
  h.g22 = square(h.e2);
  if (h.det() >= 0) throw PreconditionError("span{v, w} is not hyperbolic (Gram determinant " + to_string(h.det()) + ")");
  return h;
}

std::vector<MukaiVector> isotropic_rays(const HyperbolicPair& h) {
  Int disc = h.g12 * h.g12 - h.g11 * h.g22;
  if (!is_square(disc)) return {};
  std::vector<std::pair<Int, Int>> dirs;
  if (h.g11 == 0) {
    dirs.push_back({1, 0});
    dirs.push_back({-h.g22, 2 * h.g12});
  } else {
    Int root = isqrt(disc);
    dirs.push_back({-h.g12 + root, h.g11});
    dirs.push_back({-h.g12 - root, h.g11});
  }
  std::vector<MukaiVector> out;
  for (const auto& [x, y] : dirs) {
    auto d = primitive_direction(x, y);
    if (!d) continue;
    MukaiVector u = h.combine(d->first, d->second);
    if (mukai_pairing(h.v, u) < 0) u = -u;
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Decomposition> enumerate_decompositions(const HyperbolicPair& h, int max_parts) {
  if (max_parts < 2) throw PreconditionError("max_parts must be at least 2");
  const MukaiVector& v = h.v;
  Int vv = square(v);
  Int pv1 = mukai_pairing(v, h.e1), pv2 = mukai_pairing(v, h.e2);
  // n spans v^perp in H; every a is (t/v^2) v + (u/n^2) n with t = <v,a>, u = <n,a>.
  Int n1 = pv2 * h.g11 - pv1 * h.g12;
  Int n2 = pv2 * h.g12 - pv1 * h.g22;
  Int nn_abs = -(pv2 * n1 - pv1 * n2);
  Int det2 = pv1 * n2 - pv2 * n1;

  struct Candidate {
    Int t;
    MukaiVector a;
  };
  std::vector<Candidate> cands;
  for (Int t = 1; t < vv; ++t) {
    Int m = std::min(t, Int(vv - t));
    Int cap = m * m * nn_abs;
    Int ubound = isqrt(floor_div(cap, vv));
    for (Int u = -ubound; u <= ubound; ++u) {
      if (u * u * vv > cap) continue;
      Int xn = t * n2 - pv2 * u;
      Int yn = pv1 * u - n1 * t;
      if (!divides(det2, xn) || !divides(det2, yn)) continue;
      MukaiVector a = h.combine(xn / det2, yn / det2);
      if (square(a) < 0 || square(v - a) < 0) continue;
      cands.push_back({t, a});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.t != y.t) return x.t < y.t;
    return x.a < y.a;
  });

  std::vector<Decomposition> out;
  Decomposition cur;
  // Parts are chosen in candidate order, so each later part pairs with v at least as much.
  std::function<void(std::size_t, const MukaiVector&, const Int&)> rec = [&](std::size_t start,
                                                                              const MukaiVector& rem,
                                                                              const Int& rem_t) {
    if (!cur.empty()) {
      for (std::size_t i = start; i < cands.size() && cands[i].t <= rem_t; ++i) {
        if (cands[i].t == rem_t && cands[i].a == rem) {
          Decomposition d = cur;
          d.push_back(rem);
          std::sort(d.begin(), d.end());
          out.push_back(std::move(d));
          break;
        }
      }
    }
    if (static_cast<int>(cur.size()) + 2 > max_parts) return;
    for (std::size_t i = start; i < cands.size(); ++i) {
      const Candidate& c = cands[i];
      if (2 * c.t > rem_t) break;
      MukaiVector rest = rem - c.a;
      if (square(rest) < 0) continue;
      cur.push_back(c.a);
      rec(i, rest, rem_t - c.t);
      cur.pop_back();
    }
  };
  rec(0, v, vv);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int hn_codim_bound(SurfaceType t, const std::vector<MukaiVector>& parts) {
  Int ord = ord_k(t);
  Int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const MukaiVector& a = parts[i];
    Int sq = square(a);
    if (sq < 0) throw PreconditionError("HN factor with negative square: " + format_vector(a));
    Int dim;
    if (sq > 0) {
      dim = sq;
    } else {
      PrimitiveSplit split = primitive_split(a);
      dim = floor_div(split.n * l_invariant(t, split.p), ord);
    }
    total += sq - dim;
    for (std::size_t j = i + 1; j < parts.size(); ++j) total += mukai_pairing(a, parts[j]);
  }
  return total;
}

std::string label_name(WallLabel l) {
  switch (l) {
    case WallLabel::HilbertChowDivisorial:
      return "HilbertChowDivisorial";
    case WallLabel::LGUDivisorial:
      return "LGUDivisorial";
    case WallLabel::LGUOrd2Divisorial:
      return "LGUOrd2Divisorial";
    case WallLabel::Ord2ExceptionalDivisorial:
      return "Ord2ExceptionalDivisorial";
    case WallLabel::Ord3ExceptionalDivisorial:
      return "Ord3ExceptionalDivisorial";
    case WallLabel::P1Fibration:
      return "P1Fibration";
    case WallLabel::Flopping:
      return "Flopping";
    case WallLabel::FakeWall:
      return "FakeWall";
    case WallLabel::NoWall:
      return "NoWall";
    case WallLabel::IndeterminateNonPrimitive:
      return "IndeterminateNonPrimitive";
  }
  return "?";
}

WallClassification classify_wall(const HyperbolicPair& h, int max_parts) {
  const MukaiVector& v = h.v;
  Int vv = square(v);
  if (vv <= 0) throw PreconditionError("classify_wall requires v^2 > 0");
  SurfaceType t = h.surface;
  Int ord = ord_k(t);
  bool prim = is_primitive(v);
  Int lv = prim ? l_invariant(t, v) : Int(0);

  WallClassification out;
  auto add = [&](WallLabel l, const MukaiVector& u) {
    out.labels.insert(l);
    out.witnesses[l].push_back(u);
  };

  for (const MukaiVector& u : isotropic_rays(h)) {
    Int lu = l_invariant(t, u);
    Int p = mukai_pairing(v, u);
    bool tss1 = lu == ord && p == 1;
    bool tss2 = p == 2 && lu == 2 && ord == 2 && prim && lv == 2 && vv == 4;
    if ((tss1 || tss2) && !out.totally_semistable) {
      out.totally_semistable = true;
      out.tss_witness = u;
    }
    if (vv >= 4 && tss1) add(WallLabel::HilbertChowDivisorial, u);
    if (vv >= 4 && !(vv == 4 && (ord == 2 || ord == 3)) && p == 2 && lu == ord) add(WallLabel::LGUDivisorial, u);
    if (vv == 4 && ord == 2 && prim && lv == 1 && p == 2 && lu == ord) add(WallLabel::LGUOrd2Divisorial, u);
    if (vv == 6 && ord == 2 && p == 3 && lu == ord) {
      MukaiVector d = v - u;
      if (divides(3, d.r) && divides(3, d.a) && divides(3, d.b) && divides(3, d.s))
        add(WallLabel::Ord2ExceptionalDivisorial, u);
    }
    if (vv == 6 && ord == 3 && p == 3 && lu == 3) add(WallLabel::Ord3ExceptionalDivisorial, u);
    if (tss2) add(WallLabel::P1Fibration, u);
  }

  std::vector<Decomposition> decomps = enumerate_decompositions(h, max_parts);
  for (const auto& d : decomps) {
    Int c = hn_codim_bound(t, d);
    if (!out.codim_bound || c < *out.codim_bound) out.codim_bound = c;
  }

  bool contracted = std::any_of(out.labels.begin(), out.labels.end(), is_contraction_label);
  if (!contracted) {
    if (!prim) {
      out.labels.insert(WallLabel::IndeterminateNonPrimitive);
    } else if (!decomps.empty()) {
      auto two = std::find_if(decomps.begin(), decomps.end(), [](const Decomposition& d) { return d.size() == 2; });
      const Decomposition& wit = two != decomps.end() ? *two : decomps.front();
      WallLabel l = vv >= 4 ? WallLabel::Flopping : WallLabel::FakeWall;
      for (const auto& a : wit) add(l, a);
    } else {
      out.labels.insert(WallLabel::NoWall);
    }
  }
  return out;
}

IsotropicApproximation approximate_isotropic_full_l(SurfaceType t, const MukaiVector& w, const Int& n) {
  if (w.r < 1) throw PreconditionError("approximation requires rank(w) >= 1");
  if (!is_primitive(w)) throw PreconditionError("approximation requires primitive w");
  if (square(w) != 0) throw PreconditionError("approximation requires isotropic w");
  if (n < 1) throw PreconditionError("approximation index n must be >= 1");
  const int ord = ord_k(t);
  Rational target_a(w.a, w.r), target_b(w.b, w.r);
  target_a.canonicalize();
  target_b.canonicalize();

  // Slope D'/r' in lowest terms with gcd(r', ord) = 1.
  Int r1 = w.r, da = w.a, db = w.b;
  {
    Int g = gcd(gcd(r1, da), db);
    r1 /= g;
    da /= g;
    db /= g;
  }
  if (Int d0 = gcd(r1, Int(ord)); d0 != 1) {
    Int k = Int(ord) / d0;
    Int den = n * k * r1 + 1;
    da *= n * k;
    db *= n * k;
    r1 = den;
    Int g = gcd(gcd(r1, da), db);
    r1 /= g;
    da /= g;
    db /= g;
  }

  const unsigned x2 = valuation(Int(ord), 2), x3 = valuation(Int(ord), 3);
  Int content_d = gcd(da, db);
  unsigned i2 = valuation(content_d, 2), j3 = valuation(content_d, 3);
  Int ab0 = content_d == 0 ? Int(0) : Int((da / content_d) * (db / content_d));
  unsigned k2 = valuation(ab0, 2), l3 = valuation(ab0, 3);
  unsigned e2 = x2 + i2 + k2, e3 = x3 + j3 + l3;
  // r' must be a unit mod T, so a prime of T dividing r' is dropped from T.
  if (divides(2, r1)) e2 = 0;
  if (divides(3, r1)) e3 = 0;
  Int modulus = power(2, e2) * power(3, e3);
  Int r_tilde = modulus == 1 ? Int(0) : inverse_mod(r1, modulus);

  constexpr long kSearch = 100000;
  for (long step = 0; step < kSearch; ++step) {
    Int n_tilde = modulus * (n + step) - r_tilde;
    if (n_tilde < 1) continue;
    Int den = n_tilde * r1 + 1;
    Rational xa = da == 0 ? Rational(Int(1), den) : Rational(n_tilde * da, den);
    Rational xb = db == 0 ? Rational(Int(1), den) : Rational(n_tilde * db, den);
    xa.canonicalize();
    xb.canonicalize();
    MukaiVector v0 = primitive_exp(xa, xb);
    if (l_invariant(t, v0) != ord) continue;
    Rational gap = std::max(abs(Rational(xa - target_a)), abs(Rational(xb - target_b)));
    gap.canonicalize();
    return {v0, gap, n_tilde};
  }
  throw ArithmeticError("no approximant with l = ord(K_S) found for w = " + format_vector(w));
}

}  // namespace bielliptic
