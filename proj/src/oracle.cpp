#include "bielliptic/oracle.hpp"

#include <algorithm>
#include <functional>

namespace bielliptic {

namespace {

int floor_div_int(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

// Coordinates (x, y) in the basis of H; the pairing is read off the Gram matrix only.
struct Point {
  Int x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

bool point_less(const Point& p, const Point& q) { return p.x != q.x ? p.x < q.x : p.y < q.y; }

struct Form {
  Int g11, g12, g22;
  Int operator()(const Point& p, const Point& q) const {
    return g11 * p.x * q.x + g12 * (p.x * q.y + q.x * p.y) + g22 * p.y * q.y;
  }
};

// gcd over the cover coordinates of a primitive 4-vector.
Int cover_gcd(const SurfaceData& d, const MukaiVector& u) {
  Int g = 0;
  const Int coords[] = {u.r, u.a, Int(d.ord_k / d.lambda) * u.b, Int(d.ord_k) * u.s};
  for (const Int& c : coords) g = gcd(g, c);
  return g;
}

}  // namespace

bool satisfies_floor_equation(const EqualityCase& c) {
  return -floor_div_int(c.b1 * c.l1, c.m) - floor_div_int(c.b2 * c.l2, c.m) + c.b1 * c.b2 * c.q == c.target;
}

bool lattice_consistent(const EqualityCase& c) {
  return c.m % c.l1 == 0 && c.m % c.l2 == 0 && (c.m * c.q) % (c.l1 * c.l2) == 0;
}

std::vector<EqualityCase> enumerate_equality_cases(int m, int target, int bound) {
  if (m != 2 && m != 3 && m != 4 && m != 6) throw PreconditionError("m must be one of 2, 3, 4, 6");
  if (bound < 1) throw PreconditionError("bound must be positive");
  std::vector<int> divisors;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::vector<EqualityCase> out;
  for (int l1 : divisors)
    for (int l2 : divisors)
      for (int q = 1; q <= bound; ++q)
        for (int b1 = 1; b1 <= bound; ++b1)
          for (int b2 = 1; b2 <= bound; ++b2) {
            if (std::pair(l1, b1) > std::pair(l2, b2)) continue;
            EqualityCase c{m, l1, l2, q, b1, b2, target};
            if (lattice_consistent(c) && satisfies_floor_equation(c)) out.push_back(c);
          }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Int> min_codim_oracle(const HyperbolicPair& h, int max_parts) {
  const Form form{h.g11, h.g12, h.g22};
  const auto vc = h.coordinates(h.v);
  if (!vc) throw PreconditionError("v is not in the lattice H");
  const Point v{vc->first, vc->second};
  const Int vv = form(v, v);
  const SurfaceData data = surface_invariants(h.surface);

  // Box containing every a with a^2 >= 0 and (v-a)^2 >= 0: write a = (t v + u n / n^2) with n
  // orthogonal to v; then 0 <= t <= v^2 and u^2 <= v^2 |n^2| / 4.
  const Point n{form(v, Point{0, 1}), -form(v, Point{1, 0})};
  const Int nn = -form(n, n);
  const Int a11 = form(v, Point{1, 0}), a12 = form(v, Point{0, 1});
  const Int a21 = form(n, Point{1, 0}), a22 = form(n, Point{0, 1});
  const Int det = abs(a11 * a22 - a12 * a21);
  const Int ub = isqrt(vv * nn) + 1;
  const Int xb = (vv * abs(a22) + ub * abs(a12)) / det + 1;
  const Int yb = (vv * abs(a21) + ub * abs(a11)) / det + 1;

  std::vector<Point> cands;
  for (Int x = -xb; x <= xb; ++x)
    for (Int y = -yb; y <= yb; ++y) {
      Point a{x, y};
      Point rest{v.x - x, v.y - y};
      Int pa = form(v, a);
      if (pa <= 0 || pa >= vv) continue;
      if (form(a, a) < 0 || form(rest, rest) < 0) continue;
      cands.push_back(a);
    }
  std::sort(cands.begin(), cands.end(), point_less);

  auto dim_of = [&](const Point& a) -> Int {
    Int sq = form(a, a);
    if (sq > 0) return sq;
    Int b = gcd(a.x, a.y);
    MukaiVector u = h.combine(a.x / b, a.y / b);
    return floor_div(b * cover_gcd(data, u), Int(data.ord_k));
  };
  auto codim_of = [&](const std::vector<Point>& parts) {
    Int total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total += form(parts[i], parts[i]) - dim_of(parts[i]);
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (i < j) total += form(parts[i], parts[j]);
    }
    return total;
  };

  std::optional<Int> best;
  std::vector<Point> cur;
  std::function<void(std::size_t, Point)> rec = [&](std::size_t start, Point rem) {
    for (std::size_t i = start; i < cands.size(); ++i) {
      const Point& a = cands[i];
      Point rest{rem.x - a.x, rem.y - a.y};
      cur.push_back(a);
      if (rest.x == 0 && rest.y == 0) {
        if (cur.size() >= 2) {
          Int c = codim_of(cur);
          if (!best || c < *best) best = c;
        }
      } else if (static_cast<int>(cur.size()) < max_parts && form(v, rest) > 0) {
        rec(i, rest);
      }
      cur.pop_back();
    }
  };
  rec(0, v);
  return best;
}

}  // namespace bielliptic
