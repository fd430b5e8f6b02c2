#include "bielliptic/transforms.hpp"

#include <array>

namespace bielliptic {

namespace {

constexpr std::array<const char*, 10> kStepNames{"TwistBy", "Dual",   "Shift",      "Phi",       "PhiInv",
                                                 "Psi",     "PsiInv", "Type6AMove", "Ord3BMove", "PsiDualMove"};

MukaiVector twist(const MukaiVector& v, const Int& x, const Int& y) {
  return {v.r, v.a + v.r * x, v.b + v.r * y, v.s + v.a * y + v.b * x + v.r * x * y};
}

bool a_terminal(const SurfaceData& d, const Int& r, const Int& a) {
  return a == 0 || (d.lambda > 1 && d.lambda * a == r);
}

bool b_terminal(const SurfaceData& d, const Int& r, const Int& b) {
  if (b == 0 || d.ord_k * b == r) return true;
  if (d.ord_k == 4) return 2 * b == r;
  if (d.ord_k == 6) return 3 * b >= r && 2 * b <= r;
  return false;
}

std::string row_coordinate(const Int& k, const char* basis) {
  if (k == 0) return "0";
  std::string coeff = k == 1 ? "q" : to_string(k) + "q";
  return coeff + basis;
}

class Reducer {
 public:
  Reducer(SurfaceType t, const MukaiVector& v) : t_(t), d_(surface_invariants(t)), v_(v) {}

  Reduction run() {
    while (true) {
      normalize();
      if (2 * v_.a > v_.r) flip();
      if (a_terminal(d_, v_.r, v_.a) && b_terminal(d_, v_.r, v_.b)) return finish(true);

      if (!a_terminal(d_, v_.r, v_.a)) {
        if (v_.r > d_.lambda * v_.a) {
          push(StepKind::PhiInv);
        } else {
          // lambda = 3 and r/3 < a <= r/2; every other lambda lands in the branch above.
          push(StepKind::Type6AMove);
        }
        continue;
      }

      if (2 * v_.b > v_.r) {
        bool a_fixed_by_flip = v_.a == 0 || 2 * v_.a == v_.r;
        if (!a_fixed_by_flip) {
          // lambda = 3, a = r/3: the flip sends a to 2r/3, so the b-move must follow at once.
          if (3 * v_.b == 2 * v_.r) return finish(false);
          flip();
          b_move();
          continue;
        }
        flip();
        if (b_terminal(d_, v_.r, v_.b)) return finish(true);
      }
      b_move();
    }
  }

 private:
  void push(StepKind k) { push(TransformStep::of(k)); }

  void push(const TransformStep& step) {
    v_ = apply_transform(t_, step, v_);
    log_.push_back(step);
    if (is_rank_reducing(step.kind)) ++reducing_;
  }

  void normalize() {
    Int x = -floor_div(v_.a, v_.r);
    Int y = -floor_div(v_.b, v_.r);
    if (x != 0 || y != 0) push(TransformStep::twist_by(x, y));
  }

  // (r, a, b) -> (r, r - a, r - b), with 0 kept at 0; input normalized.
  void flip() {
    Int x = v_.a != 0 ? 1 : 0;
    Int y = v_.b != 0 ? 1 : 0;
    push(StepKind::Dual);
    if (x != 0 || y != 0) push(TransformStep::twist_by(x, y));
  }

  // Precondition: 0 < b < r/2 strictly outside the terminal b-set (or b = r/2 for ord 3).
  void b_move() {
    const Int& r = v_.r;
    const Int& b = v_.b;
    if (r > d_.ord_k * b) {
      push(StepKind::PsiInv);
    } else if (d_.ord_k == 3) {
      push(StepKind::Ord3BMove);
    } else if (d_.ord_k == 4 || d_.ord_k == 6) {
      push(StepKind::PsiDualMove);
    } else {
      throw ArithmeticError("reduction reached an unhandled region at " + format_vector(v_));
    }
  }

  Reduction finish(bool matched) {
    Reduction out;
    out.v0 = v_;
    out.log = log_;
    out.rank_reducing_steps = reducing_;
    if (matched) out.table_row = match_table_row(t_, v_);
    return out;
  }

  SurfaceType t_;
  SurfaceData d_;
  MukaiVector v_;
  TransformLog log_;
  int reducing_ = 0;
};

}  // namespace

std::string step_name(StepKind k) { return kStepNames[static_cast<std::size_t>(k)]; }

StepKind parse_step_name(const std::string& name) {
  for (std::size_t i = 0; i < kStepNames.size(); ++i)
    if (name == kStepNames[i]) return static_cast<StepKind>(i);
  throw ParseError("unknown transform step '" + name + "'");
}

bool is_rank_reducing(StepKind k) {
  switch (k) {
    case StepKind::PhiInv:
    case StepKind::PsiInv:
    case StepKind::Type6AMove:
    case StepKind::Ord3BMove:
    case StepKind::PsiDualMove:
      return true;
    default:
      return false;
  }
}

bool step_valid_for(SurfaceType t, StepKind k) {
  SurfaceData d = surface_invariants(t);
  switch (k) {
    case StepKind::Type6AMove:
      return d.lambda == 3;
    case StepKind::Ord3BMove:
      return d.ord_k == 3;
    case StepKind::PsiDualMove:
      return d.ord_k == 4 || d.ord_k == 6;
    default:
      return true;
  }
}

MukaiVector apply_transform(SurfaceType t, const TransformStep& step, const MukaiVector& v) {
  if (!step_valid_for(t, step.kind))
    throw PreconditionError(step_name(step.kind) + " is not defined on surface type " + std::to_string(t.index()));
  SurfaceData d = surface_invariants(t);
  const Int lam = d.lambda;
  const Int ord = d.ord_k;
  const auto& [r, a, b, s] = v;
  switch (step.kind) {
    case StepKind::TwistBy:
      return twist(v, step.twist.a, step.twist.b);
    case StepKind::Dual:
      return {r, -a, -b, s};
    case StepKind::Shift:
      return -v;
    case StepKind::Phi:
      return {r + lam * a, a, b + lam * s, s};
    case StepKind::PhiInv:
      return {r - lam * a, a, b - lam * s, s};
    case StepKind::Psi:
      return {r + ord * b, a + ord * s, b, s};
    case StepKind::PsiInv:
      return {r - ord * b, a - ord * s, b, s};
    case StepKind::Type6AMove:
      return {2 * r - 3 * a, r - a, 2 * b - 3 * s, b - s};
    case StepKind::Ord3BMove:
      return {2 * r - 3 * b, 2 * a - 3 * s, r - b, a - s};
    case StepKind::PsiDualMove:
      return {ord * b - r, a - ord * s, b, -s};
  }
  throw PreconditionError("unknown transform step");
}

MukaiVector replay(SurfaceType t, const TransformLog& log, const MukaiVector& v) {
  MukaiVector out = v;
  for (const auto& step : log) out = apply_transform(t, step, out);
  return out;
}

std::optional<std::string> match_table_row(SurfaceType t, const MukaiVector& v) {
  if (v.r < 1) throw PreconditionError("table rows are defined for r >= 1");
  SurfaceData d = surface_invariants(t);
  Int a = mod_floor(v.a, v.r);
  Int b = mod_floor(v.b, v.r);
  if (!a_terminal(d, v.r, a) || !b_terminal(d, v.r, b)) return std::nullopt;
  if (d.ord_k == 6 && 3 * b > v.r && 2 * b < v.r) return std::string("(r,0,bB0,s) with 2b<r<3b");
  Rational fa(a, v.r), fb(b, v.r);
  fa.canonicalize();
  fb.canonicalize();
  Int k = lcm(fa.get_den(), fb.get_den());
  Int alpha = fa.get_num() * (k / fa.get_den());
  Int beta = fb.get_num() * (k / fb.get_den());
  return "(" + row_coordinate(k, "") + "," + row_coordinate(alpha, "A0") + "," + row_coordinate(beta, "B0") + ",s)";
}

Reduction reduce_to_table(SurfaceType t, const MukaiVector& v) {
  if (v.r < 1) throw PreconditionError("reduce_to_table requires r >= 1, got " + format_vector(v));
  if (!is_primitive(v)) throw PreconditionError("reduce_to_table requires primitive v, got " + format_vector(v));
  return Reducer(t, v).run();
}

std::string exceptional_name(Exceptional e) {
  return e == Exceptional::Rank2Trivial ? "Rank2Trivial" : "Rank2Type1B0";
}

std::optional<Exceptional> detect_exceptional(SurfaceType t, const MukaiVector& v) {
  if (v.r != 2 || square(v) != 4) return std::nullopt;
  bool a_even = divides(2, v.a);
  bool b_even = divides(2, v.b);
  if (ord_k(t) == 2 && a_even && b_even) return Exceptional::Rank2Trivial;
  if (t.index() == 1 && a_even && !b_even) return Exceptional::Rank2Type1B0;
  return std::nullopt;
}

}  // namespace bielliptic
