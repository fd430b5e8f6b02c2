#include "bielliptic/moduli.hpp"

namespace bielliptic {

namespace {

using SC = SingularityClass;

constexpr const char* kTorsionNote = "omega_M is torsion in Pic(M^s)";

struct AppendixRow {
  int ord;
  int square;
  bool needs_full_l;  // the row requires ord(K_S) | pi^*v
  const char* condition;
  SC cls;
};

// Small-dimension verdicts for the stable locus, keyed on (ord(K_S), v^2).
constexpr AppendixRow kAppendix[] = {
    {2, 2, false, "v(F_e)^2=0", SC::PossiblyNonNormal},
    {2, 4, true, "v(F_e)^2=2, 2 | pi^*v", SC::PossiblyNonNormal},
    {2, 4, false, "v(F_e)^2=0", SC::TerminalLCI},

    {3, 2, false, "v(F_e)^2=0", SC::PossiblyNonNormal},
    {3, 4, false, "v(F_e)^2=0", SC::NormalGorensteinTorsionK},
    {3, 6, true, "v(F_e)^2=2, 3 | pi^*v", SC::NormalGorensteinTorsionK},
    {3, 6, false, "v(F_e)^2=0, c1(F_e)^2-c1(F_e).c1(F_g)=-3", SC::Canonical},
    {3, 8, false, "v(F_e)^2=2, c1(F_e)^2-c1(F_e).c1(F_g)=-1", SC::Canonical},
    {3, 8, false, "v(F_e)^2=0, c1(F_e)^2-c1(F_e).c1(F_g)=-4", SC::TerminalLCI},

    {4, 2, false, "v(F_e)^2=0, (ext1(F_e,F_g),ext1(F_e,F_g2))=(1,0)", SC::PossiblyNonNormal},
    {4, 4, false, "(ext1(F_e,F_g),ext1(F_e,F_g2))=(1,2)", SC::Canonical},
    {4, 4, false, "(ext1(F_e,F_g),ext1(F_e,F_g2))=(2,0), (g^2)^*c1(F_e)=c1(F_e), c1(F_e)^2-c1(F_e).g^*c1(F_e)=-2",
     SC::NormalGorensteinTorsionK},
    {4, 6, false, "(ext1(F_e,F_g),ext1(F_e,F_g2))=(1,4)", SC::TerminalLCI},
    {4, 6, false, "(ext1(F_e,F_g),ext1(F_e,F_g2))=(2,2)", SC::TerminalLCI},
    {4, 6, false, "(ext1(F_e,F_g),ext1(F_e,F_g2))=(3,0), (g^2)^*c1(F_e)=c1(F_e), c1(F_e)^2-c1(F_e).g^*c1(F_e)=-3",
     SC::Canonical},
    {4, 8, true, "v(F_e)^2=2, 4 | pi^*v", SC::TerminalLCI},
    {4, 8, false, "v(F_e)^2=0", SC::TerminalLCI},
    {4, 10, false, "v(F_e)^2=2", SC::TerminalLCI},
    {4, 10, false, "v(F_e)^2=0", SC::TerminalLCI},

    {6, 2, false, "v(F_e)^2=0", SC::Smooth},
    {6, 4, false, "(g^2)^*c1(F_e)=c1(F_e)", SC::Canonical},
    {6, 4, false, "(g^3)^*c1(F_e)=c1(F_e)", SC::NormalGorensteinTorsionK},
    {6, 6, false, "not [(g^3)^*c1(F_e)=c1(F_e), (g^i)^*c1(F_e)!=c1(F_e) for i=1,2]", SC::TerminalLCI},
    {6, 6, false, "(g^3)^*c1(F_e)=c1(F_e), (g^i)^*c1(F_e)!=c1(F_e) for i=1,2", SC::Canonical},
    {6, 8, false, "v(F_e)^2=0", SC::TerminalLCI},
    {6, 10, false, "v(F_e)^2=0", SC::TerminalLCI},
    {6, 12, true, "v(F_e)^2=2, 6 | pi^*v", SC::TerminalLCI},
    {6, 12, false, "v(F_e)^2=0", SC::TerminalLCI},
    {6, 14, false, "v(F_e)^2=0", SC::TerminalLCI},
    {6, 16, false, "v(F_e)^2=2", SC::TerminalLCI},
    {6, 16, false, "v(F_e)^2=0", SC::TerminalLCI},
};

}  // namespace

NonEmptinessReport gieseker_report(SurfaceType t, const MukaiVector& v) {
  if (v.r < 1) throw PreconditionError("gieseker_report requires r >= 1, got " + format_vector(v));
  PrimitiveSplit split = primitive_split(v);
  Int ord = ord_k(t);
  Int vp2 = square(split.p);
  NonEmptinessReport out;
  if (vp2 > 0) {
    out.muss_nonempty = out.mus_nonempty = true;
    out.stable_dimension = square(v) + 1;
    out.exceptional = detect_exceptional(t, v);
    out.notes = {"codim(M \\ M^s) >= 2", "codim(M^{mu ss} \\ M) >= 1", "codim(M^s \\ M^{mu s}) >= 1"};
    if (v.r > 1 && !out.exceptional) out.notes.push_back("codim(M^{mu s} \\ M^{mu s,lf}) >= 1");
  } else if (vp2 == 0) {
    out.muss_nonempty = true;
    Int nl = split.n * l_invariant(t, split.p);
    out.mus_nonempty = divides(nl, ord);
    if (out.mus_nonempty) out.stable_dimension = Int(nl == ord ? 2 : 1);
  }
  return out;
}

bool bridgeland_nonempty(SurfaceType, const MukaiVector& v) { return square(v) >= 0; }

std::string singularity_class_name(SingularityClass c) {
  switch (c) {
    case SC::Smooth:
      return "Smooth";
    case SC::TerminalLCI:
      return "TerminalLCI";
    case SC::Canonical:
      return "Canonical";
    case SC::NormalGorensteinTorsionK:
      return "NormalGorensteinTorsionK";
    case SC::PossiblyNonNormal:
      return "PossiblyNonNormal";
  }
  return "?";
}

SingularityReport singularity_report(SurfaceType t, const MukaiVector& v, bool generic_surface) {
  if (!is_primitive(v)) throw PreconditionError("singularity_report requires primitive v, got " + format_vector(v));
  Int vv = square(v);
  if (vv < 0) throw PreconditionError("singularity_report requires v^2 >= 0");
  const int ord = ord_k(t);
  const bool full_l = l_invariant(t, v) == ord;

  SingularityReport out;
  out.sing_dim_bound = Rational(vv + 2 * ord, Int(ord));
  out.sing_dim_bound.canonicalize();

  if (vv == 0) {
    out.cases.push_back({"v^2=0", SC::Smooth});
    return out;
  }
  bool generic_exception = (ord == 2 || ord == 3) && vv == 2 * ord && full_l;
  if (vv >= 3 * ord || (generic_surface && !generic_exception)) {
    out.cases.push_back({vv >= 3 * ord ? "v^2 >= 3 ord(K_S)" : "S generic", SC::TerminalLCI});
    if (vv >= 6 || generic_surface) out.notes.push_back(kTorsionNote);
    return out;
  }
  for (const AppendixRow& row : kAppendix) {
    if (row.ord != ord || vv != row.square) continue;
    if (row.needs_full_l && !full_l) continue;
    out.cases.push_back({row.condition, row.cls});
  }
  if (vv >= 6) out.notes.push_back(kTorsionNote);
  return out;
}

}  // namespace bielliptic
