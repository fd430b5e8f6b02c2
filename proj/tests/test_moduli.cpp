#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bielliptic/moduli.hpp"
#include "oracles.hpp"

using namespace bielliptic;

namespace {
bool has_case(const SingularityReport& r, SingularityClass c) {
  return std::any_of(r.cases.begin(), r.cases.end(), [&](const SingularityCase& x) { return x.cls == c; });
}
bool has_note(const std::vector<std::string>& notes, const std::string& prefix) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) { return n.rfind(prefix, 0) == 0; });
}
}  // namespace

TEST_CASE("Gieseker examples") {
  auto a = gieseker_report(SurfaceType(3), {2, 0, 1, 0});
  CHECK(a.mus_nonempty);
  CHECK(a.stable_dimension == Int(1));

  auto b = gieseker_report(SurfaceType(1), {2, 0, 1, -1});
  CHECK(b.mus_nonempty);
  CHECK(b.stable_dimension == Int(5));
  CHECK(b.exceptional == Exceptional::Rank2Type1B0);

  auto c = gieseker_report(SurfaceType(5), {2, 0, 0, 0});
  CHECK(c.muss_nonempty);
  CHECK_FALSE(c.mus_nonempty);

  auto d = gieseker_report(SurfaceType(1), {1, 0, 0, 2});
  CHECK_FALSE(d.muss_nonempty);
  CHECK_FALSE(d.mus_nonempty);

  CHECK_THROWS_AS(gieseker_report(SurfaceType(1), {0, 0, 0, 1}), PreconditionError);
}

TEST_CASE("positive square classes: dimension v^2 + 1 and codimension notes") {
  auto r = gieseker_report(SurfaceType(4), {3, 1, 1, -2});
  CHECK(r.mus_nonempty);
  CHECK(r.stable_dimension == Int(square({3, 1, 1, -2}) + 1));
  CHECK(has_note(r.notes, "codim(M \\ M^s) >= 2"));
}

TEST_CASE("Bridgeland non-emptiness is v^2 >= 0") {
  CHECK_FALSE(bridgeland_nonempty(SurfaceType(1), {1, 0, 0, 1}));
  CHECK(bridgeland_nonempty(SurfaceType(1), {0, 0, 0, 1}));
  CHECK(bridgeland_nonempty(SurfaceType(1), {2, 0, 1, -1}));
}

TEST_CASE("singularity examples") {
  auto a = singularity_report(SurfaceType(1), {1, 0, 0, -3}, false);
  CHECK(a.cases.size() == 1);
  CHECK(a.cases[0].cls == SingularityClass::TerminalLCI);
  CHECK(has_note(a.notes, "omega_M is torsion"));

  auto b = singularity_report(SurfaceType(7), {1, 0, 0, -1}, false);
  CHECK(b.cases.size() == 1);
  CHECK(b.cases[0].cls == SingularityClass::Smooth);

  auto c = singularity_report(SurfaceType(1), {1, 0, 0, -1}, false);
  CHECK(has_case(c, SingularityClass::PossiblyNonNormal));

  auto z = singularity_report(SurfaceType(2), {1, 0, 0, 0}, false);
  CHECK(z.cases.size() == 1);
  CHECK(z.cases[0].cls == SingularityClass::Smooth);
  CHECK_THROWS_AS(singularity_report(SurfaceType(1), {2, 0, 0, -2}, false), PreconditionError);
}

TEST_CASE("generic surface: terminal for v^2 > 0 outside the stated exception") {
  auto g = singularity_report(SurfaceType(3), {1, 0, 0, -1}, true);
  CHECK(g.cases.size() == 1);
  CHECK(g.cases[0].cls == SingularityClass::TerminalLCI);
  // ord 2, v^2 = 4, l(v) = 2 is the exception and falls back to the case table.
  MukaiVector e{2, 0, 1, -1};
  REQUIRE(oracle::l_of(1, e) == 2);
  auto x = singularity_report(SurfaceType(1), e, true);
  CHECK(has_case(x, SingularityClass::PossiblyNonNormal));
}
