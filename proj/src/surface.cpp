#include "bielliptic/surface.hpp"

#include <array>
#include <string>

#include "bielliptic/arith.hpp"

namespace bielliptic {

namespace {

struct Row {
  int ord_k, lambda, g_order;
  std::array<int, 4> mult;
  int n_mult;
};

constexpr std::array<Row, 7> kRows{{
    {2, 1, 2, {2, 2, 2, 2}, 4},
    {2, 2, 4, {2, 2, 2, 2}, 4},
    {4, 1, 4, {2, 4, 4, 0}, 3},
    {4, 2, 8, {2, 4, 4, 0}, 3},
    {3, 1, 3, {3, 3, 3, 0}, 3},
    {3, 3, 9, {3, 3, 3, 0}, 3},
    {6, 1, 6, {2, 3, 6, 0}, 3},
}};

static_assert([] {
  for (const Row& r : kRows)
    if (r.ord_k * r.lambda != r.g_order) return false;
  return true;
}());

}  // namespace

SurfaceType::SurfaceType(int index) : index_(index) {
  if (index < 1 || index > 7)
    throw InvalidSurfaceError("surface type must be in 1..7, got " + std::to_string(index));
}

SurfaceData surface_invariants(SurfaceType t) {
  const Row& r = kRows[static_cast<std::size_t>(t.index() - 1)];
  return {r.ord_k, r.lambda, r.g_order, std::vector<int>(r.mult.begin(), r.mult.begin() + r.n_mult)};
}

}  // namespace bielliptic
