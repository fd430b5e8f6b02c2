#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "bielliptic/wall.hpp"

namespace bielliptic {

// -floor(b1 l1 / m) - floor(b2 l2 / m) + b1 b2 q = target, with l1 l2 | m q.
struct EqualityCase {
  int m, l1, l2, q, b1, b2, target;
  friend auto operator<=>(const EqualityCase&, const EqualityCase&) = default;
};

bool satisfies_floor_equation(const EqualityCase& c);
bool lattice_consistent(const EqualityCase& c);  // l1 | m, l2 | m, l1 l2 | m q

// Exhaustive over l1, l2 | m and 1 <= q, b1, b2 <= bound; each solution once with (l1,b1) <= (l2,b2).
std::vector<EqualityCase> enumerate_equality_cases(int m, int target, int bound = 8);

// Brute-force minimum of the HN codimension estimate over decompositions of v in H; nullopt is +infinity.
std::optional<Int> min_codim_oracle(const HyperbolicPair& h, int max_parts = 4);

}  // namespace bielliptic
