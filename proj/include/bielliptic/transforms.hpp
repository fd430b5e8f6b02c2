#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bielliptic/lattice.hpp"

namespace bielliptic {

enum class StepKind { TwistBy, Dual, Shift, Phi, PhiInv, Psi, PsiInv, Type6AMove, Ord3BMove, PsiDualMove };

struct TransformStep {
  StepKind kind;
  DivisorClass twist{};  // read only for TwistBy

  static TransformStep twist_by(Int x, Int y) { return {StepKind::TwistBy, {std::move(x), std::move(y)}}; }
  static TransformStep of(StepKind k) { return {k, {}}; }
  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

using TransformLog = std::vector<TransformStep>;

std::string step_name(StepKind k);
StepKind parse_step_name(const std::string& name);  // throws ParseError

// Steps that strictly lower the rank of every vector they are applied to during reduction.
bool is_rank_reducing(StepKind k);

bool step_valid_for(SurfaceType t, StepKind k);

// Lattice action of the step; throws PreconditionError when the step does not exist on t.
MukaiVector apply_transform(SurfaceType t, const TransformStep& step, const MukaiVector& v);
MukaiVector replay(SurfaceType t, const TransformLog& log, const MukaiVector& v);

// Name of the reduced-forms row matched by (a mod r, b mod r), or nullopt; r >= 1.
std::optional<std::string> match_table_row(SurfaceType t, const MukaiVector& v);

struct Reduction {
  MukaiVector v0;
  TransformLog log;
  std::optional<std::string> table_row;  // nullopt when no generator lowers the rank further
  int rank_reducing_steps = 0;
};

// Requires v primitive with r >= 1.
Reduction reduce_to_table(SurfaceType t, const MukaiVector& v);

enum class Exceptional { Rank2Trivial, Rank2Type1B0 };

std::string exceptional_name(Exceptional e);
std::optional<Exceptional> detect_exceptional(SurfaceType t, const MukaiVector& v);

}  // namespace bielliptic
