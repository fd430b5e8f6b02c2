#include "bielliptic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "bielliptic/moduli.hpp"
#include "bielliptic/oracle.hpp"
#include "bielliptic/stability.hpp"
#include "bielliptic/transforms.hpp"
#include "bielliptic/wall.hpp"

namespace bielliptic {

namespace {

using nlohmann::ordered_json;

constexpr int kExitFlag = 2;
constexpr int kExitPrecondition = 3;

// Machine integers stay JSON numbers; anything wider is emitted as a decimal string.
ordered_json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return to_string(x);
}

ordered_json codim_json(const std::optional<Int>& c) { return c ? int_json(*c) : ordered_json("inf"); }

ordered_json vectors_json(const std::vector<MukaiVector>& vs) {
  ordered_json out = ordered_json::array();
  for (const auto& v : vs) out.push_back(format_vector(v));
  return out;
}

ordered_json step_json(const TransformStep& s) {
  ordered_json params = ordered_json::object();
  if (s.kind == StepKind::TwistBy) {
    params["a"] = int_json(s.twist.a);
    params["b"] = int_json(s.twist.b);
  }
  return {{"step", step_name(s.kind)}, {"params", params}};
}

ordered_json classification_json(const HyperbolicPair& h, const WallClassification& c) {
  ordered_json labels = ordered_json::array();
  for (WallLabel l : c.labels) labels.push_back(label_name(l));
  ordered_json witnesses = ordered_json::object();
  for (const auto& [l, vs] : c.witnesses) witnesses[label_name(l)] = vectors_json(vs);
  return {{"schema", 1},
          {"v", format_vector(h.v)},
          {"basis", vectors_json({h.e1, h.e2})},
          {"gram", {{int_json(h.g11), int_json(h.g12)}, {int_json(h.g12), int_json(h.g22)}}},
          {"isotropic_rays", vectors_json(isotropic_rays(h))},
          {"totally_semistable", c.totally_semistable},
          {"witness", c.tss_witness ? ordered_json(format_vector(*c.tss_witness)) : ordered_json(nullptr)},
          {"labels", labels},
          {"witnesses", witnesses},
          {"codim_bound", codim_json(c.codim_bound)}};
}

std::string join_labels(const std::set<WallLabel>& labels) {
  std::string out;
  for (WallLabel l : labels) {
    if (!out.empty()) out += ';';
    out += label_name(l);
  }
  return out;
}

struct Options {
  int type = 0;
  std::string v, w, vector, h0;
  int max_parts = 4;
  int emit_samples = 0;
  bool json = false;
  bool generic_surface = false;
  int m = 0, target = 0, bound = 8;
  int bound_r = 2, bound_a = 2, bound_b = 2, bound_s = 2;
  std::vector<std::string> family;
};

std::string run_info(const Options& o) {
  SurfaceData d = surface_invariants(SurfaceType(o.type));
  ordered_json j{{"type", o.type},
                 {"ord_k", d.ord_k},
                 {"lambda", d.lambda},
                 {"g_order", d.g_order},
                 {"multiplicities", d.multiplicities}};
  return j.dump() + "\n";
}

std::string run_pair(const Options& o) {
  MukaiVector v = parse_vector(o.v), w = parse_vector(o.w);
  Int p = mukai_pairing(v, w);
  if (!o.json) return to_string(p) + "\n";
  return ordered_json{{"schema", 1}, {"v", format_vector(v)}, {"w", format_vector(w)}, {"pairing", int_json(p)}}
             .dump() +
         "\n";
}

std::string run_reduce(const Options& o) {
  SurfaceType t(o.type);
  MukaiVector v = parse_vector(o.vector);
  Reduction red = reduce_to_table(t, v);
  if (!o.json) {
    std::ostringstream s;
    s << format_vector(red.v0) << "\n";
    for (const auto& step : red.log) {
      s << step_name(step.kind);
      if (step.kind == StepKind::TwistBy) s << "(" << to_string(step.twist.a) << "," << to_string(step.twist.b) << ")";
      s << "\n";
    }
    return s.str();
  }
  ordered_json log = ordered_json::array();
  for (const auto& step : red.log) log.push_back(step_json(step));
  ordered_json j{{"schema", 1},
                 {"type", o.type},
                 {"input", format_vector(v)},
                 {"reduced", format_vector(red.v0)},
                 {"log", log},
                 {"square", int_json(square(v))},
                 {"table_row", red.table_row ? ordered_json(*red.table_row) : ordered_json(nullptr)},
                 {"rank_reducing_steps", red.rank_reducing_steps}};
  return j.dump() + "\n";
}

std::string run_wall_classify(const Options& o) {
  SurfaceType t(o.type);
  HyperbolicPair h = saturate_lattice(t, parse_vector(o.v), parse_vector(o.w));
  WallClassification c = classify_wall(h, o.max_parts);
  if (!o.json) {
    return "totally_semistable=" + std::string(c.totally_semistable ? "true" : "false") +
           " labels=" + join_labels(c.labels) +
           " codim_bound=" + (c.codim_bound ? to_string(*c.codim_bound) : std::string("inf")) + "\n";
  }
  return classification_json(h, c).dump() + "\n";
}

std::string run_wall_slice(const Options& o) {
  SurfaceType t(o.type);
  MukaiVector v = parse_vector(o.v), w = parse_vector(o.w);
  WallLocus locus = wall_in_slice(t, v, w, parse_divisor(o.h0));
  const char* kind = locus.kind == WallLocus::Kind::Quadratic    ? "Quadratic"
                     : locus.kind == WallLocus::Kind::Everywhere ? "Everywhere"
                                                                 : "Nowhere";
  ordered_json j{{"schema", 1},
                 {"locus",
                  {{"kind", kind},
                   {"alpha", int_json(locus.alpha)},
                   {"beta", int_json(locus.beta)},
                   {"gamma", int_json(locus.gamma)}}}};
  if (o.emit_samples > 0) {
    ordered_json samples = ordered_json::array();
    for (const auto& p : sample_locus(locus, o.emit_samples))
      samples.push_back({{"x", to_string(p.x)}, {"y", to_string(p.y)}});
    j["samples"] = samples;
  }
  return j.dump() + "\n";
}

std::string run_moduli_report(const Options& o) {
  SurfaceType t(o.type);
  MukaiVector v = parse_vector(o.vector);
  NonEmptinessReport g = gieseker_report(t, v);
  ordered_json gj{{"muss_nonempty", g.muss_nonempty},
                  {"mus_nonempty", g.mus_nonempty},
                  {"stable_dimension", g.stable_dimension ? int_json(*g.stable_dimension) : ordered_json(nullptr)},
                  {"exceptional", g.exceptional ? ordered_json(exceptional_name(*g.exceptional)) : ordered_json(nullptr)},
                  {"notes", g.notes}};
  ordered_json j{{"schema", 1},
                 {"type", o.type},
                 {"vector", format_vector(v)},
                 {"square", int_json(square(v))},
                 {"gieseker", gj},
                 {"bridgeland_nonempty", bridgeland_nonempty(t, v)}};
  if (is_primitive(v) && square(v) >= 0) {
    SingularityReport s = singularity_report(t, v, o.generic_surface);
    ordered_json cases = ordered_json::array();
    for (const auto& c : s.cases) cases.push_back({{"condition", c.condition}, {"class", singularity_class_name(c.cls)}});
    j["singularities"] = {{"cases", cases}, {"sing_dim_bound", to_string(s.sing_dim_bound)}, {"notes", s.notes}};
  } else {
    j["singularities"] = nullptr;
  }
  return j.dump() + "\n";
}

std::string run_oracle_cases(const Options& o) {
  auto cases = enumerate_equality_cases(o.m, o.target, o.bound);
  ordered_json arr = ordered_json::array();
  for (const auto& c : cases)
    arr.push_back({{"l1", c.l1}, {"l2", c.l2}, {"q", c.q}, {"b1", c.b1}, {"b2", c.b2}});
  ordered_json j{{"schema", 1}, {"m", o.m}, {"target", o.target}, {"bound", o.bound}, {"cases", arr}};
  if (!o.json) {
    std::ostringstream s;
    for (const auto& c : cases) s << c.l1 << " " << c.l2 << " " << c.q << " " << c.b1 << " " << c.b2 << "\n";
    return s.str();
  }
  return j.dump() + "\n";
}

std::string run_atlas(const Options& o) {
  SurfaceType t(o.type);
  std::vector<MukaiVector> family;
  for (const auto& s : o.family) family.push_back(parse_vector(s));
  if (family.empty()) throw ParseError("atlas requires at least one --w generator");
  struct Row {
    MukaiVector v, w;
    std::string line;
  };
  std::vector<Row> rows;
  for (long r = -o.bound_r; r <= o.bound_r; ++r)
    for (long a = -o.bound_a; a <= o.bound_a; ++a)
      for (long b = -o.bound_b; b <= o.bound_b; ++b)
        for (long s = -o.bound_s; s <= o.bound_s; ++s) {
          MukaiVector v{r, a, b, s};
          if (square(v) <= 0) continue;
          for (const auto& w : family) {
            if (!linearly_independent(v, w)) continue;
            std::optional<HyperbolicPair> h;
            try {
              h = saturate_lattice(t, v, w);
            } catch (const PreconditionError&) {
              continue;  // not hyperbolic
            }
            WallClassification c = classify_wall(*h, o.max_parts);
            std::string line = std::to_string(o.type) + ",\"" + format_vector(v) + "\",\"" + format_vector(w) + "\"," +
                               (c.totally_semistable ? "true" : "false") + "," + join_labels(c.labels) + "," +
                               (c.codim_bound ? to_string(*c.codim_bound) : std::string("inf"));
            rows.push_back({v, w, std::move(line)});
          }
        }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.v != y.v ? x.v < y.v : x.w < y.w; });
  std::string out = "type,v,w,tss,labels,codim_bound\n";
  for (const auto& row : rows) out += row.line + "\n";
  return out;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Mukai-lattice and wall calculator for bielliptic surfaces", "bielliptic_cli"};
  app.require_subcommand(1);
  Options o;
  auto type_opt = [&](CLI::App* sub) { sub->add_option("--type", o.type, "surface type 1..7")->required(); };

  auto* info = app.add_subcommand("info", "invariants of a surface type");
  type_opt(info);
  info->add_flag("--json", o.json);

  auto* pair = app.add_subcommand("pair", "Mukai pairing of two vectors");
  pair->add_option("--v", o.v)->required();
  pair->add_option("--w", o.w)->required();
  pair->add_option("--type", o.type);
  pair->add_flag("--json", o.json);

  auto* reduce = app.add_subcommand("reduce", "reduce a primitive Mukai vector to a table row");
  type_opt(reduce);
  reduce->add_option("--vector", o.vector)->required();
  reduce->add_flag("--json", o.json);

  auto* wall = app.add_subcommand("wall", "wall lattices and loci");
  wall->require_subcommand(1);
  auto* classify = wall->add_subcommand("classify", "classify the wall of span{v,w}");
  type_opt(classify);
  classify->add_option("--v", o.v)->required();
  classify->add_option("--w", o.w)->required();
  classify->add_option("--max-parts", o.max_parts)->check(CLI::Range(2, 16));
  classify->add_flag("--json", o.json);
  auto* slice = wall->add_subcommand("slice", "wall locus in the (x H0, y H0) slice");
  type_opt(slice);
  slice->add_option("--v", o.v)->required();
  slice->add_option("--w", o.w)->required();
  slice->add_option("--H0", o.h0)->required();
  slice->add_option("--emit-samples", o.emit_samples)->check(CLI::Range(0, 1000));
  slice->add_flag("--json", o.json);

  auto* moduli = app.add_subcommand("moduli", "moduli reports");
  moduli->require_subcommand(1);
  auto* report = moduli->add_subcommand("report", "non-emptiness, dimension and singularities");
  type_opt(report);
  report->add_option("--vector", o.vector)->required();
  report->add_flag("--generic-surface", o.generic_surface);
  report->add_flag("--json", o.json);

  auto* oracle = app.add_subcommand("oracle", "brute-force case enumerations");
  oracle->require_subcommand(1);
  auto* cases = oracle->add_subcommand("cases", "solutions of the HN equality cases");
  cases->add_option("--m", o.m)->required()->check(CLI::IsMember({2, 3, 4, 6}));
  cases->add_option("--target", o.target)->required()->check(CLI::IsMember({0, 1}));
  cases->add_option("--bound", o.bound)->check(CLI::Range(1, 64));
  cases->add_flag("--json", o.json);

  auto* atlas = app.add_subcommand("atlas", "classify every v in a box against a generator family (CSV)");
  type_opt(atlas);
  atlas->add_option("--bound-r", o.bound_r)->check(CLI::Range(0, 20));
  atlas->add_option("--bound-a", o.bound_a)->check(CLI::Range(0, 20));
  atlas->add_option("--bound-b", o.bound_b)->check(CLI::Range(0, 20));
  atlas->add_option("--bound-s", o.bound_s)->check(CLI::Range(0, 20));
  atlas->add_option("--w", o.family)->required();
  atlas->add_option("--max-parts", o.max_parts)->check(CLI::Range(2, 16));

  CommandResult res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = kExitFlag;
    res.err = std::string("flag error: ") + e.what() + "\n";
    return res;
  }

  try {
    if (*info) res.out = run_info(o);
    else if (*pair) res.out = run_pair(o);
    else if (*reduce) res.out = run_reduce(o);
    else if (*classify) res.out = run_wall_classify(o);
    else if (*slice) res.out = run_wall_slice(o);
    else if (*report) res.out = run_moduli_report(o);
    else if (*cases) res.out = run_oracle_cases(o);
    else if (*atlas) res.out = run_atlas(o);
  } catch (const ParseError& e) {
    res.exit_code = kExitFlag;
    res.err = std::string("parse error: ") + e.what() + "\n";
  } catch (const InvalidSurfaceError& e) {
    res.exit_code = kExitFlag;
    res.err = std::string("invalid surface: ") + e.what() + "\n";
  } catch (const PreconditionError& e) {
    res.exit_code = kExitPrecondition;
    res.err = std::string("precondition violated: ") + e.what() + "\n";
  } catch (const ArithmeticError& e) {
    res.exit_code = kExitPrecondition;
    res.err = std::string("arithmetic error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace bielliptic
