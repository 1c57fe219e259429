#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "linrel/io.hpp"
#include "linrel/oracle.hpp"
#include "linrel/suites.hpp"

using namespace linrel;

namespace {

enum Exit { kOk = 0, kViolated = 1, kInput = 2, kUnsupported = 3 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedRing:
    case ErrorKind::InfiniteModule:
    case ErrorKind::ModuleTooLarge:
    case ErrorKind::RingNotLocal:
    case ErrorKind::RingNotSemisimple:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::NotInSubcategory:
    case ErrorKind::Overflow:
      return kUnsupported;
    case ErrorKind::Internal:
      return kViolated;
    default:
      return kInput;
  }
}

struct Output {
  bool text = false;
  int emit(const std::string& command, Json result, int code = kOk) const {
    Json report = make_report(command, std::move(result));
    std::cout << (text ? render_text(report) : dump_report(report));
    return code;
  }
};

// Parses a file, prefixing input diagnostics with its name.
template <class F>
auto load(const std::string& file, F&& parse) -> decltype(parse(std::declval<const Json&>())) {
  Json j = read_json_file(file);
  try {
    return parse(j);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidInput) throw;
    fail(ErrorKind::InvalidInput, file + ": " + e.what());
  }
}

auto as_relation = [](const Json& j) { return relation_from_json(j); };
auto as_rep = [](const Json& j) { return rep_from_json(j); };

Json stable_json(const SharpFlatData& d) {
  Json j;
  j["prime"] = submodule_json(d.prime);
  j["double_prime"] = submodule_json(d.dprime);
  j["inverse_prime"] = submodule_json(d.inv_prime);
  j["inverse_double_prime"] = submodule_json(d.inv_dprime);
  j["sharp"] = submodule_json(d.sharp);
  j["flat"] = submodule_json(d.flat);
  return j;
}

Json module_summary(const FgModule& m) {
  Json j{{"module", to_json(m)}, {"invariants", vec_json(invariant_factors(m))}, {"free", is_free(m)},
         {"projective", is_projective(m)}, {"flat", is_flat(m)}, {"injective", is_injective_module(m)}};
  j["order"] = m.is_finite() ? Json(m.order()) : Json(nullptr);
  return j;
}

int cmd_compute(const Output& out, const std::string& file, const std::string& op, const std::string& element,
                const std::string& with) {
  Json in = read_json_file(file);
  if (in.is_object() && in.contains("ambient_rank")) {
    if (op != "summary") fail(ErrorKind::InvalidInput, "--op " + op + " needs a relation file");
    return out.emit("compute", module_summary(load(file, [](const Json& j) { return module_from_json(j); })));
  }
  RelationFile rf = load(file, as_relation);
  const LinearRelation& c = rf.relation;
  Json r{{"op", op}};
  if (op == "summary") {
    r["relation"] = to_json(c);
    r["order"] = c.submodule().parent().is_finite() ? Json(c.submodule().order()) : Json(nullptr);
    r["endo"] = c.is_endo();
  } else if (op == "apply") {
    if (element.empty()) fail(ErrorKind::InvalidInput, "--op apply needs --element");
    Vec x = c.domain().reduce(element_from_text(element, c.domain().rank()));
    Coset cs = apply_elem(c, x);
    r["element"] = vec_json(x);
    r["empty"] = cs.is_empty();
    r["translate"] = submodule_json(cs.translate());
    r["representative"] = cs.is_empty() ? Json(nullptr) : vec_json(cs.representative());
  } else if (op == "inverse") {
    r["relation"] = to_json(inverse(c));
  } else if (op == "compose") {
    if (with.empty()) fail(ErrorKind::InvalidInput, "--op compose needs --with");
    LinearRelation d = load(with, as_relation).relation;
    if (!(d.domain() == c.codomain())) fail(ErrorKind::InvalidInput, with + ": domain differs from the codomain of " + file);
    r["relation"] = to_json(compose(d, c));
  } else if (op == "stable") {
    r["sets"] = stable_json(stable_ops(c));
  } else {
    fail(ErrorKind::InvalidInput, "unknown --op " + op);
  }
  return out.emit("compute", r);
}

int cmd_sharp_flat(const Output& out, const std::string& file) {
  RelationFile rf = load(file, as_relation);
  if (!rf.relation.is_endo()) fail(ErrorKind::InvalidInput, file + ": $.codomain: an endorelation is required");
  SharpFlatData d = stable_ops(rf.relation);
  IdentityReport id = check_identities(d);
  Json orders{{"prime", d.prime.order()},     {"double_prime", d.dprime.order()},
              {"inverse_prime", d.inv_prime.order()}, {"inverse_double_prime", d.inv_dprime.order()},
              {"sharp", d.sharp.order()},     {"flat", d.flat.order()}};
  Json r{{"ring", to_json(d.relation.domain().ring())},
         {"orders", orders},
         {"sets", stable_json(d)},
         {"quotient", {{"invariants", vec_json(d.quotient.invariants())},
                       {"lifts", vecs_json(d.quotient.lifts())},
                       {"order", d.quotient.module().order()}}},
         {"theta", to_json(d.theta)},
         {"identities", {{"sharp_in_c_sharp", id.sharp_in_c_sharp},
                         {"flat_is_sharp_cap_c_flat", id.flat_is_sharp_cap_c_flat},
                         {"sharp_in_inverse_sharp", id.sharp_in_inv_sharp},
                         {"flat_is_sharp_cap_inverse_flat", id.flat_is_sharp_cap_inv_flat}}}};
  return out.emit("sharp-flat", r, id.all() ? kOk : kViolated);
}

int cmd_kron(const Output& out, const std::string& action, const std::vector<std::string>& files) {
  std::size_t need = action == "hom" ? 2 : 1;
  if (files.size() != need)
    fail(ErrorKind::InvalidInput, "kron " + action + " takes " + std::to_string(need) + " representation file(s)");
  Rep x = load(files[0], as_rep);
  Json r{{"action", action}};
  int code = kOk;
  if (action == "envelope") {
    Envelope e = envelope(x);
    r["codomain"] = to_json(e.codomain);
    r["unit"] = to_json(e.unit);
    r["epimorphic"] = is_surjective(e.unit.t) && is_surjective(e.unit.h);
  } else if (action == "torsion") {
    TorsionSequence s = torsion_sequence(x);
    r["torsion"] = to_json(s.torsion);
    r["inclusion"] = to_json(s.inclusion);
    r["quotient"] = to_json(s.quotient);
    r["projection"] = to_json(s.projection);
    r["exact"] = is_short_exact(s.inclusion, s.projection);
    if (!r["exact"].get<bool>()) code = kViolated;
  } else if (action == "split") {
    auto rt = splits(x);
    r["splits"] = rt.has_value();
    r["retraction"] = rt ? to_json(*rt) : Json(nullptr);
    r["every_sequence_splits_over_ring"] = ring_split_criterion(x.ring());
  } else if (action == "hom") {
    Rep y = load(files[1], as_rep);
    HomSpace h = hom_space(x, y);
    Json basis = Json::array();
    for (const RepMorphism& f : h.basis) basis.push_back(to_json(f));
    r["invariants"] = vec_json(h.quotient.invariants());
    r["order"] = x.ring().is_finite() ? Json(h.quotient.module().order()) : Json(nullptr);
    r["basis"] = basis;
  } else if (action == "predicates") {
    r["relation_object"] = is_relation_object(x);
    r["torsion"] = is_torsion(x);
    r["torsion_free"] = is_torsion_free(x);
    r["flat"] = rep_flat(x);
    r["projective"] = rep_projective(x);
    r["injective"] = rep_injective(x);
    if (x.ring().is_finite()) {
      Json direct{{"flat", rep_flat_direct(x)}, {"projective", rep_projective_direct(x)},
                  {"injective", rep_injective_direct(x)}};
      r["direct"] = direct;
      if (direct["flat"] != r["flat"] || direct["projective"] != r["projective"] || direct["injective"] != r["injective"])
        code = kViolated;
    }
  } else {
    fail(ErrorKind::InvalidInput, "unknown kron action " + action);
  }
  return out.emit("kron", r, code);
}

Json report_json(const ReductionReport& rep) {
  return Json{{"image_in_sharp", rep.image_in_sharp}, {"sharp_covered", rep.sharp_covered},
              {"intertwines", rep.intertwines},       {"meets_in_radical", rep.meets_in_radical},
              {"free", rep.free},                     {"sequence_exact", rep.sequence_exact},
              {"order_x", rep.order_x},               {"order_jx", rep.order_jx},
              {"order_quotient", rep.order_quotient}, {"ok", rep.ok()}};
}

int cmd_reduce(const Output& out, const std::string& input, const std::string& check) {
  RelationFile rf = load(input, as_relation);
  if (!rf.relation.is_endo()) fail(ErrorKind::InvalidInput, input + ": $.codomain: an endorelation is required");
  SharpFlatData d = stable_ops(rf.relation);
  Json r;
  Reduction red = [&] {
    if (!check.empty()) return load(check, [&](const Json& j) { return candidate_from_json(j, rf.relation.domain()); });
    return build_reduction(d);
  }();
  r["mode"] = check.empty() ? "build" : "check";
  r["hypothesis"] = d.relation.domain().ring().is_local() ? Json(reduction_hypothesis(d)) : Json(nullptr);
  r["X"] = to_json(red.x.x);
  r["X_rank"] = red.x.x.rank();
  r["T"] = to_json(red.x.t);
  r["rho"] = to_json(red.rho);
  ReductionReport rep = check_reduction(d, red);
  r["report"] = report_json(rep);
  return out.emit("reduce", r, rep.ok() ? kOk : kViolated);
}

int cmd_cover(const Output& out, const std::string& file, const std::string& element, std::size_t depth) {
  BDiagram d = load(file, [](const Json& j) { return diagram_from_json(j); });
  Vec m = element_from_text(element, d.module("").rank());
  RayResult res = ray_search(d, m, depth);
  Json r{{"diagram", d.info().name}, {"element", vec_json(d.module("").reduce(m))}, {"depth", depth},
         {"signs", res.signs}, {"vertices", res.vertices}};
  if (const auto* c1 = std::get_if<Case1>(&res.outcome)) {
    r["case"] = "Case1";
    r["j"] = c1->j;
    r["chain"] = vecs_json(c1->chain);
    r["image_generators"] = vecs_json(c1->image_generators);
  } else {
    const Case2& c2 = std::get<Case2>(res.outcome);
    r["case"] = "Case2UpToDepth";
    r["reached_depth"] = c2.depth;
    r["chain"] = vecs_json(c2.chain);
    r["certified"] = c2.certified;
    r["period"] = c2.period ? Json{c2.period->first, c2.period->second} : Json(nullptr);
    r["note"] = c2.note;
  }
  bool exclusive = verify_exclusivity(d, m, res);
  r["exclusivity_verified"] = exclusive;
  return out.emit("cover", r, exclusive ? kOk : kViolated);
}

int cmd_oracle(const Output& out, const std::string& file) {
  RelationFile rf = load(file, as_relation);
  if (!rf.relation.is_endo()) fail(ErrorKind::InvalidInput, file + ": $.codomain: an endorelation is required");
  const FgModule& m = rf.relation.domain();
  SharpFlatData d = stable_ops(rf.relation);
  OracleSets o = oracle_stable_sets(m, rf.generators);
  struct Row {
    const char* name;
    const Submodule& lattice;
    const ElementSet& oracle;
  };
  std::vector<Row> rows{{"prime", d.prime, o.prime},
                        {"double_prime", d.dprime, o.dprime},
                        {"inverse_prime", d.inv_prime, o.inv_prime},
                        {"inverse_double_prime", d.inv_dprime, o.inv_dprime},
                        {"sharp", d.sharp, o.sharp},
                        {"flat", d.flat, o.flat}};
  Json lat, orc, diff;
  bool equal = true;
  std::vector<Vec> all = enumerate_elements(m);
  for (const Row& row : rows) {
    ElementSet ls = members_of(row.lattice);
    lat[row.name] = vecs_json(elements_of(m, ls));
    orc[row.name] = vecs_json(elements_of(m, row.oracle));
    std::vector<Vec> only_l, only_o;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (ls[i] && !row.oracle[i]) only_l.push_back(all[i]);
      if (!ls[i] && row.oracle[i]) only_o.push_back(all[i]);
    }
    if (!only_l.empty() || !only_o.empty()) equal = false;
    diff[row.name] = Json{{"lattice_only", vecs_json(only_l)}, {"oracle_only", vecs_json(only_o)}};
  }
  Json r{{"cap", oracle_cap()}, {"module_order", m.order()}, {"lattice", lat}, {"oracle", orc}, {"diff", diff},
         {"equal", equal}};
  return out.emit("oracle", r, equal ? kOk : kViolated);
}

int cmd_check(const Output& out, const std::string& suite, std::uint64_t seed, std::size_t count) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  Json results = Json::array();
  bool ok = true;
  for (const std::string& name : names) {
    SuiteResult res = run_suite(name, seed, count);
    ok = ok && res.ok();
    results.push_back(to_json(res));
  }
  return out.emit("check", Json{{"suites", results}, {"ok", ok}}, ok ? kOk : kViolated);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear relations over Z and Z/n: stable operators, Kronecker representations, reductions and covering search"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--text", out.text, "Human-readable rendering instead of JSON");

  std::string file, op = "summary", element, with;
  auto* compute = app.add_subcommand("compute", "Module summary or relation operations");
  compute->add_option("file", file, "Module or relation file")->required();
  compute->add_option("--op", op, "summary | apply | inverse | compose | stable")->capture_default_str();
  compute->add_option("--element", element, "Element as a JSON array, for --op apply");
  compute->add_option("--with", with, "Second relation, for --op compose (applied after the first)");

  auto* sharp_flat = app.add_subcommand("sharp-flat", "Stable sets, the quotient and its automorphism");
  sharp_flat->add_option("file", file, "Relation file")->required();

  std::string action;
  std::vector<std::string> rep_files;
  auto* kron = app.add_subcommand("kron", "Kronecker representation operations");
  kron->add_option("action", action, "envelope | torsion | split | hom | predicates")
      ->required()
      ->check(CLI::IsMember({"envelope", "torsion", "split", "hom", "predicates"}));
  kron->add_option("files", rep_files, "Representation file(s); hom takes source and target")->required();

  std::string input, candidate;
  auto* reduce = app.add_subcommand("reduce", "Build or check a reduction");
  reduce->add_option("--input", input, "Relation file")->required();
  reduce->add_option("--check", candidate, "Candidate reduction to check instead of building one");

  std::string diagram;
  std::size_t depth = 6;
  auto* cover = app.add_subcommand("cover", "Ray search in a binary-tree diagram");
  cover->add_option("--diagram", diagram, "Diagram file")->required();
  cover->add_option("--element", element, "Element of the root module as a JSON array")->required();
  cover->add_option("--depth", depth, "Search depth")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Lattice and brute-force stable sets with their difference");
  oracle->add_option("file", file, "Relation file")->required();

  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  auto* check = app.add_subcommand("check", "Seeded property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  check->add_option("--seed", seed, "Seed")->capture_default_str();
  check->add_option("--count", count, "Number of instances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*compute) return cmd_compute(out, file, op, element, with);
    if (*sharp_flat) return cmd_sharp_flat(out, file);
    if (*kron) return cmd_kron(out, action, rep_files);
    if (*reduce) return cmd_reduce(out, input, candidate);
    if (*cover) return cmd_cover(out, diagram, element, depth);
    if (*oracle) return cmd_oracle(out, file);
    if (*check) return cmd_check(out, suite, seed, count);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kInput;
}
