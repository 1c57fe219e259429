#include "linrel/suites.hpp"

#include <functional>
#include <map>

#include "linrel/oracle.hpp"

namespace linrel {

namespace {

struct Outcome {
  enum Kind { Pass, Fail, Skip } kind = Pass;
  std::string message;
};

Outcome pass() { return {}; }
Outcome failure(const std::string& msg) { return {Outcome::Fail, msg}; }
Outcome skip() { return {Outcome::Skip, {}}; }

using Check = std::function<Outcome(Rng&, std::size_t)>;

Outcome oracle_check(Rng& rng, std::size_t) {
  RelationInstance ri = random_relation(rng);
  SharpFlatData d = stable_ops(ri.relation);
  OracleSets o = oracle_stable_sets(ri.module, ri.generators);
  if (members_of(d.prime) != o.prime) return failure("C' differs from the oracle");
  if (members_of(d.dprime) != o.dprime) return failure("C'' differs from the oracle");
  if (members_of(d.inv_prime) != o.inv_prime) return failure("(C^-1)' differs from the oracle");
  if (members_of(d.inv_dprime) != o.inv_dprime) return failure("(C^-1)'' differs from the oracle");
  if (members_of(d.sharp) != o.sharp) return failure("C# differs from the oracle");
  if (members_of(d.flat) != o.flat) return failure("Cb differs from the oracle");
  return pass();
}

Outcome theta_check(Rng& rng, std::size_t) {
  RelationInstance ri = random_relation(rng);
  SharpFlatData d = stable_ops(ri.relation);
  IdentityReport id = check_identities(d);
  if (!id.sharp_in_c_sharp) return failure("C# is not inside C C#");
  if (!id.flat_is_sharp_cap_c_flat) return failure("Cb differs from C# cap C Cb");
  if (!id.sharp_in_inv_sharp) return failure("C# is not inside C^-1 C#");
  if (!id.flat_is_sharp_cap_inv_flat) return failure("Cb differs from C# cap C^-1 Cb");
  const FgModule& q = d.quotient.module();
  if (compose(d.theta, d.theta_inverse) != ModHom::identity(q) || compose(d.theta_inverse, d.theta) != ModHom::identity(q))
    return failure("theta is not invertible");
  std::vector<Vec> elems = enumerate_elements(d.sharp);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Vec y = theta_of_element(d, elems[i]);
    if (!d.sharp.contains(y)) return failure("theta leaves C#");
    if (d.quotient.to_coords(y) != d.theta.apply(d.quotient.to_coords(elems[i])))
      return failure("theta on elements disagrees with the theta matrix");
    const Vec& x2 = elems[(i * 7 + 3) % elems.size()];
    Vec sum = theta_of_element(d, d.relation.domain().reduce(vec_add(elems[i], x2)));
    Vec parts = q.reduce(vec_add(d.quotient.to_coords(y), d.quotient.to_coords(theta_of_element(d, x2))));
    if (d.quotient.to_coords(sum) != parts) return failure("theta is not additive");
  }
  return pass();
}

Outcome functor_check(Rng& rng, std::size_t) {
  LaurentModule x = random_laurent(rng, random_ring(rng));
  return sharp_flat_recovers(x) ? pass() : failure("sharp/flat of graph(T) does not recover (X, T)");
}

Outcome torsion_check(Rng& rng, std::size_t) {
  Ring r = random_ring(rng);
  Rep x = random_rep(rng, r);
  TorsionSequence s = torsion_sequence(x);
  if (!is_short_exact(s.inclusion, s.projection)) return failure("torsion sequence is not exact");
  if (!is_torsion(s.torsion) || !is_relation_object(s.quotient)) return failure("torsion sequence ends are misplaced");
  Rep y = envelope(random_rep(rng, r)).codomain;
  if (!hom_space(s.torsion, y).is_zero()) return failure("nonzero map from torsion to a relation object");
  Envelope e = envelope(x);
  if (!is_surjective(e.unit.t) || !is_surjective(e.unit.h)) return failure("envelope unit is not epimorphic");
  RepMorphism g = random_rep_morphism(rng, hom_space(x, y));
  auto k = factor_through_envelope(e, x, y, g);
  if (!k || rep_compose(*k, e.unit) != g) return failure("morphism does not factor through the envelope");
  return pass();
}

Outcome extension_check(Rng& rng, std::size_t) {
  RepSequence s = random_extension(rng, random_ring(rng));
  if (!is_short_exact(s.f, s.g)) return failure("sequence is not exact");
  if (!is_injective(s.f.h)) return failure("f_h is not injective");
  if (!is_relation_object(s.left) || !is_relation_object(s.right)) return failure("ends are not relation objects");
  return is_relation_object(s.middle) ? pass() : failure("middle term is not a relation object");
}

Outcome split_check(Rng& rng, std::size_t) {
  Rep x = random_rep(rng, Ring::mod(6));
  auto r = splits(x);
  if (!r) return failure("torsion sequence over Z/6 does not split");
  if (rep_compose(*r, torsion_sequence(x).inclusion) != rep_identity(torsion_sequence(x).torsion))
    return failure("retraction is not a left inverse of the inclusion");
  return pass();
}

Outcome criteria_check(Rng& rng, std::size_t index) {
  Ring r = Ring::mod(index % 2 ? 4 : 6);
  Rep x = index % 3 == 0 ? random_rep(rng, r) : random_block_rep(rng, r);
  if (rep_flat(x) != rep_flat_direct(x)) return failure("flatness criterion disagrees with the direct check");
  if (rep_projective(x) != rep_projective_direct(x)) return failure("projectivity criterion disagrees with the direct check");
  if (rep_injective(x) != rep_injective_direct(x)) return failure("injectivity criterion disagrees with the direct check");
  return pass();
}

Outcome reduction_check(Rng& rng, std::size_t index) {
  Ring r = Ring::mod(index % 2 ? 4 : 9);
  RelationInstance ri = index % 3 == 0 ? random_sparse_relation(rng, r) : random_relation(rng, r);
  SharpFlatData d = stable_ops(ri.relation);
  if (!reduction_hypothesis(d)) return skip();
  ReductionReport rep = check_reduction(d, build_reduction(d));
  if (!rep.ok()) return failure("built reduction fails its conditions");
  return rep.free ? pass() : failure("built reduction is not free");
}

Outcome splitting_check(Rng& rng, std::size_t index) {
  Ring r = Ring::mod(std::vector<Int>{2, 3, 6}[index % 3]);
  RelationInstance ri = index % 2 ? random_sparse_relation(rng, r, 3) : random_relation(rng, r);
  Splitting s = semisimple_splitting(ri.relation);
  if (!s.direct_sum) return failure("Y is not a complement of Cb in C#");
  return s.equivalence ? pass() : failure("Ty = z iff z in Cy fails");
}

Outcome covering_check(Rng& rng, std::size_t index) {
  Ring r = Ring::mod(std::vector<Int>{2, 3, 4, 5, 6}[index % 5]);
  BDiagram d = random_diagram(r, rng(), 2);
  for (const Vec& m : enumerate_elements(d.module(""))) {
    if (d.module("").is_zero(m)) continue;
    RayResult res = ray_search(d, m, 5);
    if (!verify_exclusivity(d, m, res)) return failure("ray search cases are not exclusive");
    const std::vector<Vec>& chain = std::holds_alternative<Case1>(res.outcome) ? std::get<Case1>(res.outcome).chain
                                                                              : std::get<Case2>(res.outcome).chain;
    if (!chain_is_valid(d, res.signs, chain)) return failure("witness chain is not admissible");
  }
  std::string signs;
  for (int i = 0; i < 5; ++i) signs += uniform(rng, 0, 1) ? '+' : '-';
  if (!check_monotonicity(d, signs).ok()) return failure("monotonicity fails");
  std::vector<BDiagram> fs{d, random_diagram(r, rng(), 2)};
  for (std::size_t n = 0; n <= 4; ++n)
    if (!product_compat(fs, signs, n) || !coproduct_compat(fs, signs, n)) return failure("product compatibility fails");
  return pass();
}

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> table{
      {"oracle", oracle_check},       {"theta", theta_check},         {"functor", functor_check},
      {"torsion", torsion_check},     {"extension", extension_check}, {"split", split_check},
      {"criteria", criteria_check},   {"reduction", reduction_check}, {"splitting", splitting_check},
      {"covering", covering_check}};
  return table;
}

}  // namespace

Rng instance_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  return Rng(seq);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : checks()) out.push_back(k);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t count) {
  auto it = checks().find(name);
  require(it != checks().end(), ErrorKind::InvalidInput, "unknown suite \"" + name + "\"");
  SuiteResult res;
  res.suite = name;
  res.seed = seed;
  res.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = instance_rng(seed, i);
    Outcome o;
    try {
      o = it->second(rng, i);
    } catch (const Error& e) {
      o = failure(std::string(to_string(e.kind())) + ": " + e.what());
    }
    if (o.kind == Outcome::Pass) ++res.passed;
    if (o.kind == Outcome::Skip) ++res.skipped;
    if (o.kind == Outcome::Fail) res.failures.push_back({i, o.message});
  }
  return res;
}

Json to_json(const SuiteResult& r) {
  Json fails = Json::array();
  for (const SuiteFailure& f : r.failures) fails.push_back(Json{{"index", f.index}, {"message", f.message}});
  return Json{{"suite", r.suite},       {"seed", r.seed},       {"count", r.count},
              {"passed", r.passed},     {"skipped", r.skipped}, {"failed", r.failures.size()},
              {"failures", fails},      {"ok", r.ok()}};
}

Json random_instance_json(std::uint64_t seed) {
  Rng rng = instance_rng(seed, 0);
  RelationInstance ri = random_relation(rng);
  return Json{{"domain", to_json(ri.module)}, {"codomain", to_json(ri.module)}, {"generators", vecs_json(ri.generators)}};
}

}  // namespace linrel
