#include "linrel/relation.hpp"

#include <algorithm>
#include <string>

namespace linrel {

LinearRelation::LinearRelation(FgModule domain, FgModule codomain, Submodule c)
    : dom_(std::move(domain)), cod_(std::move(codomain)), c_(std::move(c)) {
  require(c_.parent() == direct_sum(dom_, cod_), ErrorKind::ParentMismatch,
          "relation submodule does not live in domain (+) codomain");
}

LinearRelation LinearRelation::generated(const FgModule& domain, const FgModule& codomain,
                                         const std::vector<Vec>& gens) {
  FgModule sum = direct_sum(domain, codomain);
  for (const Vec& g : gens)
    require(g.size() == sum.rank(), ErrorKind::ShapeMismatch,
            "relation generator has length " + std::to_string(g.size()) + ", expected " + std::to_string(sum.rank()));
  return LinearRelation(domain, codomain, Submodule::generated(sum, gens));
}

LinearRelation graph(const ModHom& f) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < f.domain().rank(); ++i)
    gens.push_back(vec_concat(f.domain().basis_vector(i), f.matrix().col(i)));
  return LinearRelation::generated(f.domain(), f.codomain(), gens);
}

LinearRelation inverse(const LinearRelation& c) {
  std::size_t a = c.domain().rank(), b = c.codomain().rank();
  std::vector<Vec> gens;
  for (const Vec& g : c.submodule().lattice().basis()) gens.push_back(vec_concat(vec_slice(g, a, b), vec_slice(g, 0, a)));
  return LinearRelation::generated(c.codomain(), c.domain(), gens);
}

LinearRelation compose(const LinearRelation& d, const LinearRelation& c) {
  require(c.codomain() == d.domain(), ErrorKind::DomainMismatch, "composition of non-composable relations");
  std::size_t a = c.domain().rank(), b = c.codomain().rank(), n = d.codomain().rank();
  std::size_t total = a + b + n;
  Lattice left = embed(c.submodule().lattice(), total, 0, true);
  Lattice right = embed(d.submodule().lattice(), total, a, true);
  Lattice both = left.intersect(right);
  std::vector<Vec> gens;
  for (const Vec& g : both.basis()) gens.push_back(vec_concat(vec_slice(g, 0, a), vec_slice(g, a + b, n)));
  return LinearRelation::generated(c.domain(), d.codomain(), gens);
}

LinearRelation full_relation(const FgModule& m) {
  FgModule sum = direct_sum(m, m);
  return LinearRelation(m, m, Submodule::whole(sum));
}

LinearRelation relation_direct_sum(const LinearRelation& x, const LinearRelation& y) {
  std::size_t la = x.domain().rank(), ma = x.codomain().rank();
  std::size_t lb = y.domain().rank(), mb = y.codomain().rank();
  std::vector<Vec> gens;
  for (const Vec& g : x.submodule().lattice().basis()) {
    Vec v = vec_slice(g, 0, la);
    v.resize(la + lb, 0);
    Vec w = vec_slice(g, la, ma);
    w.resize(ma + mb, 0);
    gens.push_back(vec_concat(v, w));
  }
  for (const Vec& g : y.submodule().lattice().basis()) {
    Vec v = vec_concat(Vec(la, 0), vec_slice(g, 0, lb));
    Vec w = vec_concat(Vec(ma, 0), vec_slice(g, lb, mb));
    gens.push_back(vec_concat(v, w));
  }
  return LinearRelation::generated(direct_sum(x.domain(), y.domain()), direct_sum(x.codomain(), y.codomain()), gens);
}

Coset::Coset(Submodule translate, std::optional<Vec> representative) : w_(std::move(translate)) {
  if (representative) rep_ = w_.reduce(w_.parent().reduce(*representative));
}

const Vec& Coset::representative() const {
  require(rep_.has_value(), ErrorKind::NotAMember, "empty coset has no representative");
  return *rep_;
}

bool Coset::contains(const Vec& v) const {
  if (!rep_) return false;
  return w_.contains(vec_sub(v, *rep_));
}

std::vector<Vec> Coset::elements(Int cap) const {
  std::vector<Vec> out;
  if (!rep_) return out;
  for (const Vec& w : enumerate_elements(w_, cap)) out.push_back(w_.parent().reduce(vec_add(*rep_, w)));
  std::sort(out.begin(), out.end());
  return out;
}

Coset Coset::meet(const Submodule& s) const {
  require_same_parent(w_, s, "coset meet");
  Submodule common = intersect(w_, s);
  if (!rep_) return Coset(common, std::nullopt);
  auto d = decompose_over(s, w_, *rep_);
  if (!d) return Coset(common, std::nullopt);
  return Coset(common, d->first);
}

Submodule apply_sub(const LinearRelation& c, const Submodule& s) {
  require(s.parent() == c.domain(), ErrorKind::DomainMismatch, "apply_sub: submodule of a different module");
  std::size_t a = c.domain().rank(), b = c.codomain().rank();
  Lattice over = embed(s.lattice(), a + b, 0, true);
  Lattice meet = c.submodule().lattice().intersect(over);
  return Submodule(c.codomain(), project(meet, a, b) + c.codomain().presentation());
}

Coset apply_elem(const LinearRelation& c, const Vec& l) {
  require(l.size() == c.domain().rank(), ErrorKind::ShapeMismatch, "apply_elem: element length");
  std::size_t a = c.domain().rank(), b = c.codomain().rank();
  Submodule c0 = apply_sub(c, Submodule::zero(c.domain()));
  const FgModule& sum = c.submodule().parent();
  Submodule fiber(sum, embed(c.domain().presentation(), a + b, 0, false) +
                           embed(Lattice::full(b, sum.ring().modulus()), a + b, a, false));
  auto d = decompose_over(c.submodule(), fiber, vec_concat(l, Vec(b, 0)));
  if (!d) return Coset(c0, std::nullopt);
  return Coset(c0, vec_slice(d->first, a, b));
}

namespace {

std::vector<Submodule> chain_until_stable(const LinearRelation& step, Submodule start, bool ascending) {
  std::vector<Submodule> chain{start};
  for (;;) {
    Submodule next = apply_sub(step, chain.back());
    bool ordered = ascending ? chain.back().subset_of(next) : next.subset_of(chain.back());
    require(ordered, ErrorKind::Internal, "stable chain is not monotone");
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

Submodule image_under(const LinearRelation& c, const Submodule& s) { return apply_sub(c, s); }

ModHom theta_matrix(const LinearRelation& c, const Submodule& sharp, const Submodule& flat, const Subquotient& q) {
  std::size_t s = q.lifts().size();
  Matrix m(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    Coset cm = apply_elem(c, q.lifts()[i]);
    require(!cm.is_empty(), ErrorKind::Internal, "theta: lift without successor");
    auto d = decompose_over(sharp, cm.translate() + flat, cm.representative());
    require(d.has_value(), ErrorKind::Internal, "theta: no successor inside sharp part");
    m.set_col(i, q.to_coords(d->first));
  }
  return ModHom(q.module(), q.module(), m);
}

}  // namespace

SharpFlatData stable_ops(const LinearRelation& c) {
  require(c.is_endo(), ErrorKind::DomainMismatch, "stable operators need an endorelation");
  require(c.domain().ring().is_finite(), ErrorKind::UnsupportedRing,
          "stable operators over Z are unsupported: chains need not stabilise");
  const FgModule& m = c.domain();
  LinearRelation inv = inverse(c);
  SharpFlatData d;
  d.relation = c;
  d.prime_chain = chain_until_stable(inv, Submodule::zero(m), true);
  d.inv_prime_chain = chain_until_stable(c, Submodule::zero(m), true);
  d.prime = d.prime_chain.back();
  d.inv_prime = d.inv_prime_chain.back();
  d.dprime = chain_until_stable(inv, Submodule::whole(m), false).back();
  d.inv_dprime = chain_until_stable(c, Submodule::whole(m), false).back();
  d.sharp = intersect(d.dprime, d.inv_dprime);
  d.flat = intersect(d.dprime, d.inv_prime) + intersect(d.inv_dprime, d.prime);
  d.quotient = Subquotient(d.sharp, d.flat);
  d.theta = theta_matrix(c, d.sharp, d.flat, d.quotient);
  d.theta_inverse = theta_matrix(inv, d.sharp, d.flat, d.quotient);
  require(compose(d.theta, d.theta_inverse) == ModHom::identity(d.quotient.module()) &&
              compose(d.theta_inverse, d.theta) == ModHom::identity(d.quotient.module()),
          ErrorKind::Internal, "theta is not invertible");
  return d;
}

IdentityReport check_identities(const SharpFlatData& d) {
  const LinearRelation& c = d.relation;
  LinearRelation inv = inverse(c);
  IdentityReport r;
  r.sharp_in_c_sharp = d.sharp.subset_of(image_under(c, d.sharp));
  r.flat_is_sharp_cap_c_flat = d.flat == intersect(d.sharp, image_under(c, d.flat));
  r.sharp_in_inv_sharp = d.sharp.subset_of(image_under(inv, d.sharp));
  r.flat_is_sharp_cap_inv_flat = d.flat == intersect(d.sharp, image_under(inv, d.flat));
  return r;
}

Vec theta_of_element(const SharpFlatData& d, const Vec& m) {
  require(d.sharp.contains(m), ErrorKind::NotAMember, "theta: element is not in the sharp part");
  Coset cm = apply_elem(d.relation, m);
  auto r = decompose_over(d.sharp, cm.translate() + d.flat, cm.representative());
  require(r.has_value(), ErrorKind::Internal, "theta: no successor inside sharp part");
  return r->first;
}

std::vector<Vec> witness_null(const LinearRelation& c, const std::vector<Submodule>& chain, const Vec& m) {
  std::size_t t = 0;
  while (t < chain.size() && !chain[t].contains(m)) ++t;
  require(t < chain.size(), ErrorKind::NotAMember, "element has no path to 0");
  std::vector<Vec> path{c.domain().reduce(m)};
  for (std::size_t s = t; s > 0; --s) {
    Coset next = apply_elem(c, path.back()).meet(chain[s - 1]);
    require(!next.is_empty(), ErrorKind::Internal, "witness layer is empty");
    path.push_back(next.representative());
  }
  return path;
}

std::vector<Vec> witness_null(const SharpFlatData& d, const Vec& m) {
  return witness_null(d.relation, d.prime_chain, m);
}

std::vector<Vec> witness_forward(const SharpFlatData& d, const Vec& m, std::size_t length) {
  require(d.dprime.contains(m), ErrorKind::NotAMember, "element has no infinite forward path");
  std::vector<Vec> path{d.relation.domain().reduce(m)};
  for (std::size_t i = 0; i < length; ++i) {
    Coset next = apply_elem(d.relation, path.back()).meet(d.dprime);
    require(!next.is_empty(), ErrorKind::Internal, "forward witness step is empty");
    path.push_back(next.representative());
  }
  return path;
}

ModHom sharp_flat_functor(const ModHom& f, const SharpFlatData& b, const SharpFlatData& c) {
  require(f.domain() == b.relation.domain() && f.codomain() == c.relation.domain(), ErrorKind::DomainMismatch,
          "functor: homomorphism ends do not match the relations");
  std::size_t a = f.domain().rank();
  for (const Vec& g : b.relation.submodule().lattice().basis())
    require(c.relation.contains(f.apply(vec_slice(g, 0, a)), f.apply(vec_slice(g, a, a))), ErrorKind::NotAMorphism,
            "functor: (f + f) does not map the source relation into the target relation");
  const Subquotient& qb = b.quotient;
  const Subquotient& qc = c.quotient;
  Matrix m(qc.lifts().size(), qb.lifts().size());
  for (std::size_t i = 0; i < qb.lifts().size(); ++i) m.set_col(i, qc.to_coords(f.apply(qb.lifts()[i])));
  return ModHom(qb.module(), qc.module(), m);
}

LaurentModule make_laurent(const ModHom& t) {
  require(t.domain() == t.codomain(), ErrorKind::DomainMismatch, "T must be an endomorphism");
  return {t.domain(), t, inverse(t)};
}

LinearRelation graph_T(const LaurentModule& x) { return graph(x.t); }

bool sharp_flat_recovers(const LaurentModule& x) {
  SharpFlatData d = stable_ops(graph_T(x));
  if (!(d.sharp == Submodule::whole(x.x)) || !d.flat.is_zero()) return false;
  Matrix phi(d.quotient.lifts().size(), x.x.rank());
  for (std::size_t i = 0; i < x.x.rank(); ++i) phi.set_col(i, d.quotient.to_coords(x.x.basis_vector(i)));
  ModHom iso(x.x, d.quotient.module(), phi);
  if (!is_injective(iso) || !is_surjective(iso)) return false;
  return compose(d.theta, iso) == compose(iso, x.t);
}

}  // namespace linrel
