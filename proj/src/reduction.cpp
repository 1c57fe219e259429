#include "linrel/reduction.hpp"

#include "linrel/examples.hpp"

namespace linrel {

namespace {

Matrix mat_mul_mod(const Matrix& a, const Matrix& b, Int n) {
  Matrix c = a * b;
  c.reduce_mod(n);
  return c;
}

Vec combine(const Matrix& coeffs, std::size_t row, const std::vector<Vec>& elems, const FgModule& m) {
  Vec out = m.zero();
  for (std::size_t l = 0; l < elems.size(); ++l) vec_axpy(out, coeffs(row, l), elems[l]);
  return m.reduce(out);
}

void require_finite(const Ring& r) {
  require(r.is_finite(), ErrorKind::UnsupportedRing, "reductions need a ring Z/n");
}

}  // namespace

bool reduction_hypothesis(const SharpFlatData& d) {
  const FgModule& m = d.relation.domain();
  Submodule jm = scale(m.ring().jacobson_generator(), Submodule::whole(m));
  return jm.subset_of(d.inv_prime + d.prime);
}

ReductionReport check_reduction(const LinearRelation& c, const Reduction& r) {
  return check_reduction(stable_ops(c), r);
}

ReductionReport check_reduction(const SharpFlatData& d, const Reduction& r) {
  const FgModule& m = d.relation.domain();
  const FgModule& x = r.x.x;
  require_finite(m.ring());
  require(r.rho.domain() == x && r.rho.codomain() == m, ErrorKind::ShapeMismatch,
          "rho must map the reduction module into the relation's module");
  require(r.x.t.domain() == x && r.x.t.codomain() == x, ErrorKind::ShapeMismatch, "T must be an endomorphism of X");
  ReductionReport rep;
  Submodule im = image(r.rho);
  rep.image_in_sharp = im.subset_of(d.sharp);
  rep.sharp_covered = d.flat + im == d.sharp;
  rep.intertwines = true;
  for (std::size_t i = 0; i < x.rank(); ++i) {
    Vec b = x.basis_vector(i);
    if (!d.relation.contains(r.rho.apply(b), r.rho.apply(r.x.t.apply(b)))) rep.intertwines = false;
  }
  Submodule jx = scale(m.ring().jacobson_generator(), Submodule::whole(x));
  rep.meets_in_radical = preimage(r.rho, d.flat) == jx;
  rep.free = is_free(x);
  rep.order_x = x.order();
  rep.order_jx = jx.order();
  rep.order_quotient = d.quotient.module().order();
  if (rep.image_in_sharp) {
    Matrix pi(d.quotient.lifts().size(), x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) pi.set_col(i, d.quotient.to_coords(r.rho.apply(x.basis_vector(i))));
    ModHom induced(x, d.quotient.module(), pi);
    bool equivariant = compose(induced, r.x.t) == compose(d.theta, induced);
    rep.sequence_exact = is_surjective(induced) && kernel(induced) == jx && equivariant &&
                         rep.order_x == rep.order_jx * rep.order_quotient;
  }
  return rep;
}

Reduction build_reduction(const LinearRelation& c, ReductionTrace* trace) {
  return build_reduction(stable_ops(c), trace);
}

Reduction build_reduction(const SharpFlatData& d, ReductionTrace* trace) {
  const LinearRelation& c = d.relation;
  const FgModule& m = c.domain();
  const Ring& ring = m.ring();
  require_finite(ring);
  require(ring.is_local(), ErrorKind::RingNotLocal, "reductions are built over Z/p^k");
  require(reduction_hypothesis(d), ErrorKind::HypothesisViolated, "J M is not contained in (C^-1)' + C'");
  Int n = ring.modulus();
  Int p = ring.prime_power().first;
  const Subquotient& quot = d.quotient;
  std::size_t s = quot.lifts().size();
  for (Int inv : quot.invariants())
    require(inv == p, ErrorKind::Internal, "sharp/flat is not killed by the radical");

  FgModule xfree = FgModule::free(ring, s);
  Matrix theta = d.theta.matrix();
  Matrix r(s, s);
  for (std::size_t w = 0; w < s; ++w)
    for (std::size_t l = 0; l < s; ++l) r(w, l) = theta(l, w);
  Matrix q = inverse(ModHom(xfree, xfree, r)).matrix();
  const std::vector<Vec>& mw = quot.lifts();

  Submodule left = intersect(d.dprime, d.inv_prime);
  Submodule right = intersect(d.prime, d.inv_dprime);
  LinearRelation cinv = inverse(c);
  std::vector<Vec> ell(s);
  std::vector<std::vector<Vec>> fw(s), bw(s);
  std::size_t window = 0;
  for (std::size_t w = 0; w < s; ++w) {
    Coset cm = apply_elem(c, mw[w]);
    require(!cm.is_empty(), ErrorKind::Internal, "lift has no successor");
    Vec target = combine(r, w, mw, m);
    auto pu = decompose_over(cm.translate(), d.flat, m.reduce(vec_sub(target, cm.representative())));
    require(pu.has_value(), ErrorKind::Internal, "theta relation does not hold for a lift");
    Vec pw = m.reduce(vec_add(cm.representative(), pu->first));
    ell[w] = m.reduce(vec_sub(pw, target));
    auto parts = decompose_over(left, right, ell[w]);
    require(parts.has_value(), ErrorKind::Internal, "flat element does not split");
    bw[w] = witness_null(cinv, d.inv_prime_chain, parts->first);
    fw[w] = witness_null(c, d.prime_chain, parts->second);
    window = std::max({window, fw[w].size() - 1, bw[w].size() - 1});
  }
  window += 1;

  auto term = [&](const std::vector<std::vector<Vec>>& wit, std::size_t idx) {
    std::vector<Vec> out;
    for (std::size_t l = 0; l < s; ++l) out.push_back(idx < wit[l].size() ? wit[l][idx] : m.zero());
    return out;
  };
  std::vector<Vec> z(s);
  for (std::size_t w = 0; w < s; ++w) z[w] = mw[w];
  // h^{-j→} = Σ_λ (q^{1+j})_{ωλ} ℓ_λ^{-j→} for j >= 0.
  Matrix qpow = q;
  for (std::size_t j = 0; j <= window; ++j) {
    std::vector<Vec> lj = term(fw, j);
    for (std::size_t w = 0; w < s; ++w) z[w] = m.reduce(vec_add(z[w], combine(qpow, w, lj, m)));
    qpow = mat_mul_mod(q, qpow, n);
  }
  // h^{←t} = Σ_λ (r^{←t})_{ωλ} ℓ_λ^{←t} for t >= 1, with r^{←1} = -I, r^{←t+1} = r r^{←t}.
  Matrix rback(s, s);
  for (std::size_t w = 0; w < s; ++w) rback(w, w) = n - 1;
  for (std::size_t t = 1; t <= window; ++t) {
    std::vector<Vec> lt = term(bw, t);
    for (std::size_t w = 0; w < s; ++w) z[w] = m.reduce(vec_add(z[w], combine(rback, w, lt, m)));
    rback = mat_mul_mod(r, rback, n);
  }

  Reduction red{make_laurent(ModHom(xfree, xfree, theta)), ModHom(xfree, m, Matrix::from_columns(z, m.rank()))};
  if (trace) *trace = ReductionTrace{r, q, mw, ell, fw, bw, window, z};
  return red;
}

Splitting semisimple_splitting(const LinearRelation& c) {
  const FgModule& m = c.domain();
  const Ring& ring = m.ring();
  require(ring.is_finite() && ring.is_semisimple(), ErrorKind::RingNotSemisimple,
          "splitting needs a squarefree modulus");
  Int n = ring.modulus();
  SharpFlatData d = stable_ops(c);
  std::vector<Vec> ys;
  std::vector<Int> orders;
  std::vector<Matrix> blocks;
  std::vector<Vec> cgens = c.submodule().generators();
  for (const auto& [p, e] : ring.factorization()) {
    // idem is 1 mod p and 0 mod n/p; it carries M/pM isomorphically onto idem*M.
    Int rest = n / p;
    Int idem = mod_floor(mul(rest, inverse_mod(mod_floor(rest, p), p)), n);
    Ring rp = Ring::mod(p);
    std::vector<Vec> rels = m.relations();
    for (Vec& v : rels) vec_mod(v, p);
    FgModule mp(rp, m.rank(), rels);
    std::vector<Vec> gens = cgens;
    for (Vec& v : gens) vec_mod(v, p);
    Reduction red = build_reduction(LinearRelation::generated(mp, mp, gens));
    for (std::size_t w = 0; w < red.x.x.rank(); ++w) {
      ys.push_back(m.reduce(vec_scale(idem, red.rho.matrix().col(w))));
      orders.push_back(p);
    }
    blocks.push_back(red.x.t.matrix());
  }
  std::size_t total = ys.size();
  std::vector<Vec> relations;
  for (std::size_t i = 0; i < total; ++i) {
    Vec v(total, 0);
    v[i] = orders[i];
    relations.push_back(v);
  }
  FgModule ymod(ring, total, relations);
  Matrix tm(total, total);
  std::size_t off = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) tm(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  ModHom emb(ymod, m, Matrix::from_columns(ys, m.rank()));
  ModHom t(ymod, ymod, tm);
  Splitting out{image(emb), emb, t};
  out.direct_sum = is_injective(emb) && out.y + d.flat == d.sharp && intersect(out.y, d.flat).is_zero();
  out.equivalence = true;
  for (const Vec& y : enumerate_elements(ymod)) {
    Vec v = emb.apply(y);
    Vec tz = emb.apply(t.apply(y));
    std::vector<Vec> hits = apply_elem(c, v).meet(out.y).elements();
    if (hits != std::vector<Vec>{tz}) out.equivalence = false;
    ++out.checked;
  }
  return out;
}

NonSplitReport non_split_witness(Int p, int k) {
  require(k >= 2, ErrorKind::InvalidInput, "the non-split example needs k >= 2");
  ExampleA ex = example_a(p, k);
  SharpFlatData d = stable_ops(ex.d);
  NonSplitReport rep;
  rep.p = p;
  rep.k = k;
  rep.order_dprime = d.dprime.order();
  rep.order_prime = d.prime.order();
  rep.order_sharp = d.sharp.order();
  rep.order_flat = d.flat.order();
  rep.quotient_invariants = d.quotient.invariants();
  rep.ann_sharp = annihilator(as_module(d.sharp).module);
  rep.ann_sum = lcm(annihilator(as_module(d.flat).module), annihilator(d.quotient.module()));
  rep.certified = rep.ann_sharp != rep.ann_sum;
  return rep;
}

}  // namespace linrel
