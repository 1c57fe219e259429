#include "linrel/random.hpp"

namespace linrel {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

Ring random_ring(Rng& rng) {
  static const Int kModuli[] = {2, 3, 4, 6, 8, 9};
  return Ring::mod(kModuli[uniform(rng, 0, 5)]);
}

namespace {

Vec random_vector(Rng& rng, std::size_t len, Int n) {
  Vec v(len);
  for (Int& x : v) x = uniform(rng, 0, n - 1);
  return v;
}

}  // namespace

FgModule random_module(Rng& rng, const Ring& ring, std::size_t max_rank, std::size_t max_relations) {
  std::size_t rank = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_rank)));
  std::size_t rels = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(max_relations)));
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rels; ++i) r.push_back(random_vector(rng, rank, ring.modulus()));
  return FgModule(ring, rank, r);
}

ModHom random_hom(Rng& rng, const FgModule& a, const FgModule& b) {
  Lattice h = hom_lattice(a, b);
  Vec x(a.rank() * b.rank(), 0);
  for (const Vec& row : h.basis()) vec_axpy(x, uniform(rng, 0, a.ring().modulus() - 1), row);
  vec_mod(x, a.ring().modulus());
  return ModHom(a, b, unvec(x, b.rank(), a.rank()));
}

ModHom random_automorphism(Rng& rng, const FgModule& m) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ModHom f = random_hom(rng, m, m);
    if (is_injective(f)) return f;
  }
  return ModHom::identity(m);
}

LaurentModule random_laurent(Rng& rng, const Ring& ring, std::size_t max_rank) {
  FgModule x = random_module(rng, ring, max_rank);
  return make_laurent(random_automorphism(rng, x));
}

RelationInstance random_relation(Rng& rng, const Ring& ring, std::size_t max_rank, std::size_t max_gens) {
  FgModule m = random_module(rng, ring, max_rank);
  std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_gens)));
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, 2 * m.rank(), ring.modulus()));
  return {m, gens, LinearRelation::generated(m, m, gens)};
}

RelationInstance random_relation(Rng& rng) {
  Ring r = random_ring(rng);
  return random_relation(rng, r);
}

RelationInstance random_sparse_relation(Rng& rng, const Ring& ring, std::size_t max_rank, std::size_t max_gens) {
  FgModule m = FgModule::free(ring, static_cast<std::size_t>(uniform(rng, 2, static_cast<Int>(max_rank))));
  std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<Int>(max_gens)));
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(2 * m.rank(), 0);
    for (Int& x : v)
      if (uniform(rng, 0, 3) == 0) x = uniform(rng, 0, ring.modulus() - 1);
    gens.push_back(v);
  }
  return {m, gens, LinearRelation::generated(m, m, gens)};
}

Rep random_rep(Rng& rng, const Ring& ring, std::size_t max_rank) {
  FgModule mt = random_module(rng, ring, max_rank), mh = random_module(rng, ring, max_rank);
  return Rep(random_hom(rng, mt, mh), random_hom(rng, mt, mh));
}

Rep random_block_rep(Rng& rng, const Ring& ring) {
  std::vector<Rep> parts;
  std::size_t count = static_cast<std::size_t>(uniform(rng, 1, 3));
  for (std::size_t i = 0; i < count; ++i) {
    switch (uniform(rng, 0, 4)) {
      case 0: parts.push_back(proj_t(ring)); break;
      case 1: parts.push_back(proj_h(ring)); break;
      case 2: parts.push_back(inj_t(ring)); break;
      case 3: parts.push_back(inj_h(ring)); break;
      default: parts.push_back(random_rep(rng, ring, 1)); break;
    }
  }
  Rep x = rep_direct_sum(parts);
  ModHom gt = random_automorphism(rng, x.mt()), gh = random_automorphism(rng, x.mh());
  ModHom gti = inverse(gt);
  return Rep(compose(gh, compose(x.mu_a(), gti)), compose(gh, compose(x.mu_b(), gti)));
}

RepMorphism random_rep_morphism(Rng& rng, const HomSpace& h) {
  Int n = h.source.ring().modulus();
  Vec x(h.packed_size(), 0);
  for (const Vec& row : h.solutions.basis()) vec_axpy(x, uniform(rng, 0, n - 1), row);
  vec_mod(x, n);
  return h.unpack(x);
}

RepSequence random_extension(Rng& rng, const Ring& ring, std::size_t max_rank) {
  Rep l = envelope(random_rep(rng, ring, max_rank)).codomain;
  Rep n = envelope(random_rep(rng, ring, max_rank)).codomain;
  FgModule mt = direct_sum(l.mt(), n.mt()), mh = direct_sum(l.mh(), n.mh());
  std::size_t lt = l.mt().rank(), lh = l.mh().rank();
  auto glue = [&](const ModHom& lam, const ModHom& eta) {
    Matrix d = random_hom(rng, n.mt(), l.mh()).matrix();
    Matrix m = block_diag(lam.matrix(), eta.matrix());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) m(i, lt + j) = d(i, j);
    return ModHom(mt, mh, m);
  };
  ModHom a = glue(l.mu_a(), n.mu_a());
  ModHom b = glue(l.mu_b(), n.mu_b());
  Rep m(a, b);
  auto inc = [](std::size_t small, std::size_t big) {
    Matrix e(big, small);
    for (std::size_t i = 0; i < small; ++i) e(i, i) = 1;
    return e;
  };
  auto proj = [](std::size_t offset, std::size_t small, std::size_t big) {
    Matrix e(small, big);
    for (std::size_t i = 0; i < small; ++i) e(i, offset + i) = 1;
    return e;
  };
  RepMorphism f = make_rep_morphism(l, m, inc(lt, mt.rank()), inc(lh, mh.rank()));
  RepMorphism g = make_rep_morphism(m, n, proj(lt, n.mt().rank(), mt.rank()), proj(lh, n.mh().rank(), mh.rank()));
  return {l, m, n, f, g};
}

}  // namespace linrel
