#include <gtest/gtest.h>

#include <set>

#include "linrel/examples.hpp"
#include "linrel/kronecker.hpp"
#include "linrel/random.hpp"

using namespace linrel;

namespace {

const Ring kZ4 = Ring::mod(4);

Rep diag_rep(const Ring& r) {
  FgModule one = FgModule::free(r, 1);
  return Rep(one, one, Matrix::identity(1), Matrix::identity(1));
}

}  // namespace

TEST(Kronecker, RelationObjectCriterion) {
  EXPECT_TRUE(is_relation_object(diag_rep(kZ4)));
  EXPECT_FALSE(is_relation_object(inj_t(kZ4)));
  FgModule m = FgModule::free(kZ4, 1);
  Rep pr(direct_sum(m, m), m, Matrix::from_rows({{1, 0}}, 2), Matrix::from_rows({{0, 1}}, 2));
  EXPECT_TRUE(is_relation_object(pr));
  EXPECT_FALSE(is_relation_object(example_e()));
  EXPECT_TRUE(is_torsion(inj_t(kZ4)));
}

TEST(Kronecker, RelationRoundTrip) {
  ExampleA ex = example_a();
  Rep x = rel_to_rep(ex.d);
  EXPECT_TRUE(is_relation_object(x));
  EXPECT_EQ(rep_to_rel(x), ex.d);
  FgModule m = FgModule::free(kZ4, 2);
  Rep g = rel_to_rep(graph(ModHom::identity(m)));
  EXPECT_TRUE(is_injective(g.mu_a()) && is_surjective(g.mu_a()));
  EXPECT_TRUE(is_injective(g.mu_b()) && is_surjective(g.mu_b()));
  RepMorphism id = morphism_to_rep(ModHom::identity(ex.module), ex.d, ex.d);
  EXPECT_EQ(id, rep_identity(x));
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    RelationInstance ri = random_relation(rng);
    EXPECT_EQ(rep_to_rel(rel_to_rep(ri.relation)), ri.relation);
  }
  try {
    rep_to_rel(example_e());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInSubcategory);
  }
}

TEST(Kronecker, MorphismTransportIsFunctorial) {
  Rng rng(32);
  for (int t = 0; t < 30; ++t) {
    Ring r = random_ring(rng);
    FgModule m = random_module(rng, r, 2);
    ModHom f = random_hom(rng, m, m), g = random_hom(rng, m, m);
    LinearRelation c = graph(ModHom::identity(m));
    RepMorphism tf = morphism_to_rep(f, c, c), tg = morphism_to_rep(g, c, c);
    EXPECT_EQ(morphism_to_rep(compose(g, f), c, c), rep_compose(tg, tf));
  }
}

TEST(Kronecker, HomSpaceExamples) {
  Rep t = inj_t(kZ4);
  EXPECT_TRUE(hom_space(t, diag_rep(kZ4)).is_zero());
  EXPECT_TRUE(hom_space(proj_h(kZ4), inj_t(kZ4)).is_zero());
  Rep e = example_e();
  HomSpace h = hom_space(e, e);
  EXPECT_TRUE(h.solutions.contains(h.pack(rep_identity(e))));
  EXPECT_EQ(h.quotient.module().order(), 8);
  for (const RepMorphism& b : h.basis) EXPECT_TRUE(is_rep_morphism(b, e, e));
}

TEST(Kronecker, HomSpaceMatchesBruteForce) {
  Rng rng(33);
  for (int t = 0; t < 60; ++t) {
    Ring r = Ring::mod(t % 2 ? 2 : 3);
    Rep x = random_rep(rng, r, 1), y = random_rep(rng, r, 2);
    HomSpace h = hom_space(x, y);
    std::size_t count = 0;
    std::size_t total = h.packed_size();
    Vec v(total, 0);
    // Count all matrix pairs modulo the zero lattice that are morphisms.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < total; ++i) combos *= static_cast<std::size_t>(r.modulus());
    std::set<Vec> seen;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < total; ++i) {
        v[i] = static_cast<Int>(c % static_cast<std::size_t>(r.modulus()));
        c /= static_cast<std::size_t>(r.modulus());
      }
      try {
        RepMorphism f = h.unpack(v);
        if (is_rep_morphism(f, x, y)) seen.insert(h.pack(f));
      } catch (const Error&) {
      }
    }
    count = seen.size();
    EXPECT_EQ(static_cast<Int>(count), h.quotient.module().order());
  }
}

TEST(Kronecker, EnvelopeExamples) {
  Envelope e = envelope(example_e());
  EXPECT_EQ(e.codomain.mt().order(), 2);
  EXPECT_EQ(e.codomain.mh().order(), 4);
  EXPECT_TRUE(is_relation_object(e.codomain));
  Envelope t = envelope(inj_t(kZ4));
  EXPECT_TRUE(t.codomain.mt().is_zero_module());
  Envelope d = envelope(diag_rep(kZ4));
  EXPECT_TRUE(is_injective(d.unit.t) && is_surjective(d.unit.t));
}

TEST(Kronecker, TorsionSequenceExamples) {
  TorsionSequence s = torsion_sequence(example_e());
  EXPECT_EQ(s.torsion.mt().order(), 2);
  EXPECT_TRUE(is_torsion(s.torsion));
  EXPECT_TRUE(is_short_exact(s.inclusion, s.projection));
  TorsionSequence w = torsion_sequence(inj_t(kZ4));
  EXPECT_EQ(w.torsion.mt().order(), 4);
  EXPECT_TRUE(w.quotient.mt().is_zero_module());
  TorsionSequence f = torsion_sequence(diag_rep(kZ4));
  EXPECT_TRUE(f.torsion.mt().is_zero_module());
}

TEST(Kronecker, TorsionTheoryOnSamples) {
  Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    Ring r = random_ring(rng);
    Rep x = random_rep(rng, r);
    TorsionSequence s = torsion_sequence(x);
    ASSERT_TRUE(is_short_exact(s.inclusion, s.projection));
    ASSERT_TRUE(is_relation_object(s.quotient));
    Rep y = envelope(random_rep(rng, r)).codomain;
    EXPECT_TRUE(hom_space(s.torsion, y).is_zero());
    Envelope e = envelope(x);
    EXPECT_TRUE(is_surjective(e.unit.t) && is_surjective(e.unit.h));
    RepMorphism g = random_rep_morphism(rng, hom_space(x, y));
    auto k = factor_through_envelope(e, x, y, g);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(rep_compose(*k, e.unit), g);
  }
}

TEST(Kronecker, SplitCriterion) {
  EXPECT_FALSE(splits(split_witness_z4()).has_value());
  EXPECT_FALSE(ring_split_criterion(kZ4));
  EXPECT_TRUE(ring_split_criterion(Ring::mod(6)));
  EXPECT_TRUE(splits(diag_rep(kZ4)).has_value());
  Rng rng(35);
  for (int t = 0; t < 60; ++t) {
    Rep x = random_rep(rng, Ring::mod(6));
    auto r = splits(x);
    ASSERT_TRUE(r.has_value());
    TorsionSequence s = torsion_sequence(x);
    EXPECT_EQ(rep_compose(*r, s.inclusion), rep_identity(s.torsion));
  }
}

TEST(Kronecker, ExtensionClosure) {
  Rng rng(36);
  for (int t = 0; t < 60; ++t) {
    RepSequence s = random_extension(rng, random_ring(rng));
    ASSERT_TRUE(is_short_exact(s.f, s.g));
    EXPECT_TRUE(is_injective(s.f.h));
    EXPECT_TRUE(is_relation_object(s.middle));
  }
  RepSequence bad = non_closed_quotient(kZ4);
  EXPECT_TRUE(is_short_exact(bad.f, bad.g));
  EXPECT_TRUE(is_relation_object(bad.left));
  EXPECT_TRUE(is_relation_object(bad.middle));
  EXPECT_FALSE(is_relation_object(bad.right));
}

TEST(Kronecker, ProductClosure) {
  Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    Ring r = random_ring(rng);
    Rep a = envelope(random_rep(rng, r)).codomain, b = envelope(random_rep(rng, r)).codomain;
    EXPECT_TRUE(is_relation_object(rep_direct_sum(a, b)));
  }
}

TEST(Kronecker, FlatInjectiveExamples) {
  Rep reg = regular_rep(kZ4);
  EXPECT_TRUE(rep_flat(reg));
  EXPECT_TRUE(rep_projective(reg));
  EXPECT_TRUE(rep_projective_direct(reg));
  EXPECT_FALSE(rep_flat(inj_t(kZ4)));
  EXPECT_FALSE(rep_flat_direct(inj_t(kZ4)));
  EXPECT_TRUE(rep_injective(inj_t(kZ4)));
  EXPECT_TRUE(rep_injective_direct(inj_t(kZ4)));
  EXPECT_TRUE(rep_injective(inj_h(kZ4)));
  EXPECT_TRUE(rep_injective_direct(inj_h(kZ4)));
  // (0, R; 0, 0): the stacked map 0 -> R² is not surjective.
  EXPECT_FALSE(rep_injective(proj_h(kZ4)));
  EXPECT_FALSE(rep_injective_direct(proj_h(kZ4)));
  EXPECT_TRUE(rep_projective(proj_h(kZ4)));
}

TEST(Kronecker, CriteriaAgreeWithDirectChecks) {
  Rng rng(38);
  for (int t = 0; t < 80; ++t) {
    Ring r = Ring::mod(t % 2 ? 4 : 6);
    Rep x = t % 3 == 0 ? random_rep(rng, r) : random_block_rep(rng, r);
    EXPECT_EQ(rep_flat(x), rep_flat_direct(x));
    EXPECT_EQ(rep_projective(x), rep_projective_direct(x));
    EXPECT_EQ(rep_injective(x), rep_injective_direct(x));
  }
}
