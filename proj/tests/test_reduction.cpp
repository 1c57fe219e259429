#include <gtest/gtest.h>

#include "linrel/examples.hpp"
#include "linrel/random.hpp"
#include "linrel/reduction.hpp"

using namespace linrel;

namespace {

// Over Z/9 the correction terms of this relation are nonzero.
LinearRelation correction_instance() {
  FgModule m = FgModule::free(Ring::mod(9), 4);
  return LinearRelation::generated(m, m,
                                   {{0, 0, 0, 0, 0, 6, 0, 0},
                                    {0, 0, 7, 0, 3, 0, 2, 0},
                                    {0, 1, 1, 0, 0, 0, 0, 0},
                                    {3, 0, 0, 0, 8, 0, 0, 0},
                                    {0, 0, 0, 6, 0, 0, 0, 0}});
}

}  // namespace

TEST(Reduction, ExampleACandidate) {
  ExampleA ex = example_a();
  FgModule x = FgModule::free(Ring::mod(4), 1);
  Reduction cand{make_laurent(ModHom::identity(x)), ModHom(x, ex.module, Matrix::from_rows({{1}, {0}}, 1))};
  ReductionReport rep = check_reduction(ex.d, cand);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.free);
  EXPECT_EQ(rep.order_x, 4);
  EXPECT_EQ(rep.order_jx, 2);
  EXPECT_EQ(rep.order_quotient, 2);
}

TEST(Reduction, TrivialCandidates) {
  FgModule m = FgModule::free(Ring::mod(4), 1);
  FgModule none = FgModule::free(Ring::mod(4), 0);
  Reduction empty{make_laurent(ModHom::identity(none)), ModHom::zero(none, m)};
  EXPECT_FALSE(check_reduction(graph(ModHom::identity(m)), empty).sharp_covered);
  FgModule zero_mod(Ring::mod(4), 1, {{1}});
  Reduction on_zero{make_laurent(ModHom::identity(none)), ModHom::zero(none, zero_mod)};
  EXPECT_TRUE(check_reduction(graph(ModHom::identity(zero_mod)), on_zero).ok());
  FgModule f3 = FgModule::free(Ring::mod(3), 2);
  ModHom t(f3, f3, Matrix::from_rows({{0, 1}, {1, 1}}, 2));
  Reduction self{make_laurent(t), ModHom::identity(f3)};
  EXPECT_TRUE(check_reduction(graph(t), self).ok());
}

TEST(Reduction, BuildOnExampleA) {
  ExampleA ex = example_a();
  Reduction r = build_reduction(ex.d);
  EXPECT_EQ(r.x.x.rank(), 1u);
  ReductionReport rep = check_reduction(ex.d, r);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.free);
  for (auto [p, k] : std::vector<std::pair<Int, int>>{{3, 2}, {2, 3}}) {
    ExampleA e = example_a(p, k);
    EXPECT_TRUE(check_reduction(e.d, build_reduction(e.d)).ok());
  }
}

TEST(Reduction, BuildOnGraphOfAutomorphism) {
  Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    Ring r = Ring::mod(std::vector<Int>{2, 3, 5}[t % 3]);
    FgModule x = FgModule::free(r, static_cast<std::size_t>(uniform(rng, 1, 3)));
    LaurentModule lm = make_laurent(random_automorphism(rng, x));
    Reduction red = build_reduction(graph_T(lm));
    EXPECT_EQ(red.x.x.rank(), x.rank());
    EXPECT_TRUE(check_reduction(graph_T(lm), red).ok());
  }
  // Over Z/4 the radical is nonzero while C' and (C^-1)' vanish.
  FgModule z4 = FgModule::free(Ring::mod(4), 1);
  EXPECT_FALSE(reduction_hypothesis(stable_ops(graph(ModHom::identity(z4)))));
}

TEST(Reduction, CorrectionTermsAreNeeded) {
  LinearRelation c = correction_instance();
  SharpFlatData d = stable_ops(c);
  ReductionTrace tr;
  Reduction red = build_reduction(d, &tr);
  bool nonzero = false;
  for (const Vec& l : tr.ell) nonzero = nonzero || !c.domain().is_zero(l);
  EXPECT_TRUE(nonzero);
  EXPECT_GE(tr.window, 2u);
  EXPECT_TRUE(check_reduction(d, red).ok());
  Matrix lifted = tr.r;
  lifted.reduce_mod(3);
  Matrix theta_t = d.theta.matrix().transpose();
  EXPECT_EQ(lifted, theta_t);
  Reduction naive{red.x, ModHom(red.x.x, c.domain(), Matrix::from_columns(tr.m, c.domain().rank()))};
  EXPECT_FALSE(check_reduction(d, naive).intertwines);
}

TEST(Reduction, SeededInstances) {
  Rng rng(52);
  int built = 0;
  for (int t = 0; t < 400 && built < 120; ++t) {
    Ring r = Ring::mod(t % 2 ? 4 : 9);
    RelationInstance ri = t % 3 == 0 ? random_sparse_relation(rng, r) : random_relation(rng, r);
    SharpFlatData d = stable_ops(ri.relation);
    if (!reduction_hypothesis(d)) {
      EXPECT_THROW(build_reduction(d), Error);
      continue;
    }
    ReductionReport rep = check_reduction(d, build_reduction(d));
    ASSERT_TRUE(rep.ok());
    ASSERT_TRUE(rep.free);
    ++built;
  }
  EXPECT_GE(built, 50);
}

TEST(Reduction, Errors) {
  FgModule m = FgModule::free(Ring::mod(6), 1);
  try {
    build_reduction(graph(ModHom::identity(m)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingNotLocal);
  }
  FgModule z4 = FgModule::free(Ring::mod(4), 1);
  try {
    build_reduction(graph(ModHom::identity(z4)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisViolated);
  }
  try {
    semisimple_splitting(graph(ModHom::identity(z4)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingNotSemisimple);
  }
}

TEST(Splitting, Examples) {
  FgModule m = FgModule::free(Ring::mod(6), 2);
  Splitting id = semisimple_splitting(graph(ModHom::identity(m)));
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(id.y, Submodule::whole(m));
  Splitting full = semisimple_splitting(full_relation(m));
  EXPECT_TRUE(full.ok());
  EXPECT_TRUE(full.y.is_zero());
  ExampleA ex = example_a(2, 1);
  Splitting a = semisimple_splitting(ex.d);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.y.order(), 2);
}

TEST(Splitting, SeededSemisimple) {
  Rng rng(53);
  for (int t = 0; t < 90; ++t) {
    Ring r = Ring::mod(std::vector<Int>{2, 3, 6}[t % 3]);
    RelationInstance ri = t % 2 ? random_sparse_relation(rng, r, 3) : random_relation(rng, r);
    Splitting s = semisimple_splitting(ri.relation);
    ASSERT_TRUE(s.ok());
    EXPECT_EQ(s.checked, static_cast<std::size_t>(s.y.order()));
  }
}

TEST(NonSplit, Witnesses) {
  NonSplitReport a = non_split_witness(2, 2);
  EXPECT_EQ(a.order_dprime, 8);
  EXPECT_EQ(a.order_prime, 4);
  EXPECT_EQ(a.quotient_invariants, Vec{2});
  EXPECT_EQ(a.ann_sharp, 4);
  EXPECT_EQ(a.ann_sum, 2);
  EXPECT_TRUE(a.certified);
  NonSplitReport b = non_split_witness(3, 2);
  EXPECT_EQ(b.ann_sharp, 9);
  EXPECT_EQ(b.ann_sum, 3);
  NonSplitReport c = non_split_witness(2, 3);
  EXPECT_EQ(c.ann_sharp, 8);
  EXPECT_EQ(c.ann_sum, 4);
  EXPECT_TRUE(c.certified);
}
