#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "linrel/relation.hpp"

namespace linrel {

// Representation (M_t, M_h; μ_a, μ_b) of the Kronecker quiver t ⇉ h.
class Rep {
 public:
  Rep(ModHom mu_a, ModHom mu_b);
  Rep(const FgModule& mt, const FgModule& mh, const Matrix& a, const Matrix& b);

  const FgModule& mt() const { return a_.domain(); }
  const FgModule& mh() const { return a_.codomain(); }
  const ModHom& mu_a() const { return a_; }
  const ModHom& mu_b() const { return b_; }
  const Ring& ring() const { return a_.domain().ring(); }

  bool operator==(const Rep& o) const { return a_ == o.a_ && b_ == o.b_; }

 private:
  ModHom a_, b_;
};

// Pair (f_t, f_h) with f_h μ_c = ν_c f_t for c = a, b.
struct RepMorphism {
  ModHom t, h;
  bool operator==(const RepMorphism& o) const { return t == o.t && h == o.h; }
};

bool is_rep_morphism(const RepMorphism& f, const Rep& x, const Rep& y);
// Throws NotAMorphism when the pair does not intertwine.
RepMorphism make_rep_morphism(const Rep& x, const Rep& y, const Matrix& t, const Matrix& h);
RepMorphism rep_identity(const Rep& x);
RepMorphism rep_zero(const Rep& x, const Rep& y);
RepMorphism rep_compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism rep_sum(const RepMorphism& f, const RepMorphism& g);
Rep rep_direct_sum(const Rep& x, const Rep& y);
Rep rep_direct_sum(const std::vector<Rep>& xs);

// M_t -> M_h ⊕ M_h, m -> (μ_a m, μ_b m).
ModHom stacked_map(const Rep& x);
// M_t ⊕ M_t -> M_h, (m, m') -> μ_a m + μ_b m'.
ModHom row_map(const Rep& x);

// ker μ_a ∩ ker μ_b = 0.
bool is_relation_object(const Rep& x);
bool is_torsion(const Rep& x);
bool is_torsion_free(const Rep& x);

// (M, C) -> (C, M; first projection, second projection).
Rep rel_to_rep(const LinearRelation& c);
// Requires a relation object; the relation is the image of the stacked map.
LinearRelation rep_to_rel(const Rep& x);
// f : M -> N with (f ⊕ f) C ⊆ D, transported to (f_Δ, f).
RepMorphism morphism_to_rep(const ModHom& f, const LinearRelation& c, const LinearRelation& d);

// Element x of the domain with f(x) = w, if any.
std::optional<Vec> solve_preimage(const ModHom& f, const Vec& w);

struct HomSpace {
  Rep source, target;
  Lattice solutions;  // packed pairs (vec f_t, vec f_h) that are morphisms
  Lattice zero;       // packed pairs representing the zero morphism
  Subquotient quotient;
  std::vector<RepMorphism> basis;  // one morphism per quotient generator

  bool is_zero() const { return basis.empty(); }
  std::size_t packed_size() const { return solutions.dim(); }
  Vec pack(const RepMorphism& f) const;
  RepMorphism unpack(const Vec& v) const;
};
HomSpace hom_space(const Rep& x, const Rep& y);

// Some k in `unknown` with psi(k) = target in `target_space`; psi must be
// additive. First solution under the generator order.
std::optional<RepMorphism> solve_hom(const HomSpace& unknown,
                                     const std::function<RepMorphism(const RepMorphism&)>& psi,
                                     const HomSpace& target_space, const RepMorphism& target);

struct Envelope {
  RepMorphism unit;  // (quotient map, identity)
  Rep codomain;
};
Envelope envelope(const Rep& x);
// k with k ∘ unit = g, for g : x -> y.
std::optional<RepMorphism> factor_through_envelope(const Envelope& e, const Rep& x, const Rep& y,
                                                   const RepMorphism& g);

struct TorsionSequence {
  Rep torsion;  // (ker μ_a ∩ ker μ_b, 0; 0, 0)
  RepMorphism inclusion;
  Rep middle;
  RepMorphism projection;
  Rep quotient;  // envelope codomain
};
TorsionSequence torsion_sequence(const Rep& x);
// 0 -> a -f-> b -g-> c -> 0 exact at both vertices.
bool is_short_exact(const RepMorphism& f, const RepMorphism& g);

// Retraction r of the torsion inclusion (r ∘ ι = id), if one exists.
std::optional<RepMorphism> splits(const Rep& x);
bool ring_split_criterion(const Ring& ring);

// Criteria in terms of R-modules.
bool rep_flat(const Rep& x);
bool rep_projective(const Rep& x);
bool rep_injective(const Rep& x);
// Decomposition-based checks over Z/n: the free cover splits, respectively
// the embedding into a sum of standard injectives splits.
bool rep_projective_direct(const Rep& x);
bool rep_flat_direct(const Rep& x);
bool rep_injective_direct(const Rep& x);

// Standard objects: P_t = (R, R²; e1, e2), P_h = (0, R), I_t = (R, 0),
// I_h = (R², R; p1, p2), and the regular representation P_t ⊕ P_h.
Rep proj_t(const Ring& r);
Rep proj_h(const Ring& r);
Rep inj_t(const Ring& r);
Rep inj_h(const Ring& r);
Rep regular_rep(const Ring& r);

struct RepSequence {
  Rep left, middle, right;
  RepMorphism f, g;
};
// (0, R) -> (R, R; id, id) -> (R, 0): the cokernel leaves the relation objects.
RepSequence non_closed_quotient(const Ring& r);
// (Z/4, Z/4; 2, 2).
Rep example_e();
// (Z/4, Z/2; π, π): its torsion sequence does not split.
Rep split_witness_z4();

}  // namespace linrel
