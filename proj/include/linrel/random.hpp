#pragma once

#include <random>
#include <vector>

#include "linrel/kronecker.hpp"
#include "linrel/relation.hpp"

namespace linrel {

// All generators draw from one caller-owned engine.
using Rng = std::mt19937_64;

Int uniform(Rng& rng, Int lo, Int hi);  // inclusive

// Z/2, Z/3, Z/4, Z/6, Z/8 or Z/9.
Ring random_ring(Rng& rng);
// Rank in [1, max_rank], up to max_relations random relations.
FgModule random_module(Rng& rng, const Ring& ring, std::size_t max_rank = 3, std::size_t max_relations = 2);
ModHom random_hom(Rng& rng, const FgModule& a, const FgModule& b);
// Random bijective endomorphism; falls back to the identity.
ModHom random_automorphism(Rng& rng, const FgModule& m);
LaurentModule random_laurent(Rng& rng, const Ring& ring, std::size_t max_rank = 3);

struct RelationInstance {
  FgModule module;
  std::vector<Vec> generators;  // raw generators, as drawn
  LinearRelation relation;
};
RelationInstance random_relation(Rng& rng, const Ring& ring, std::size_t max_rank = 3, std::size_t max_gens = 4);
RelationInstance random_relation(Rng& rng);
// Free module of rank in [2, max_rank] with generators whose entries are
// mostly zero; these reach long witness chains more often.
RelationInstance random_sparse_relation(Rng& rng, const Ring& ring, std::size_t max_rank = 4,
                                        std::size_t max_gens = 6);

// Random modules at both vertices with random arrows.
Rep random_rep(Rng& rng, const Ring& ring, std::size_t max_rank = 2);
// Direct sum of standard projectives, injectives and small random pieces,
// in a randomly changed basis.
Rep random_block_rep(Rng& rng, const Ring& ring);
RepMorphism random_rep_morphism(Rng& rng, const HomSpace& h);
// 0 -> L -> M -> N -> 0 with relation-object ends and a random gluing term.
RepSequence random_extension(Rng& rng, const Ring& ring, std::size_t max_rank = 2);

}  // namespace linrel
