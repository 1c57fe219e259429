#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linrel/covering.hpp"
#include "linrel/module.hpp"

namespace linrel {

// Element-level reference computations. Nothing here uses lattice
// combinatorics beyond reducing element coordinates.

// Size cap for brute force; LINREL_ORACLE_CAP overrides the default 4096.
Int oracle_cap();

// Membership bitmap over the canonical enumeration of a module.
using ElementSet = std::vector<char>;

ElementSet members_of(const Submodule& s);
std::vector<Vec> elements_of(const FgModule& m, const ElementSet& set);

struct RelationDigraph {
  FgModule module;
  std::vector<Vec> elements;                       // canonical enumeration
  std::vector<std::vector<std::uint32_t>> out;     // x -> y for (x, y) in C
  std::size_t edge_count = 0;
};

// The additive closure of the generators (pairs (x, y) written as one vector)
// inside M (+) M, as a digraph on M.
RelationDigraph oracle_digraph(const FgModule& m, const std::vector<Vec>& generators, Int cap = oracle_cap());

struct OracleSets {
  ElementSet prime, dprime, inv_prime, inv_dprime, sharp, flat;
};

OracleSets oracle_stable_sets(const RelationDigraph& g);
OracleSets oracle_stable_sets(const FgModule& m, const std::vector<Vec>& generators, Int cap = oracle_cap());

// Shortest path to 0, smallest successor first.
std::vector<Vec> oracle_null_witness(const RelationDigraph& g, const Vec& m);

// Elementwise μ̃_1 ... μ̃_n applied to a set of elements of M[n].
std::vector<Vec> oracle_mu_leq(const BDiagram& d, const std::string& signs, std::size_t n,
                               const std::vector<Vec>& s, Int cap = oracle_cap());

}  // namespace linrel
