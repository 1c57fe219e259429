#pragma once

#include <optional>
#include <vector>

#include "linrel/module.hpp"

namespace linrel {

// A submodule C of L (+) M; elements are concatenated coordinates (l, m).
class LinearRelation {
 public:
  LinearRelation() = default;
  LinearRelation(FgModule domain, FgModule codomain, Submodule c);
  static LinearRelation generated(const FgModule& domain, const FgModule& codomain,
                                  const std::vector<Vec>& gens);

  const FgModule& domain() const { return dom_; }
  const FgModule& codomain() const { return cod_; }
  const Submodule& submodule() const { return c_; }
  bool is_endo() const { return dom_ == cod_; }
  bool contains(const Vec& l, const Vec& m) const { return c_.contains(vec_concat(l, m)); }

  bool operator==(const LinearRelation& o) const { return c_ == o.c_ && dom_ == o.dom_; }

 private:
  FgModule dom_, cod_;
  Submodule c_;
};

LinearRelation graph(const ModHom& f);
LinearRelation inverse(const LinearRelation& c);
// d after c: {(l, n) : exists m, (l, m) in c and (m, n) in d}.
LinearRelation compose(const LinearRelation& d, const LinearRelation& c);
LinearRelation full_relation(const FgModule& m);
LinearRelation relation_direct_sum(const LinearRelation& a, const LinearRelation& b);

// Either empty or representative + translate, with a canonical representative.
class Coset {
 public:
  Coset(Submodule translate, std::optional<Vec> representative);
  bool is_empty() const { return !rep_.has_value(); }
  const Vec& representative() const;
  const Submodule& translate() const { return w_; }
  bool contains(const Vec& v) const;
  std::vector<Vec> elements(Int cap = 0) const;
  // Intersection with a submodule of the same parent.
  Coset meet(const Submodule& s) const;

 private:
  Submodule w_;
  std::optional<Vec> rep_;
};

Coset apply_elem(const LinearRelation& c, const Vec& l);
Submodule apply_sub(const LinearRelation& c, const Submodule& s);

struct SharpFlatData {
  LinearRelation relation;
  Submodule prime;        // elements with a forward path to 0
  Submodule dprime;       // elements with an infinite forward path
  Submodule inv_prime;    // the same for the inverse relation
  Submodule inv_dprime;
  Submodule sharp;
  Submodule flat;
  // prime_chain[t]: elements with a path of length <= t to 0; last term is prime.
  std::vector<Submodule> prime_chain;
  std::vector<Submodule> inv_prime_chain;
  Subquotient quotient;   // sharp / flat
  ModHom theta;           // automorphism of quotient.module()
  ModHom theta_inverse;
};

// Requires a finite ring and an endorelation; Z raises UnsupportedRing.
SharpFlatData stable_ops(const LinearRelation& c);

struct IdentityReport {
  bool sharp_in_c_sharp = false;          // C# in C C#
  bool flat_is_sharp_cap_c_flat = false;  // Cb = C# cap C Cb
  bool sharp_in_inv_sharp = false;        // C# in C^-1 C#
  bool flat_is_sharp_cap_inv_flat = false;
  bool all() const {
    return sharp_in_c_sharp && flat_is_sharp_cap_c_flat && sharp_in_inv_sharp && flat_is_sharp_cap_inv_flat;
  }
};
IdentityReport check_identities(const SharpFlatData& d);

// Theta on an element of sharp: some m' in sharp with m' in Cm + flat.
Vec theta_of_element(const SharpFlatData& d, const Vec& m);

// Shortest path m = w[0], w[i+1] in C w[i], ending at 0, choosing the
// lexicographically smallest admissible successor. chain is the prime chain
// of c. Throws NotAMember when no such path exists.
std::vector<Vec> witness_null(const LinearRelation& c, const std::vector<Submodule>& chain, const Vec& m);
std::vector<Vec> witness_null(const SharpFlatData& d, const Vec& m);
// Path of the given length inside dprime starting at m.
std::vector<Vec> witness_forward(const SharpFlatData& d, const Vec& m, std::size_t length);

// Induced map on sharp/flat quotients for f : L -> M with (f+f)(B) in C.
ModHom sharp_flat_functor(const ModHom& f, const SharpFlatData& b, const SharpFlatData& c);

// Module with an automorphism T.
struct LaurentModule {
  FgModule x;
  ModHom t;
  ModHom t_inv;
};
LaurentModule make_laurent(const ModHom& t);
LinearRelation graph_T(const LaurentModule& x);

// The quotient of graph_T recovers (X, T): coords(T x) = theta(coords(x)) and
// coords is an isomorphism X -> sharp/flat.
bool sharp_flat_recovers(const LaurentModule& x);

}  // namespace linrel
