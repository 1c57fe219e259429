#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linrel/lattice.hpp"
#include "linrel/matrix.hpp"
#include "linrel/ring.hpp"

namespace linrel {

// M = R^rank / N, where N is given by integer relation vectors. Elements are
// coordinate vectors in R^rank; reduce() yields the canonical representative.
class FgModule {
 public:
  FgModule() = default;
  FgModule(Ring ring, std::size_t rank, const std::vector<Vec>& relations = {});
  FgModule(Ring ring, Lattice presentation);
  static FgModule free(Ring ring, std::size_t rank) { return FgModule(ring, rank); }

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return pres_.dim(); }
  const Lattice& presentation() const { return pres_; }
  // Presentation rows other than the implicit modulus multiples.
  std::vector<Vec> relations() const;

  Vec reduce(const Vec& v) const;
  bool is_zero(const Vec& v) const { return pres_.contains(v); }
  Vec zero() const { return Vec(rank(), 0); }
  Vec basis_vector(std::size_t i) const;

  bool is_finite() const { return ring_.is_finite() || pres_.is_full_rank(); }
  // |M|; throws InfiniteModule.
  Int order() const;
  bool is_zero_module() const { return pres_.is_full_rank() && pres_.index() == 1; }

  bool operator==(const FgModule& o) const { return ring_ == o.ring_ && pres_ == o.pres_; }

 private:
  Ring ring_ = Ring::integers();
  Lattice pres_;
};

FgModule direct_sum(const FgModule& a, const FgModule& b);

// Submodule of a parent module, stored as a lattice containing the parent's
// presentation.
class Submodule {
 public:
  Submodule() = default;
  Submodule(FgModule parent, Lattice lattice);
  static Submodule generated(const FgModule& parent, const std::vector<Vec>& gens);
  static Submodule zero(const FgModule& parent);
  static Submodule whole(const FgModule& parent);

  const FgModule& parent() const { return parent_; }
  const Lattice& lattice() const { return lat_; }
  bool contains(const Vec& v) const { return lat_.contains(v); }
  // Canonical representative of v modulo this submodule.
  Vec reduce(const Vec& v) const { return lat_.reduce(v); }
  // Nonzero generators: basis rows that are nonzero in the parent.
  std::vector<Vec> generators() const;
  // |S|; throws InfiniteModule.
  Int order() const;
  bool is_zero() const { return lat_ == parent_.presentation(); }
  bool subset_of(const Submodule& o) const;

  bool operator==(const Submodule& o) const { return parent_ == o.parent_ && lat_ == o.lat_; }

 private:
  FgModule parent_;
  Lattice lat_;
};

void require_same_parent(const Submodule& a, const Submodule& b, const char* op);
Submodule operator+(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
Submodule scale(Int c, const Submodule& s);
// Submodule of M generated by the first block of a direct sum.
Submodule direct_sum(const Submodule& a, const Submodule& b);

// Homomorphism x -> matrix * x; matrix is codomain.rank x domain.rank.
class ModHom {
 public:
  ModHom() = default;
  ModHom(FgModule domain, FgModule codomain, Matrix matrix);
  static ModHom identity(const FgModule& m);
  static ModHom zero(const FgModule& dom, const FgModule& cod);

  const FgModule& domain() const { return dom_; }
  const FgModule& codomain() const { return cod_; }
  const Matrix& matrix() const { return mat_; }
  Vec apply(const Vec& x) const;

  bool operator==(const ModHom& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && mat_ == o.mat_;
  }

 private:
  FgModule dom_, cod_;
  Matrix mat_;
};

// g after f.
ModHom compose(const ModHom& g, const ModHom& f);
ModHom hom_sum(const ModHom& f, const ModHom& g);  // pointwise sum
ModHom hom_direct_sum(const ModHom& f, const ModHom& g);

Submodule image(const ModHom& f, const Submodule& s);
Submodule image(const ModHom& f);
Submodule preimage(const ModHom& f, const Submodule& s);
Submodule kernel(const ModHom& f);
// Codomain modulo the image; the projection has identity matrix.
FgModule cokernel(const ModHom& f);
bool is_injective(const ModHom& f);
bool is_surjective(const ModHom& f);
// Inverse of a bijective homomorphism; throws NotAMorphism otherwise.
ModHom inverse(const ModHom& f);

// u in U, v in V with u + v == m, both canonical; the first solution under
// the canonical generator order.
std::optional<std::pair<Vec, Vec>> decompose_over(const Submodule& u, const Submodule& v, const Vec& m);

// Canonical elements of a finite module in lexicographic order.
std::vector<Vec> enumerate_elements(const FgModule& m, Int cap = 0);
std::vector<Vec> enumerate_elements(const Submodule& s, Int cap = 0);
// Position of an element in the enumeration order of its module.
std::size_t element_index(const FgModule& m, const Vec& v);
Vec element_at(const FgModule& m, std::size_t index);

// Quotient top/bottom as a module in Smith form: generators lift_i of order
// invariants_i (trivial cyclic factors dropped).
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Submodule& top, const Submodule& bottom);

  const FgModule& module() const { return q_; }
  const std::vector<Vec>& lifts() const { return lifts_; }
  const Vec& invariants() const { return inv_; }
  const Submodule& top() const { return top_; }
  const Submodule& bottom() const { return bottom_; }

  // Element of top -> coordinates in module().
  Vec to_coords(const Vec& m) const;
  // Coordinates -> canonical element of top (a lift).
  Vec from_coords(const Vec& q) const;
  // Inclusion-derived map: the matrix whose columns are the lifts.
  Matrix lift_matrix() const;

 private:
  Submodule top_, bottom_;
  FgModule q_;
  std::vector<Vec> lifts_;
  Vec inv_;
  Matrix coord_map_;           // top-basis coefficients -> Smith coordinates
  std::vector<std::size_t> kept_;
};

// Nontrivial invariant factors in divisibility order; 0 marks a free Z summand.
Vec invariant_factors(const FgModule& m);
Vec invariant_factors(const Submodule& s);
bool is_free(const FgModule& m);
bool is_projective(const FgModule& m);
bool is_flat(const FgModule& m);
bool is_injective_module(const FgModule& m);
// Generator of the annihilator ideal (0 for a module with a free Z summand).
Int annihilator(const FgModule& m);

// A submodule viewed as a module in its own right, with its inclusion.
struct EmbeddedModule {
  FgModule module;
  ModHom inclusion;
};
EmbeddedModule as_module(const Submodule& s);

// Direct sum of `copies` copies of a lattice.
Lattice lattice_power(const Lattice& l, std::size_t copies);
Lattice lattice_sum(const Lattice& a, const Lattice& b);

// Matrices F with F(presentation of a) inside presentation of b, vectorised
// column-major (column j of F occupies [j*b.rank, (j+1)*b.rank)).
Lattice hom_lattice(const FgModule& a, const FgModule& b);
Matrix unvec(const Vec& x, std::size_t rows, std::size_t cols);
Vec vec_of(const Matrix& m);

}  // namespace linrel
