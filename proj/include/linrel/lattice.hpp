#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linrel/arith.hpp"
#include "linrel/matrix.hpp"

namespace linrel {

// A subgroup of Z^dim containing modulus*Z^dim, stored as its Hermite normal
// form. With modulus n > 0 every coordinate is taken in [0, n) and the basis
// has one row per column; with modulus 0 pivots may be missing.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t dim, Int modulus, const std::vector<Vec>& gens = {});
  static Lattice full(std::size_t dim, Int modulus);

  std::size_t dim() const { return dim_; }
  Int modulus() const { return modulus_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_full_rank() const { return rows_.size() == dim_; }

  // Diagonal entry at each column, 0 where no pivot exists.
  Vec diagonal() const;
  // |Z^dim / L|, or 0 when infinite.
  Int index() const;

  bool contains(const Vec& v) const;
  // Canonical coset representative: each pivot coordinate lies in [0, pivot).
  // This is the lexicographically smallest reduced element of v + L.
  Vec reduce(const Vec& v) const;
  // As reduce, also returning c with v = c*basis + reduce(v) (mod modulus).
  Vec reduce(const Vec& v, Vec& coeffs) const;
  std::optional<Vec> coefficients(const Vec& v) const;

  Lattice operator+(const Lattice& o) const;
  Lattice intersect(const Lattice& o) const;
  bool subset_of(const Lattice& o) const;

  bool operator==(const Lattice& o) const = default;

 private:
  std::size_t dim_ = 0;
  Int modulus_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// {x in Z^cols : a*x in target}.
Lattice preimage(const Matrix& a, const Lattice& target);
// Lattice generated by a*u for u in source.
Lattice image(const Matrix& a, const Lattice& source);
// Coordinates selection: the lattice of (v[begin..begin+len)) for v in l.
Lattice project(const Lattice& l, std::size_t begin, std::size_t len);
// Embed l into Z^total at offset, free (full) on the other listed coordinates
// when free_rest is true, zero (modulus-multiples) otherwise.
Lattice embed(const Lattice& l, std::size_t total, std::size_t offset, bool free_rest);

// Find x with sum x_i * gens_i == target (mod modulus). First solution under
// the generator order; x has one entry per generator.
std::optional<Vec> solve_combination(const std::vector<Vec>& gens, std::size_t dim,
                                     Int modulus, const Vec& target);

struct Smith {
  // One entry per column. With modulus n: divisor of n (n where the entry
  // vanishes). Over Z: nonnegative, 0 for free directions.
  Vec diag;
  // Column transform and its inverse: rowspan(rows) * v == rowspan(diag).
  Matrix v;
  Matrix v_inv;
};

Smith smith_form(const std::vector<Vec>& rows, std::size_t cols, Int modulus);

}  // namespace linrel
