#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linrel/arith.hpp"

namespace linrel {

// The integers (modulus 0) or Z/n with n >= 2.
class Ring {
 public:
  static Ring integers() { return Ring(0); }
  static Ring mod(Int n);

  Int modulus() const { return n_; }
  bool is_integers() const { return n_ == 0; }
  bool is_finite() const { return n_ != 0; }

  Int reduce(Int a) const { return n_ == 0 ? a : mod_floor(a, n_); }
  bool is_unit(Int a) const;

  // Z/p^k for a prime p.
  bool is_local() const;
  // Squarefree n.
  bool is_semisimple() const;
  // Generator of the Jacobson radical: rad(n) for Z/n, 0 for Z.
  Int jacobson_generator() const;
  // For local rings: (p, k) with n = p^k.
  std::pair<Int, int> prime_power() const;
  std::vector<std::pair<Int, int>> factorization() const;

  std::string name() const;

  bool operator==(const Ring&) const = default;

 private:
  explicit Ring(Int n) : n_(n) {}
  Int n_;
};

}  // namespace linrel
