#pragma once

#include <random>
#include <set>
#include <vector>

#include "linrel/arith.hpp"

namespace brute {

using linrel::Int;
using linrel::Vec;

// Additive closure of gens inside (Z/n)^dim.
inline std::set<Vec> span(const std::vector<Vec>& gens, std::size_t dim, Int n) {
  std::set<Vec> seen{Vec(dim, 0)};
  std::vector<Vec> frontier{Vec(dim, 0)};
  while (!frontier.empty()) {
    Vec x = frontier.back();
    frontier.pop_back();
    for (const Vec& g : gens) {
      Vec y(dim);
      for (std::size_t i = 0; i < dim; ++i) y[i] = linrel::mod_floor(x[i] + g[i], n);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return seen;
}

inline std::vector<Vec> all_vectors(std::size_t dim, Int n) {
  std::vector<Vec> out{Vec()};
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (Int a = 0; a < n; ++a) {
        Vec w = v;
        w.push_back(a);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Vec> random_gens(std::mt19937_64& rng, std::size_t count, std::size_t dim, Int n) {
  std::uniform_int_distribution<Int> d(0, n - 1);
  std::vector<Vec> out(count, Vec(dim));
  for (Vec& v : out)
    for (Int& x : v) x = d(rng);
  return out;
}

}  // namespace brute
