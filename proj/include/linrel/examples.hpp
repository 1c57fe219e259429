#pragma once

#include "linrel/relation.hpp"

namespace linrel {

// M = Z/p^k z0 (+) Z/p z1 over Z/p^k with f(r z0 + s z1) = r z1, and the
// relation D = {(m, m') : f(m) = f(m')}.
struct ExampleA {
  FgModule module;
  ModHom f;
  LinearRelation d;
};
ExampleA example_a(Int p = 2, int k = 2);

}  // namespace linrel
