#include "linrel/examples.hpp"

namespace linrel {

ExampleA example_a(Int p, int k) {
  Ring ring = Ring::mod(ipow(p, k));
  FgModule m(ring, 2, {{0, p}});
  Matrix f(2, 2);
  f(1, 0) = 1;
  ModHom fh(m, m, f);
  LinearRelation c = graph(fh);
  return {m, fh, compose(inverse(c), c)};
}

}  // namespace linrel
