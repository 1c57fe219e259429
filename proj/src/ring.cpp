#include "linrel/ring.hpp"

namespace linrel {

Ring Ring::mod(Int n) {
  require(n >= 2, ErrorKind::InvalidInput, "Z/n requires n >= 2, got " + std::to_string(n));
  return Ring(n);
}

bool Ring::is_unit(Int a) const {
  if (n_ == 0) return a == 1 || a == -1;
  return gcd(a, n_) == 1;
}

bool Ring::is_local() const { return n_ != 0 && factorize(n_).size() == 1; }

bool Ring::is_semisimple() const {
  if (n_ == 0) return false;
  for (auto [p, e] : factorize(n_))
    if (e > 1) return false;
  return true;
}

Int Ring::jacobson_generator() const {
  if (n_ == 0) return 0;
  Int r = 1;
  for (auto [p, e] : factorize(n_)) r *= p;
  return r;
}

std::pair<Int, int> Ring::prime_power() const {
  require(is_local(), ErrorKind::RingNotLocal, name() + " is not local");
  return factorize(n_).front();
}

std::vector<std::pair<Int, int>> Ring::factorization() const {
  require(n_ != 0, ErrorKind::UnsupportedRing, "factorization of Z");
  return factorize(n_);
}

std::string Ring::name() const { return n_ == 0 ? "Z" : "Z/" + std::to_string(n_); }

}  // namespace linrel
