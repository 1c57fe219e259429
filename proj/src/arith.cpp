#include "linrel/arith.hpp"

namespace linrel {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::ParentMismatch: return "parent-mismatch";
    case ErrorKind::DomainMismatch: return "domain-mismatch";
    case ErrorKind::NotAMember: return "not-a-member";
    case ErrorKind::NotAMorphism: return "not-a-morphism";
    case ErrorKind::InfiniteModule: return "infinite-module";
    case ErrorKind::UnsupportedRing: return "unsupported-ring";
    case ErrorKind::RingNotLocal: return "ring-not-local";
    case ErrorKind::RingNotSemisimple: return "ring-not-semisimple";
    case ErrorKind::HypothesisViolated: return "hypothesis-violated";
    case ErrorKind::NotInSubcategory: return "not-in-subcategory";
    case ErrorKind::ModuleTooLarge: return "module-too-large";
    case ErrorKind::ProviderViolation: return "provider-violation";
    case ErrorKind::RayMismatch: return "ray-mismatch";
    case ErrorKind::ZeroElement: return "zero-element";
    case ErrorKind::EmptyWitness: return "empty-witness";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Int gcd(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return mul(abs_int(a) / gcd(a, b), abs_int(b));
}

Xgcd xgcd(Int a, Int b) {
  if (a != 0 && b % a == 0) return {abs_int(a), a < 0 ? -1 : 1, 0};
  if (a == 0) return {abs_int(b), 0, b < 0 ? -1 : 1};
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int nr = sub(old_r, mul(q, r));
    old_r = r;
    r = nr;
    Int ns = sub(old_s, mul(q, s));
    old_s = s;
    s = ns;
    Int nt = sub(old_t, mul(q, t));
    old_t = t;
    t = nt;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  require(n >= 1, ErrorKind::InvalidInput, "factorize expects n >= 1");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

Int inverse_mod(Int a, Int n) {
  Xgcd e = xgcd(mod_floor(a, n), n);
  require(e.g == 1, ErrorKind::Internal, "inverse_mod: not a unit");
  return mod_floor(e.x, n);
}

Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::ShapeMismatch, "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::ShapeMismatch, "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i]);
  return r;
}

Vec vec_scale(Int c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(c, a[i]);
  return r;
}

void vec_axpy(Vec& y, Int c, const Vec& x) {
  require(x.size() == y.size(), ErrorKind::ShapeMismatch, "vector length mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = add(y[i], mul(c, x[i]));
}

void vec_mod(Vec& v, Int modulus) {
  if (modulus == 0) return;
  for (Int& x : v) x = mod_floor(x, modulus);
}

bool vec_is_zero(const Vec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_concat(const Vec& a, const Vec& b) {
  Vec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec vec_slice(const Vec& v, std::size_t begin, std::size_t len) {
  require(begin + len <= v.size(), ErrorKind::ShapeMismatch, "slice out of range");
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(begin),
             v.begin() + static_cast<std::ptrdiff_t>(begin + len));
}

}  // namespace linrel
