#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linrel/error.hpp"

namespace linrel {

using Int = std::int64_t;
using Vec = std::vector<Int>;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int abs_int(Int a) { return a < 0 ? sub(0, a) : a; }

// Floor division and the matching non-negative remainder (b > 0).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

struct Xgcd {
  Int g;
  Int x;
  Int y;
};

// g = x*a + y*b = gcd(a, b) >= 0. If a divides b the result is (|a|, sign(a), 0).
Xgcd xgcd(Int a, Int b);

// Prime factorisation as (p, e) pairs in ascending order; n >= 1.
std::vector<std::pair<Int, int>> factorize(Int n);

Int ipow(Int base, int exp);

// Inverse of a modulo n, a coprime to n.
Int inverse_mod(Int a, Int n);

// Vector helpers. A modulus of 0 means exact integer arithmetic.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(Int c, const Vec& a);
void vec_axpy(Vec& y, Int c, const Vec& x);  // y += c*x
void vec_mod(Vec& v, Int modulus);
bool vec_is_zero(const Vec& v);
Vec vec_concat(const Vec& a, const Vec& b);
Vec vec_slice(const Vec& v, std::size_t begin, std::size_t len);

}  // namespace linrel
