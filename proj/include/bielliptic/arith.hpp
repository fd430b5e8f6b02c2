#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bielliptic {

// Unbounded integers and rationals; no fixed-width wraparound is possible.
using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition of a library call was violated.
struct PreconditionError : Error {
  using Error::Error;
};

struct InvalidSurfaceError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Z(v) = 0 where a nonzero central charge is required.
struct DegenerateChargeError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct ArithmeticError : Error {
  using Error::Error;
};

// Malformed textual input (vector strings, rationals).
struct ParseError : Error {
  using Error::Error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Floor division; b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw ArithmeticError("division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Remainder in [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) {
  if (b == 0) throw ArithmeticError("division by zero");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Largest x >= 0 with x*x <= n; n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw ArithmeticError("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int floor(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

long to_long(const Int& a);  // throws ArithmeticError outside the long range

std::string to_string(const Int& a);
std::string to_string(const Rational& q);  // "p" or "p/q"

Int parse_int(std::string_view text);
Rational parse_rational(std::string_view text);  // "p" or "p/q", q != 0

}  // namespace bielliptic
