#pragma once

#include <vector>

#include "ttlink/error.hpp"

namespace ttlink {

struct Fraction {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Result of collapsing M(p,q,r,s) down to a surgery parent with both torus
// parameters below r. The coefficients give the truncated expansion
// p/q = a_0 + 1/(a_1 + 1/(... + 1/(a_k + m/n))).
struct ReducedModel {
  long long n = 0;
  long long m = 0;
  long long r = 0;
  long long s_prime = 0;
  std::vector<long long> cf;
  bool swapped = false;  // true when the p slot ends up holding m

  friend bool operator==(const ReducedModel&, const ReducedModel&) = default;
};

// Truncated subtractive Euclid: full quotient jumps while the smaller entry
// is at least r, single subtractions near the stopping window so the first
// pair with both entries below r is caught exactly.
ReducedModel reduce(long long p, long long q, long long r, long long s);

// Evaluates the continued fraction bottom-up in exact integer arithmetic;
// returns p/q in lowest terms.
Fraction reconstruct(const std::vector<long long>& cf, long long m,
                     long long n);

long long mod_floor(long long value, long long modulus);

}  // namespace ttlink
