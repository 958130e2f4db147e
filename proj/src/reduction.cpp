#include "ttlink/reduction.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace ttlink {

long long mod_floor(long long value, long long modulus) {
  if (modulus <= 0) fail(Errc::InvalidArgument, "modulus must be positive");
  long long rem = value % modulus;
  return rem < 0 ? rem + modulus : rem;
}

ReducedModel reduce(long long p, long long q, long long r, long long s) {
  if (p <= 0 || q <= 0)
    fail(Errc::InvalidArgument, "reduction needs p, q > 0");
  if (r <= 1 || r > p + q)
    fail(Errc::InvalidArgument, "reduction needs 1 < r <= p+q");
  if (r <= std::gcd(p, q))
    fail(Errc::ReducibleToSatellite,
         "r <= gcd(p,q): the link is a satellite, reduce the companion");

  ReducedModel model;
  model.r = r;
  model.s_prime = mod_floor(s, r);

  long long x = p, y = q;  // current ratio x/y
  bool x_in_p_slot = true;
  while (x >= r || y >= r) {
    if (x < y) {
      model.cf.push_back(0);
      std::swap(x, y);
      x_in_p_slot = !x_in_p_slot;
      continue;
    }
    if (y >= r) {
      // Both entries at least r: a full quotient jump cannot overshoot
      // the stopping window.
      long long quotient = x / y;
      long long rem = x % y;
      model.cf.push_back(quotient);
      x = y;
      y = rem;
      x_in_p_slot = !x_in_p_slot;
    } else {
      // y < r <= x: subtract y until x first drops below r.
      long long steps = (x - r) / y + 1;
      model.cf.push_back(steps);
      x -= steps * y;
      break;
    }
  }

  model.m = x;
  model.n = y;
  model.swapped = x_in_p_slot;  // p slot holds the numerator m
  return model;
}

Fraction reconstruct(const std::vector<long long>& cf, long long m,
                     long long n) {
  if (n <= 0 || m <= 0)
    fail(Errc::InvalidArgument, "reconstruction needs m, n > 0");
  long long num = m, den = n;
  for (std::size_t i = cf.size(); i-- > 0;) {
    if (i == cf.size() - 1) {
      num += cf[i] * den;  // innermost: a_k + m/n
    } else {
      // a_i + 1/(num/den)
      std::swap(num, den);
      num += cf[i] * den;
    }
  }
  long long g = std::gcd(num, den);
  return Fraction{num / g, den / g};
}

}  // namespace ttlink
