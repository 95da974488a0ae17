#include "ffls/primes.hpp"

namespace ffls {

std::vector<FqPoly> monic_polys(const Field* f, int deg) {
  FFLS_CHECK(deg >= 0, "negative degree");
  std::vector<FieldElem> elems = field_elements(f);
  std::vector<FqPoly> out;
  int64_t count = 1;
  for (int i = 0; i < deg; ++i) {
    count *= f->q;
    FFLS_CHECK(count <= (int64_t(1) << 26), "degree too large to enumerate");
  }
  out.reserve(static_cast<size_t>(count));
  std::vector<FieldElem> c(static_cast<size_t>(deg) + 1, FieldElem(f));
  c.back() = FieldElem(f, 1);
  for (int64_t n = 0; n < count; ++n) {
    int64_t t = n;
    // c_0 is the most significant digit of n, matching FqPoly::cmp.
    for (int i = deg - 1; i >= 0; --i) {
      c[static_cast<size_t>(i)] = elems[static_cast<size_t>(t % f->q)];
      t /= f->q;
    }
    out.emplace_back(f, c);
  }
  return out;
}

std::vector<FqPoly> monic_primes(const Field* f, int deg_lo, int deg_hi) {
  // Sieve by trial division: a monic candidate of degree d is prime iff
  // no prime of degree <= d/2 divides it, so build degrees bottom up.
  std::vector<FqPoly> sieve;
  std::vector<FqPoly> out;
  for (int d = 1; d <= deg_hi; ++d) {
    for (const auto& a : monic_polys(f, d)) {
      bool prime = true;
      for (const auto& p : sieve) {
        if (2 * p.degree() > d) break;
        if ((a % p).is_zero()) {
          prime = false;
          break;
        }
      }
      if (prime) {
        sieve.push_back(a);
        if (d >= deg_lo) out.push_back(a);
      }
    }
  }
  return out;
}

void require_prime(const FqPoly& p) {
  if (p.degree() < 1 || !p.is_monic() || !poly_irreducible(p))
    fail_domain("NotPrime", "'" + p.str() + "' is not a monic prime");
}

}  // namespace ffls
