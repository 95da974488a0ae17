#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffls/gf.hpp"

namespace ffls {

// Dense univariate polynomial over an interned Field, low degree first,
// normalized (no trailing zeros).  One class serves both variables that
// occur in this project: the coefficient ring generator (printed "t") and
// the deformation variable (printed "z"); mixed-variable data is handled
// by composing FqPoly containers, never inside one polynomial.

class FqPoly {
public:
  FqPoly() = default;
  explicit FqPoly(const Field* f) : f_(f) {}
  FqPoly(const Field* f, std::vector<FieldElem> coeffs);

  static FqPoly constant(const Field* f, const FieldElem& c);
  static FqPoly constant(const Field* f, int64_t c);
  static FqPoly gen(const Field* f);  // the variable itself
  static FqPoly monomial(const Field* f, int deg, const FieldElem& c);
  static FqPoly from_int_coeffs(const Field* f, const std::vector<int64_t>& coeffs);

  const Field* field() const { return f_; }
  bool valid() const { return f_ != nullptr; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  FieldElem lead() const;
  FieldElem coeff(int i) const;  // 0 beyond the degree
  void set_coeff(int i, const FieldElem& v);
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FqPoly zero() const { return FqPoly(f_); }
  FqPoly one() const { return constant(f_, 1); }

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly scaled(const FieldElem& c) const;
  FqPoly shifted(int k) const;  // times var^k
  FqPoly monic() const;         // unit-normalized; DivisionByZero on 0

  // Quotient and remainder; divisor must be nonzero.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }
  // Exact quotient; throws Internal if the division leaves a remainder.
  FqPoly div_exact(const FqPoly& d) const;

  FqPoly pow(int64_t n) const;
  FqPoly pow_mod(int64_t n, const FqPoly& m) const;
  // this^{q^k} mod m, computed by k dilation+reduce rounds so the
  // exponent q^k never needs to fit an integer type.
  FqPoly frob_pow_mod(int64_t k, const FqPoly& m) const;

  static FqPoly gcd(const FqPoly& a, const FqPoly& b);  // monic
  // g = gcd(a,b) monic with u*a + v*b = g.
  static void egcd(const FqPoly& a, const FqPoly& b, FqPoly& g, FqPoly& u, FqPoly& v);

  // The q-power twist with q = |base|: exponents i -> i*q^k and, when
  // coeff_frob is set, coefficients c -> c^{q^k}.  coeff_frob == false is
  // the deformation-scalar convention (the twist fixes an adjoined
  // scalar); over the base field itself the two agree.
  FqPoly twist(int64_t k, const Field* base, bool coeff_frob = true) const;

  // Evaluation; x may live in an extension, coefficients are embedded.
  FieldElem eval(const FieldElem& x) const;

  bool operator==(const FqPoly& o) const;
  bool operator!=(const FqPoly& o) const { return !(*this == o); }
  // Degree first, then coefficient tuples low degree first.
  static int cmp(const FqPoly& a, const FqPoly& b);
  bool operator<(const FqPoly& o) const { return cmp(*this, o) < 0; }

  std::string str(const char* var = "t") const;
  static FqPoly parse(const Field* f, const std::string& s);

private:
  void normalize();
  const Field* f_ = nullptr;
  std::vector<FieldElem> c_;
};

// Trial-division irreducibility; intended for the desk-scale degrees that
// occur as primes of the coefficient ring.
bool poly_irreducible(const FqPoly& a);

}  // namespace ffls
