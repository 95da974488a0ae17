#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ffls/errors.hpp"

namespace ffls {

// Finite field F_{p^e} presented as F_p[x]/(modulus), modulus monic
// irreducible of degree e.  Field objects are interned: field_make returns
// a stable const pointer, and two calls with the same (p, e, modulus)
// return the same object, so element compatibility is pointer equality.
//
// Elements are coordinate vectors in the power basis 1, x, ..., x^{e-1},
// stored low degree first.  Capacity is fixed at compile time; desk-scale
// parameters (p <= 251, e <= kMaxDeg, p^e < 2^31) are enforced at creation.

inline constexpr int kMaxDeg = 8;

struct Field {
  int32_t p = 0;
  int32_t e = 0;
  int64_t q = 0;  // p^e
  std::array<uint8_t, kMaxDeg + 1> modulus{};  // length e+1, monic

  // x^{e+i} reduced to the power basis, for i in [0, e-1).
  std::array<std::array<uint8_t, kMaxDeg>, kMaxDeg> red{};
  // Matrix of the p-power map in the power basis, column j = (x^j)^p.
  std::array<std::array<uint8_t, kMaxDeg>, kMaxDeg> frob_p{};

  bool prime_field() const { return e == 1; }
  std::string describe() const;
};

// modulus: coefficients low degree first, length e+1, or empty for "auto"
// (the lexicographically smallest monic irreducible of degree e, with
// coefficient sequences compared low degree first).  Throws
// ReducibleModulus / Unsupported.
const Field* field_make(int p, int e, const std::vector<int>& modulus = {});

class FieldElem {
public:
  FieldElem() = default;
  explicit FieldElem(const Field* f) : f_(f) { c_.fill(0); }
  FieldElem(const Field* f, int64_t scalar);  // image of an integer

  const Field* field() const { return f_; }
  bool valid() const { return f_ != nullptr; }

  int coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  void set_coeff(int i, int v);

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem inv() const;  // DivisionByZero on 0
  FieldElem pow(int64_t n) const;
  // x -> x^{p^k}; the primitive automorphism.  Twists by the q-power of a
  // subfield are pth_power(e_sub * k).
  FieldElem pth_power(int64_t k) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Lexicographic on coordinates, low degree first; used for the
  // deterministic element enumeration order.
  bool operator<(const FieldElem& o) const;

  FieldElem zero() const { return FieldElem(f_); }
  FieldElem one() const { return FieldElem(f_, 1); }

  std::vector<int> coords() const;  // low degree first, length e
  std::string str() const;

private:
  const Field* f_ = nullptr;
  std::array<uint8_t, kMaxDeg> c_{};
};

// All q elements in the deterministic order (coordinatewise counting,
// low-degree coordinate fastest).
std::vector<FieldElem> field_elements(const Field* f);

// Element from coordinate list (length <= e), low degree first.
FieldElem elem_from_coords(const Field* f, const std::vector<int>& coords);

// The class of x, a generator of F over F_p as a ring.
FieldElem field_gen(const Field* f);

// a^{(|base|)^k}, the Frobenius of base applied k times to an element of
// an extension of base.  base must have the same characteristic and
// degree dividing that of a's field.
FieldElem frobenius(const FieldElem& a, int64_t k, const Field* base);

// Ring embedding F -> F' determined by sending the generator of F to the
// root of F's modulus in F' with lexicographically smallest coordinate
// vector.  Requires e(F) | e(F') and equal characteristic; NoEmbedding
// otherwise.  Embeddings are cached, so the convention is applied once
// per field pair.
FieldElem embed(const FieldElem& a, const Field* target);

// Minimal polynomial of a over F_p, coefficients low degree first.
std::vector<int> minimal_polynomial(const FieldElem& a);

}  // namespace ffls
