#include "ffls/fqpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ffls {
namespace {

// Prime-field products run on int64 scratch: with p <= 251 a full
// desk-scale convolution stays far below the overflow line.
void school_mul_prime(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b,
                      std::vector<int64_t>& out, int64_t p) {
  out.assign(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t ai = a[i].coeff(0);
    if (ai == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b[j].coeff(0);
  }
  for (auto& v : out) v %= p;
}

constexpr size_t kKaratsubaCut = 48;

// Karatsuba on raw residue vectors (prime field only).
std::vector<int64_t> kara(const std::vector<int64_t>& a, const std::vector<int64_t>& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaCut) {
    std::vector<int64_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& v : out) v %= p;
    return out;
  }
  size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  auto lo = [&](const std::vector<int64_t>& v) {
    return std::vector<int64_t>(v.begin(), v.begin() + std::min(h, v.size()));
  };
  auto hi = [&](const std::vector<int64_t>& v) {
    return v.size() > h ? std::vector<int64_t>(v.begin() + h, v.end()) : std::vector<int64_t>{};
  };
  std::vector<int64_t> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
  std::vector<int64_t> z0 = kara(a0, b0, p);
  std::vector<int64_t> z2 = kara(a1, b1, p);
  auto add = [&](std::vector<int64_t> x, const std::vector<int64_t>& y) {
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (size_t i = 0; i < y.size(); ++i) x[i] = (x[i] + y[i]) % p;
    return x;
  };
  std::vector<int64_t> z1 = kara(add(a0, a1), add(b0, b1), p);
  // z1 -= z0 + z2
  for (size_t i = 0; i < z1.size(); ++i) {
    int64_t v = z1[i];
    if (i < z0.size()) v -= z0[i];
    if (i < z2.size()) v -= z2[i];
    z1[i] = ((v % p) + p) % p;
  }
  std::vector<int64_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (size_t i = 0; i < z1.size(); ++i) out[i + h] = (out[i + h] + z1[i]) % p;
  for (size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = (out[i + 2 * h] + z2[i]) % p;
  return out;
}

}  // namespace

FqPoly::FqPoly(const Field* f, std::vector<FieldElem> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) FFLS_CHECK(c.field() == f_, "coefficient field mismatch");
  normalize();
}

void FqPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::constant(const Field* f, const FieldElem& c) {
  FqPoly r(f);
  if (!c.is_zero()) r.c_.push_back(c);
  return r;
}

FqPoly FqPoly::constant(const Field* f, int64_t c) { return constant(f, FieldElem(f, c)); }

FqPoly FqPoly::gen(const Field* f) {
  FqPoly r(f);
  r.c_ = {FieldElem(f), FieldElem(f, 1)};
  return r;
}

FqPoly FqPoly::monomial(const Field* f, int deg, const FieldElem& c) {
  FqPoly r(f);
  if (!c.is_zero()) {
    r.c_.assign(static_cast<size_t>(deg) + 1, FieldElem(f));
    r.c_.back() = c;
  }
  return r;
}

FqPoly FqPoly::from_int_coeffs(const Field* f, const std::vector<int64_t>& coeffs) {
  FqPoly r(f);
  r.c_.reserve(coeffs.size());
  for (auto v : coeffs) r.c_.push_back(FieldElem(f, v));
  r.normalize();
  return r;
}

FieldElem FqPoly::lead() const {
  FFLS_CHECK(!c_.empty(), "lead of zero polynomial");
  return c_.back();
}

FieldElem FqPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem(f_);
  return c_[static_cast<size_t>(i)];
}

void FqPoly::set_coeff(int i, const FieldElem& v) {
  FFLS_CHECK(i >= 0 && v.field() == f_, "bad set_coeff");
  if (i >= static_cast<int>(c_.size())) {
    if (v.is_zero()) return;
    c_.resize(static_cast<size_t>(i) + 1, FieldElem(f_));
  }
  c_[static_cast<size_t>(i)] = v;
  normalize();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in poly +");
  FqPoly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElem(f_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    FieldElem v(f_);
    if (i < c_.size()) v = v + c_[i];
    if (i < o.c_.size()) v = v + o.c_[i];
    r.c_[i] = v;
  }
  r.normalize();
  return r;
}

FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in poly *");
  if (is_zero() || o.is_zero()) return FqPoly(f_);
  FqPoly r(f_);
  if (f_->prime_field()) {
    const int64_t p = f_->p;
    std::vector<int64_t> out;
    if (std::min(c_.size(), o.c_.size()) < kKaratsubaCut) {
      school_mul_prime(c_, o.c_, out, p);
    } else {
      std::vector<int64_t> a(c_.size()), b(o.c_.size());
      for (size_t i = 0; i < c_.size(); ++i) a[i] = c_[i].coeff(0);
      for (size_t i = 0; i < o.c_.size(); ++i) b[i] = o.c_[i].coeff(0);
      out = kara(a, b, p);
    }
    r.c_.reserve(out.size());
    for (auto v : out) r.c_.push_back(FieldElem(f_, v));
  } else {
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElem(f_));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  r.normalize();
  return r;
}

FqPoly FqPoly::scaled(const FieldElem& c) const {
  FFLS_CHECK(c.field() == f_, "field mismatch in scale");
  if (c.is_zero()) return FqPoly(f_);
  FqPoly r = *this;
  for (auto& x : r.c_) x = x * c;
  r.normalize();
  return r;
}

FqPoly FqPoly::shifted(int k) const {
  FFLS_CHECK(k >= 0, "negative shift");
  if (is_zero()) return *this;
  FqPoly r(f_);
  r.c_.assign(c_.size() + static_cast<size_t>(k), FieldElem(f_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) fail_domain("DivisionByZero", "monic normalization of 0");
  if (c_.back().is_one()) return *this;
  return scaled(c_.back().inv());
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
  FFLS_CHECK(f_ == d.f_, "field mismatch in divmod");
  if (d.is_zero()) fail_domain("DivisionByZero", "division by zero polynomial");
  if (degree() < d.degree()) return {FqPoly(f_), *this};
  FieldElem dl_inv = d.lead().inv();
  std::vector<FieldElem> rem = c_;
  int dd = d.degree();
  FqPoly q(f_);
  q.c_.assign(static_cast<size_t>(degree() - dd) + 1, FieldElem(f_));
  for (int i = degree(); i >= dd; --i) {
    FieldElem t = rem[static_cast<size_t>(i)] * dl_inv;
    if (t.is_zero()) continue;
    q.c_[static_cast<size_t>(i - dd)] = t;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] =
          rem[static_cast<size_t>(i - dd + j)] - t * d.c_[static_cast<size_t>(j)];
  }
  q.normalize();
  FqPoly r(f_, std::move(rem));
  return {q, r};
}

FqPoly FqPoly::div_exact(const FqPoly& d) const {
  auto [q, r] = divmod(d);
  FFLS_CHECK(r.is_zero(), "inexact polynomial division");
  return q;
}

FqPoly FqPoly::pow(int64_t n) const {
  FFLS_CHECK(n >= 0, "negative polynomial power");
  FqPoly r = one(), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    if (n >>= 1; n > 0) b = b * b;
  }
  return r;
}

FqPoly FqPoly::pow_mod(int64_t n, const FqPoly& m) const {
  FFLS_CHECK(n >= 0, "negative polynomial power");
  FqPoly r = one(), b = *this % m;
  while (n > 0) {
    if (n & 1) r = (r * b) % m;
    b = (b * b) % m;
    n >>= 1;
  }
  return r;
}

FqPoly FqPoly::frob_pow_mod(int64_t k, const FqPoly& m) const {
  FqPoly r = *this % m;
  for (int64_t s = 0; s < k; ++s) r = r.twist(1, f_) % m;
  return r;
}

FqPoly FqPoly::gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

void FqPoly::egcd(const FqPoly& a, const FqPoly& b, FqPoly& g, FqPoly& u, FqPoly& v) {
  FqPoly r0 = a, r1 = b;
  FqPoly u0 = a.one(), u1 = a.zero(), v0 = a.zero(), v1 = a.one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    FqPoly nu = u0 - q * u1, nv = v0 - q * v1;
    u0 = u1;
    u1 = nu;
    v0 = v1;
    v1 = nv;
  }
  g = r0;
  u = u0;
  v = v0;
  if (!g.is_zero() && !g.lead().is_one()) {
    FieldElem s = g.lead().inv();
    g = g.scaled(s);
    u = u.scaled(s);
    v = v.scaled(s);
  }
}

FqPoly FqPoly::twist(int64_t k, const Field* base, bool coeff_frob) const {
  FFLS_CHECK(k >= 0, "negative twist");
  FFLS_CHECK(base != nullptr && base->p == f_->p, "twist base mismatch");
  if (k == 0 || is_zero()) return *this;
  int64_t stride = 1;
  for (int64_t i = 0; i < k; ++i) {
    stride *= base->q;
    FFLS_CHECK(stride * std::max(degree(), 1) < (int64_t(1) << 26), "twist blowup");
  }
  FqPoly r(f_);
  r.c_.assign(static_cast<size_t>(stride * degree() + 1), FieldElem(f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    FieldElem c = c_[i];
    if (coeff_frob) c = c.pth_power(base->e * (k % f_->e));
    r.c_[static_cast<size_t>(stride * static_cast<int64_t>(i))] = c;
  }
  return r;
}

FieldElem FqPoly::eval(const FieldElem& x) const {
  const Field* tf = x.field();
  FieldElem acc(tf);
  for (int i = degree(); i >= 0; --i) {
    FieldElem c = c_[static_cast<size_t>(i)];
    acc = acc * x + (tf == f_ ? c : embed(c, tf));
  }
  return acc;
}

bool FqPoly::operator==(const FqPoly& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in poly ==");
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

int FqPoly::cmp(const FqPoly& a, const FqPoly& b) {
  FFLS_CHECK(a.f_ == b.f_, "field mismatch in poly cmp");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == b.c_[i]) continue;
    return a.c_[i] < b.c_[i] ? -1 : 1;
  }
  return 0;
}

std::string FqPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const FieldElem& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one();
    if (!unit || i == 0) {
      auto cs = c.coords();
      bool scalar = true;
      for (size_t j = 1; j < cs.size(); ++j)
        if (cs[j] != 0) scalar = false;
      if (scalar) {
        os << cs[0];
      } else {
        os << "[";
        for (size_t j = 0; j < cs.size(); ++j) {
          if (j) os << ",";
          os << cs[j];
        }
        os << "]";
      }
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const Field* f;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void bad(const std::string& why) {
    fail_domain("SchemaError", "cannot parse polynomial '" + s + "': " + why);
  }

  int64_t integer() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      bad("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  FieldElem coefficient() {
    skip();
    if (pos < s.size() && s[pos] == '[') {
      ++pos;
      std::vector<int> coords;
      while (true) {
        coords.push_back(static_cast<int>(((integer() % f->p) + f->p) % f->p));
        skip();
        if (eat(']')) break;
        if (!eat(',')) bad("expected ',' or ']' in coefficient vector");
      }
      if (static_cast<int>(coords.size()) > f->e) bad("coefficient vector too long");
      return elem_from_coords(f, coords);
    }
    return FieldElem(f, integer());
  }

  // A term is a product of factors: numbers, bracket vectors, var^k.
  FqPoly term() {
    FqPoly acc = FqPoly::constant(f, 1);
    bool any = false;
    while (true) {
      skip();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (c == '+' || c == '-') break;
      if (c == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '[') {
        acc = acc * FqPoly::constant(f, coefficient());
        any = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        if (c != 't' && c != 'z' && c != 'x') bad(std::string("unknown variable '") + c + "'");
        ++pos;
        int64_t k = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          k = integer();
          if (k < 0) bad("negative exponent");
        }
        acc = acc * FqPoly::gen(f).pow(k);
        any = true;
        continue;
      }
      bad(std::string("unexpected character '") + c + "'");
    }
    if (!any) bad("empty term");
    return acc;
  }

  FqPoly parse() {
    FqPoly total(f);
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    while (true) {
      FqPoly t = term();
      total = neg ? total - t : total + t;
      skip();
      if (pos >= s.size()) break;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else bad("expected '+' or '-'");
    }
    return total;
  }
};

}  // namespace

FqPoly FqPoly::parse(const Field* f, const std::string& s) {
  PolyParser p{f, s};
  return p.parse();
}

bool poly_irreducible(const FqPoly& a) {
  int d = a.degree();
  if (d < 1) return false;
  if (!a.lead().is_one()) return poly_irreducible(a.monic());
  if (d == 1) return true;
  const FqPoly x = FqPoly::gen(a.field());
  if (!(x.frob_pow_mod(d, a) == x % a)) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool prime = true;
    for (int t = 2; t * t <= l; ++t)
      if (l % t == 0) prime = false;
    if (!prime) continue;
    FqPoly h = x.frob_pow_mod(d / l, a) - x % a;
    if (FqPoly::gcd(h, a).degree() != 0) return false;
  }
  return true;
}

}  // namespace ffls
