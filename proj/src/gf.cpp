#include "ffls/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace ffls {
namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense F_p[x] helpers used only for modulus validation and the "auto"
// search; element arithmetic proper goes through the reduction tables.
using PPoly = std::vector<int>;  // low degree first, normalized

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int>((c[i + j] + int64_t(a[i]) * b[j]) % p);
  // f is monic; reduce in place.
  int df = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(c.size()) - 1; i >= df; --i) {
    int t = c[static_cast<size_t>(i)];
    if (t == 0) continue;
    c[static_cast<size_t>(i)] = 0;
    for (int j = 0; j < df; ++j)
      c[static_cast<size_t>(i - df + j)] =
          static_cast<int>(((c[static_cast<size_t>(i - df + j)] - int64_t(t) * f[static_cast<size_t>(j)]) % p + p) % p);
  }
  c.resize(static_cast<size_t>(df));
  ptrim(c);
  return c;
}

PPoly ppowmod(PPoly base, int64_t n, const PPoly& f, int p) {
  PPoly r{1};
  while (n > 0) {
    if (n & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

int invmod(int a, int p) {
  int64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

PPoly pgcd(PPoly a, PPoly b, int p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b, with b made monic first
    if (b.back() != 1) {
      int inv = invmod(b.back(), p);
      for (auto& c : b) c = static_cast<int>(int64_t(c) * inv % p);
    }
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
      int da = static_cast<int>(a.size()) - 1;
      int t = a.back();
      if (t != 0)
        for (int j = 0; j <= db; ++j)
          a[static_cast<size_t>(da - db + j)] =
              ((a[static_cast<size_t>(da - db + j)] - t * b[static_cast<size_t>(j)]) % p + p) % p;
      a.pop_back();
      ptrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: f of degree e over F_p is irreducible iff x^{p^e} = x
// (mod f) and gcd(x^{p^{e/l}} - x, f) = 1 for every prime l | e.
bool irreducible(const PPoly& f, int p) {
  int e = static_cast<int>(f.size()) - 1;
  if (e < 1) return false;
  if (e == 1) return true;
  auto xpk = [&](int k) {
    PPoly h{0, 1};
    for (int i = 0; i < k; ++i) h = ppowmod(h, p, f, p);
    return h;
  };
  PPoly top = xpk(e);
  PPoly x{0, 1};
  if (top != x) return false;
  for (int l = 2; l <= e; ++l) {
    if (e % l != 0 || !is_prime_int(l)) continue;
    PPoly h = xpk(e / l);
    // h - x
    PPoly diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ptrim(diff);
    PPoly g = pgcd(diff, f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

struct Registry {
  std::mutex mu;
  std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>> fields;
  std::map<std::pair<const Field*, const Field*>, FieldElem> embeddings;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::unique_ptr<Field> build_field(int p, int e, const std::vector<int>& modulus) {
  auto f = std::make_unique<Field>();
  f->p = p;
  f->e = e;
  f->q = 1;
  for (int i = 0; i < e; ++i) f->q *= p;
  for (int i = 0; i <= e; ++i) f->modulus[static_cast<size_t>(i)] = static_cast<uint8_t>(modulus[static_cast<size_t>(i)]);

  // red[i] = x^{e+i} in the power basis.
  std::array<int, 2 * kMaxDeg> cur{};  // x^e to start
  for (int j = 0; j < e; ++j) cur[static_cast<size_t>(j)] = ((-modulus[static_cast<size_t>(j)]) % p + p) % p;
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) f->red[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<uint8_t>(cur[static_cast<size_t>(j)]);
    // multiply by x
    int carry = cur[static_cast<size_t>(e - 1)];
    for (int j = e - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
    cur[0] = 0;
    if (carry != 0)
      for (int j = 0; j < e; ++j)
        cur[static_cast<size_t>(j)] = (cur[static_cast<size_t>(j)] + carry * f->red[0][static_cast<size_t>(j)]) % p;
  }

  // p-power matrix: column j = (x^j)^p.
  PPoly fm(modulus.begin(), modulus.end());
  for (int j = 0; j < e; ++j) {
    PPoly xj(static_cast<size_t>(j + 1), 0);
    xj[static_cast<size_t>(j)] = 1;
    PPoly img = ppowmod(xj, p, fm, p);
    for (int i = 0; i < e; ++i)
      f->frob_p[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          static_cast<uint8_t>(i < static_cast<int>(img.size()) ? img[static_cast<size_t>(i)] : 0);
  }
  return f;
}

}  // namespace

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q << " = F_" << p << "[x]/(";
  bool first = true;
  for (int i = e; i >= 0; --i) {
    int c = modulus[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << (c != 1 ? "*x" : "x");
    if (i > 1) os << "^" << i;
  }
  os << ")";
  return os.str();
}

const Field* field_make(int p, int e, const std::vector<int>& modulus) {
  if (!is_prime_int(p)) fail_domain("NonPrime", "characteristic must be prime, got " + std::to_string(p));
  if (e < 1 || e > kMaxDeg)
    fail_domain("Unsupported", "extension degree must be in [1," + std::to_string(kMaxDeg) + "]");
  if (p > 251) fail_domain("Unsupported", "characteristic above 251");
  int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > (int64_t(1) << 31)) fail_domain("Unsupported", "field size above 2^31");
  }

  std::vector<int> mod = modulus;
  if (!mod.empty()) {
    if (static_cast<int>(mod.size()) != e + 1 || mod.back() != 1)
      fail_domain("ReducibleModulus", "modulus must be monic of degree e");
    for (auto& c : mod) {
      c %= p;
      if (c < 0) c += p;
    }
    if (!irreducible(PPoly(mod.begin(), mod.end()), p))
      fail_domain("ReducibleModulus", "modulus is not irreducible over F_" + std::to_string(p));
  } else {
    // Lexicographically smallest monic irreducible, coefficient tuples
    // (c_0, ..., c_{e-1}) compared left to right.
    mod.assign(static_cast<size_t>(e + 1), 0);
    mod[static_cast<size_t>(e)] = 1;
    bool found = false;
    for (int64_t n = 0; n < q && !found; ++n) {
      int64_t t = n;
      for (int i = e - 1; i >= 0; --i) {
        mod[static_cast<size_t>(i)] = static_cast<int>(t % p);
        t /= p;
      }
      if (irreducible(PPoly(mod.begin(), mod.end()), p)) found = true;
    }
    FFLS_CHECK(found, "no irreducible modulus found");
  }

  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_tuple(p, e, mod);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return it->second.get();
  auto f = build_field(p, e, mod);
  const Field* ptr = f.get();
  reg.fields.emplace(std::move(key), std::move(f));
  return ptr;
}

FieldElem::FieldElem(const Field* f, int64_t scalar) : f_(f) {
  c_.fill(0);
  int64_t v = scalar % f->p;
  if (v < 0) v += f->p;
  c_[0] = static_cast<uint8_t>(v);
}

void FieldElem::set_coeff(int i, int v) {
  FFLS_CHECK(f_ != nullptr && i >= 0 && i < f_->e, "coefficient index out of range");
  int m = v % f_->p;
  if (m < 0) m += f_->p;
  c_[static_cast<size_t>(i)] = static_cast<uint8_t>(m);
}

bool FieldElem::is_zero() const {
  for (int i = 0; i < f_->e; ++i)
    if (c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < f_->e; ++i)
    if (c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in +");
  FieldElem r(f_);
  for (int i = 0; i < f_->e; ++i)
    r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>((c_[static_cast<size_t>(i)] + o.c_[static_cast<size_t>(i)]) % f_->p);
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in -");
  FieldElem r(f_);
  for (int i = 0; i < f_->e; ++i)
    r.c_[static_cast<size_t>(i)] =
        static_cast<uint8_t>((c_[static_cast<size_t>(i)] - o.c_[static_cast<size_t>(i)] + f_->p) % f_->p);
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(f_);
  for (int i = 0; i < f_->e; ++i)
    r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>((f_->p - c_[static_cast<size_t>(i)]) % f_->p);
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in *");
  const int p = f_->p, e = f_->e;
  FieldElem r(f_);
  if (e == 1) {
    r.c_[0] = static_cast<uint8_t>(int32_t(c_[0]) * o.c_[0] % p);
    return r;
  }
  std::array<int32_t, 2 * kMaxDeg> t{};
  for (int i = 0; i < e; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < e; ++j)
      t[static_cast<size_t>(i + j)] += int32_t(c_[static_cast<size_t>(i)]) * o.c_[static_cast<size_t>(j)];
  }
  for (int i = 0; i < 2 * e - 1; ++i) t[static_cast<size_t>(i)] %= p;
  for (int i = e; i < 2 * e - 1; ++i) {
    int32_t v = t[static_cast<size_t>(i)];
    if (v == 0) continue;
    const auto& row = f_->red[static_cast<size_t>(i - e)];
    for (int j = 0; j < e; ++j) t[static_cast<size_t>(j)] = (t[static_cast<size_t>(j)] + v * row[static_cast<size_t>(j)]) % p;
  }
  for (int j = 0; j < e; ++j) r.c_[static_cast<size_t>(j)] = static_cast<uint8_t>(t[static_cast<size_t>(j)]);
  return r;
}

FieldElem FieldElem::pow(int64_t n) const {
  if (is_zero()) {
    if (n < 0) fail_domain("DivisionByZero", "0 to a negative power");
    return n == 0 ? one() : zero();
  }
  int64_t m = n % (f_->q - 1);
  if (m < 0) m += f_->q - 1;
  FieldElem r = one(), b = *this;
  while (m > 0) {
    if (m & 1) r = r * b;
    b = b * b;
    m >>= 1;
  }
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail_domain("DivisionByZero", "inverse of 0");
  return pow(f_->q - 2);
}

FieldElem FieldElem::pth_power(int64_t k) const {
  int64_t m = k % f_->e;
  if (m < 0) m += f_->e;
  FieldElem r = *this;
  for (int64_t s = 0; s < m; ++s) {
    FieldElem t(f_);
    for (int j = 0; j < f_->e; ++j) {
      if (r.c_[static_cast<size_t>(j)] == 0) continue;
      const auto& col = f_->frob_p[static_cast<size_t>(j)];
      for (int i = 0; i < f_->e; ++i)
        t.c_[static_cast<size_t>(i)] =
            static_cast<uint8_t>((t.c_[static_cast<size_t>(i)] + r.c_[static_cast<size_t>(j)] * col[static_cast<size_t>(i)]) % f_->p);
    }
    r = t;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in ==");
  for (int i = 0; i < f_->e; ++i)
    if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
  return true;
}

bool FieldElem::operator<(const FieldElem& o) const {
  FFLS_CHECK(f_ == o.f_, "field mismatch in <");
  for (int i = 0; i < f_->e; ++i) {
    if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)])
      return c_[static_cast<size_t>(i)] < o.c_[static_cast<size_t>(i)];
  }
  return false;
}

std::vector<int> FieldElem::coords() const {
  std::vector<int> v(static_cast<size_t>(f_->e));
  for (int i = 0; i < f_->e; ++i) v[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return v;
}

std::string FieldElem::str() const {
  if (f_->e == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < f_->e; ++i) {
    if (i) os << ",";
    os << int(c_[static_cast<size_t>(i)]);
  }
  os << "]";
  return os.str();
}

std::vector<FieldElem> field_elements(const Field* f) {
  std::vector<FieldElem> out;
  out.reserve(static_cast<size_t>(f->q));
  std::vector<int> c(static_cast<size_t>(f->e), 0);
  for (int64_t n = 0; n < f->q; ++n) {
    int64_t t = n;
    // c_0 is the most significant digit so the order agrees with operator<
    for (int i = f->e - 1; i >= 0; --i) {
      c[static_cast<size_t>(i)] = static_cast<int>(t % f->p);
      t /= f->p;
    }
    out.push_back(elem_from_coords(f, c));
  }
  return out;
}

FieldElem elem_from_coords(const Field* f, const std::vector<int>& coords) {
  FFLS_CHECK(static_cast<int>(coords.size()) <= f->e, "too many coordinates");
  FieldElem r(f);
  for (size_t i = 0; i < coords.size(); ++i) r.set_coeff(static_cast<int>(i), coords[i]);
  return r;
}

FieldElem frobenius(const FieldElem& a, int64_t k, const Field* base) {
  const Field* f = a.field();
  if (base->p != f->p || f->e % base->e != 0)
    fail_domain("NoEmbedding", "frobenius base " + base->describe() +
                                   " is not a subfield of " + f->describe());
  // a^{p^{e_base * k}}; pth_power reduces the iteration count mod e.
  return a.pth_power(base->e * (k % f->e));
}

FieldElem field_gen(const Field* f) {
  FieldElem r(f);
  if (f->e == 1) {
    r.set_coeff(0, 1);
  } else {
    r.set_coeff(1, 1);
  }
  return r;
}

std::vector<int> minimal_polynomial(const FieldElem& a) {
  const Field* f = a.field();
  // Conjugates under the p-power map.
  std::vector<FieldElem> conj{a};
  FieldElem c = a.pth_power(1);
  while (!(c == a)) {
    conj.push_back(c);
    c = c.pth_power(1);
  }
  // Expand prod (X - conj_i) over F; coefficients must land in F_p.
  std::vector<FieldElem> poly{a.one()};
  for (const auto& r : conj) {
    std::vector<FieldElem> next(poly.size() + 1, a.zero());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * r;
    }
    poly = next;
  }
  std::vector<int> out;
  out.reserve(poly.size());
  for (const auto& e : poly) {
    auto cs = e.coords();
    for (size_t i = 1; i < cs.size(); ++i)
      FFLS_CHECK(cs[i] == 0, "minimal polynomial coefficient not in the prime field");
    out.push_back(cs[0]);
  }
  return out;
}

FieldElem embed(const FieldElem& a, const Field* target) {
  const Field* src = a.field();
  if (src == target) return a;
  if (src->p != target->p || target->e % src->e != 0)
    fail_domain("NoEmbedding",
                "no embedding " + src->describe() + " -> " + target->describe());

  FieldElem gen_img(target);
  {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(src, target);
    auto it = reg.embeddings.find(key);
    if (it != reg.embeddings.end()) {
      gen_img = it->second;
    } else {
      // Root of src's modulus in target, first in lexicographic element
      // order.  Desk scale: exhaustive scan.
      FFLS_CHECK(target->q <= (int64_t(1) << 22), "target field too large for root scan");
      bool found = false;
      for (const auto& x : field_elements(target)) {
        FieldElem acc(target);
        // Horner, high coefficient first; modulus coefficients are in F_p.
        for (int i = src->e; i >= 0; --i)
          acc = acc * x + FieldElem(target, src->modulus[static_cast<size_t>(i)]);
        if (acc.is_zero()) {
          gen_img = x;
          found = true;
          break;
        }
      }
      FFLS_CHECK(found, "modulus has no root in a compatible extension");
      reg.embeddings.emplace(key, gen_img);
    }
  }

  // a = sum coords_i gen^i maps to sum coords_i gen_img^i.
  FieldElem r(target);
  FieldElem pw = FieldElem(target, 1);
  for (int i = 0; i < src->e; ++i) {
    r = r + pw * FieldElem(target, a.coeff(i));
    pw = pw * gen_img;
  }
  return r;
}

}  // namespace ffls
