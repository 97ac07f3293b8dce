#include "mosaics/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace mosaics {

namespace {

// Little-endian polynomial arithmetic over Z_p on coefficient vectors.
// Vectors are kept trimmed (no trailing zeros); the zero polynomial is {}.

void trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a modulo monic b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  trim(a);
  while (a.size() >= b.size()) {
    int lead = a.back();
    size_t shift = a.size() - b.size();
    if (lead != 0) {
      for (size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const std::vector<int>& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    // Enumerate monic divisor candidates of degree d by their low d
    // coefficients read as a base-p integer.
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

struct FieldSpec::Data {
  int p = 0;
  int n = 0;
  int q = 0;
  std::vector<int> modulus;  // length n+1, monic
  std::vector<long long> pw;  // pw[i] = p^i, length n+1
  int generator = 0;
  std::vector<int> exp_table;  // size q-1
  std::vector<int> log_table;  // size q, log_table[0] = -1
};

namespace {

std::vector<int> index_to_coeffs(const FieldSpec::Data& d, int idx) {
  std::vector<int> c(d.n, 0);
  for (int i = 0; i < d.n; ++i) {
    c[i] = idx % d.p;
    idx /= d.p;
  }
  return c;
}

int coeffs_to_index(const FieldSpec::Data& d, const std::vector<int>& c) {
  long long idx = 0;
  for (int i = d.n - 1; i >= 0; --i) {
    int ci = i < static_cast<int>(c.size()) ? c[i] : 0;
    idx = idx * d.p + ci;
  }
  return static_cast<int>(idx);
}

// Product of field elements by direct polynomial arithmetic; used only while
// building the log/exp tables.
int slow_mul(const FieldSpec::Data& d, int a, int b) {
  std::vector<int> pa = index_to_coeffs(d, a);
  std::vector<int> pb = index_to_coeffs(d, b);
  trim(pa);
  trim(pb);
  std::vector<int> r = poly_mod(poly_mul(pa, pb, d.p), d.modulus, d.p);
  return coeffs_to_index(d, r);
}

int element_order(const FieldSpec::Data& d, int a) {
  int order = 1;
  int cur = a;
  while (cur != 1) {
    cur = slow_mul(d, cur, a);
    ++order;
    if (order > d.q) throw Error("order computation failed");
  }
  return order;
}

std::shared_ptr<const FieldSpec::Data> build_field(int p, int n,
                                                   std::vector<int> modulus) {
  if (!is_prime(p)) throw NonPrimeCharacteristic(p);
  if (n < 1) throw Error("extension degree must be at least 1");

  auto d = std::make_shared<FieldSpec::Data>();
  d->p = p;
  d->n = n;
  d->pw.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    d->pw[i] = d->pw[i - 1] * p;
    if (d->pw[i] > (1LL << 30))
      throw Error("field order p^n too large for this implementation");
  }
  d->q = static_cast<int>(d->pw[n]);

  if (modulus.empty()) {
    // Lexicographically smallest monic irreducible of degree n, ordering the
    // candidates by their low-degree coefficients read as a base-p integer.
    for (long long code = 0;; ++code) {
      if (code >= d->pw[n])
        throw Error("no irreducible modulus found");  // cannot happen
      std::vector<int> f(n + 1, 0);
      long long c = code;
      for (int i = 0; i < n; ++i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      f[n] = 1;
      if (poly_irreducible(f, p)) {
        modulus = std::move(f);
        break;
      }
    }
  } else {
    if (static_cast<int>(modulus.size()) != n + 1)
      throw ReducibleModulus("modulus must have degree exactly n");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus[n] != 1) throw ReducibleModulus("modulus must be monic");
    if (!poly_irreducible(modulus, p))
      throw ReducibleModulus("modulus is reducible over GF(" +
                             std::to_string(p) + ")");
  }
  d->modulus = std::move(modulus);

  // Find the primitive element of smallest index and build log/exp tables.
  if (d->q == 2) {
    d->generator = 1;
  } else {
    d->generator = 0;
    for (int cand = 2; cand < d->q; ++cand) {
      if (element_order(*d, cand) == d->q - 1) {
        d->generator = cand;
        break;
      }
    }
    if (d->generator == 0) throw Error("no generator found");  // cannot happen
  }

  d->exp_table.assign(d->q - 1, 0);
  d->log_table.assign(d->q, -1);
  int cur = 1;
  for (int i = 0; i < d->q - 1; ++i) {
    d->exp_table[i] = cur;
    d->log_table[cur] = i;
    cur = slow_mul(*d, cur, d->generator);
  }
  if (cur != 1) throw Error("generator order mismatch");  // cannot happen
  return d;
}

}  // namespace

FieldSpec::FieldSpec(int p, int n) : d_(build_field(p, n, {})) {}

FieldSpec::FieldSpec(int p, int n, std::vector<int> modulus)
    : d_(build_field(p, n, std::move(modulus))) {}

int FieldSpec::p() const { return d_->p; }
int FieldSpec::n() const { return d_->n; }
int FieldSpec::q() const { return d_->q; }
const std::vector<int>& FieldSpec::modulus() const { return d_->modulus; }

FieldElement FieldSpec::element(int index) const {
  if (index < 0 || index >= d_->q)
    throw Error("element index " + std::to_string(index) +
                " out of range for " + to_string());
  return {*this, index};
}

FieldElement FieldSpec::zero() const { return {*this, 0}; }
FieldElement FieldSpec::one() const { return {*this, 1}; }
FieldElement FieldSpec::generator() const { return {*this, d_->generator}; }

FieldElement FieldSpec::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > d_->n)
    throw Error("coefficient vector longer than extension degree");
  std::vector<int> c(coeffs.begin(), coeffs.end());
  for (int& x : c) x = ((x % d_->p) + d_->p) % d_->p;
  return {*this, coeffs_to_index(*d_, c)};
}

std::vector<int> FieldSpec::coeffs(int index) const {
  if (index < 0 || index >= d_->q)
    throw Error("element index out of range");
  return index_to_coeffs(*d_, index);
}

int FieldSpec::add(int a, int b) const {
  const Data& d = *d_;
  if (d.n == 1) {
    int s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  if (d.p == 2) return a ^ b;
  int r = 0;
  for (int i = d.n - 1; i >= 0; --i) {
    long long pi = d.pw[i];
    int da = static_cast<int>(a / pi) % d.p;
    int db = static_cast<int>(b / pi) % d.p;
    int s = da + db;
    if (s >= d.p) s -= d.p;
    r = r * d.p + s;
  }
  return r;
}

int FieldSpec::neg(int a) const {
  const Data& d = *d_;
  if (d.p == 2) return a;
  if (d.n == 1) return a == 0 ? 0 : d.p - a;
  int r = 0;
  for (int i = d.n - 1; i >= 0; --i) {
    int da = static_cast<int>(a / d.pw[i]) % d.p;
    r = r * d.p + (da == 0 ? 0 : d.p - da);
  }
  return r;
}

int FieldSpec::sub(int a, int b) const { return add(a, neg(b)); }

int FieldSpec::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  const Data& d = *d_;
  int s = d.log_table[a] + d.log_table[b];
  int m = d.q - 1;
  if (s >= m) s -= m;
  return d.exp_table[s];
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw ZeroInverse();
  const Data& d = *d_;
  int l = d.log_table[a];
  return d.exp_table[l == 0 ? 0 : d.q - 1 - l];
}

int FieldSpec::pow(int a, long long e) const {
  const Data& d = *d_;
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw ZeroInverse();
    return 0;
  }
  long long m = d.q - 1;
  long long r = ((d.log_table[a] * (e % m)) % m + m) % m;
  return d.exp_table[r];
}

int FieldSpec::frobenius(int a) const { return pow(a, d_->p); }

const std::vector<int>& FieldSpec::exp_table() const { return d_->exp_table; }
const std::vector<int>& FieldSpec::log_table() const { return d_->log_table; }

std::vector<std::vector<int>> FieldSpec::addition_table() const {
  int q = d_->q;
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[a][b] = add(a, b);
  return t;
}

std::vector<std::vector<int>> FieldSpec::multiplication_table() const {
  int q = d_->q;
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<int> FieldSpec::quadratic_residues() const {
  if (d_->p == 2) throw EvenCharacteristic();
  std::vector<bool> seen(d_->q, false);
  for (int a = 1; a < d_->q; ++a) seen[mul(a, a)] = true;
  std::vector<int> out;
  for (int a = 1; a < d_->q; ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

std::string FieldSpec::to_string() const {
  const Data& d = *d_;
  std::string s = "GF(" + std::to_string(d.p);
  if (d.n > 1) s += "^" + std::to_string(d.n);
  s += "; ";
  bool first = true;
  for (int i = d.n; i >= 0; --i) {
    int c = d.modulus[i];
    if (c == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  s += ")";
  return s;
}

bool FieldSpec::same_field(const FieldSpec& o) const {
  return d_ == o.d_ ||
         (d_->p == o.d_->p && d_->n == o.d_->n && d_->modulus == o.d_->modulus);
}

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long f = 2; f * f <= x; ++f)
    if (x % f == 0) return false;
  return true;
}

void factor_prime_power(long long q, int& p, int& n) {
  if (q < 2) throw NotPrimePower(q);
  long long base = 0;
  for (long long f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      base = f;
      break;
    }
  }
  if (base == 0) base = q;  // q itself is prime
  long long rest = q;
  int exp = 0;
  while (rest % base == 0) {
    rest /= base;
    ++exp;
  }
  if (rest != 1) throw NotPrimePower(q);
  p = static_cast<int>(base);
  n = exp;
}

}  // namespace mosaics
