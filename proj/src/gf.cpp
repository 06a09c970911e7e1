#include "eaqmds/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eaqmds/zmod.hpp"

namespace eaqmds::gf {

namespace {

// ---- polynomial helpers over GF(p), coefficients low degree first ----

using Poly = std::vector<i64>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b mod f, f monic of degree e.
Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
  if (a.empty() || b.empty()) return {};
  const size_t e = f.size() - 1;
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  for (size_t i = c.size(); i-- > e;) {
    const i64 t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < e; ++j)
      c[i - e + j] = mod_norm(c[i - e + j] - t * f[j], p);
  }
  c.resize(e);
  ptrim(c);
  return c;
}

// x^k mod f.
Poly pxpowmod(i64 k, const Poly& f, i64 p) {
  Poly result = {1};
  Poly base = {0, 1};
  if (f.size() == 2) base = pmulmod(base, {1}, f, p);  // degree-1 modulus: reduce x
  while (k > 0) {
    if (k & 1) result = pmulmod(result, base, f, p);
    base = pmulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

Poly pmod(Poly a, const Poly& b, i64 p) {
  ptrim(a);
  const i64 lead_inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const i64 t = a.back() * lead_inv % p;
    if (t != 0) {
      const size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = mod_norm(a[off + j] - t * b[j], p);
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

Poly pgcd(Poly a, Poly b, i64 p) {
  ptrim(a), ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---- linear algebra over GF(p) for the tower construction ----

struct PMat {
  i64 rows = 0, cols = 0;
  std::vector<i64> a;
  PMat(i64 r, i64 c) : rows(r), cols(c), a(static_cast<size_t>(r * c), 0) {}
  i64& at(i64 r, i64 c) { return a[static_cast<size_t>(r * cols + c)]; }
  i64 at(i64 r, i64 c) const { return a[static_cast<size_t>(r * cols + c)]; }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<i64> prref(PMat& m, i64 p) {
  std::vector<i64> pivots;
  i64 row = 0;
  for (i64 col = 0; col < m.cols && row < m.rows; ++col) {
    i64 sel = -1;
    for (i64 r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    for (i64 c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const i64 inv = mod_pow(m.at(row, col), p - 2, p);
    for (i64 c = 0; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv % p;
    for (i64 r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const i64 t = m.at(r, col);
      for (i64 c = 0; c < m.cols; ++c)
        m.at(r, c) = mod_norm(m.at(r, c) - t * m.at(row, c), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Kernel basis of m (as column vectors), deterministic: one vector per free
// column, free columns in ascending order.
std::vector<std::vector<i64>> pkernel(PMat m, i64 p) {
  const std::vector<i64> pivots = prref(m, p);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (i64 c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<i64>> basis;
  for (i64 free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<i64> v(static_cast<size_t>(m.cols), 0);
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] =
          mod_norm(-m.at(static_cast<i64>(r), free_col), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix; throws on singular input.
PMat pinverse(const PMat& m, i64 p) {
  const i64 n = m.rows;
  PMat aug(n, 2 * n);
  for (i64 r = 0; r < n; ++r) {
    for (i64 c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const std::vector<i64> pivots = prref(aug, p);
  if (static_cast<i64>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::logic_error("matrix inversion: singular input");
  PMat inv(n, n);
  for (i64 r = 0; r < n; ++r)
    for (i64 c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

}  // namespace

PrimePower factor_prime_power(i64 q) {
  if (q < 2) throw NotPrimePowerError("not a prime power: " + std::to_string(q));
  i64 p = 0;
  for (i64 d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;  // q itself is prime
  i64 rest = q, e = 0;
  while (rest % p == 0) { rest /= p; ++e; }
  if (rest != 1)
    throw NotPrimePowerError("not a prime power: " + std::to_string(q));
  return {p, e, q};
}

i64 checked_pow(i64 p, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    if (r > (i64{1} << 62) / p)
      throw std::overflow_error("field order exceeds 62 bits");
    r *= p;
  }
  return r;
}

bool poly_irreducible(const std::vector<i64>& f, i64 p) {
  const i64 e = static_cast<i64>(f.size()) - 1;
  if (e < 1 || f.back() != 1) throw std::invalid_argument("need monic f");
  if (e == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // x^(p^e) == x mod f, and gcd(f, x^(p^(e/r)) - x) = 1 for prime r | e.
  Poly xq = pxpowmod(checked_pow(p, e), f, p);
  Poly x = {0, 1};
  if (xq != x) return false;
  for (i64 r : prime_factors(e)) {
    Poly xs = pxpowmod(checked_pow(p, e / r), f, p);
    // xs - x
    Poly diff = xs;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_norm(diff[1] - 1, p);
    ptrim(diff);
    Poly g = pgcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field::Field(i64 p, i64 e, std::vector<i64> modulus)
    : p_(p), e_(e), order_(checked_pow(p, e)), modulus_(std::move(modulus)) {}

Field Field::make(i64 p, i64 e) {
  if (e < 1) throw std::invalid_argument("field degree must be positive");
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  checked_pow(p, e);
  if (e == 1) return Field(p, 1, {0, 1});
  // Scan monic candidates in lexicographic order, high-degree coefficient
  // first: candidate #idx has coefficient of x^(e-1-j) equal to the j-th
  // most significant base-p digit of idx.
  const i64 total = checked_pow(p, e);
  for (i64 idx = 0; idx < total; ++idx) {
    std::vector<i64> f(static_cast<size_t>(e) + 1, 0);
    f[static_cast<size_t>(e)] = 1;
    i64 v = idx;
    for (i64 d = 0; d < e; ++d) {  // low digit of idx -> constant coefficient
      f[static_cast<size_t>(d)] = v % p;
      v /= p;
    }
    if (poly_irreducible(f, p)) return Field(p, e, std::move(f));
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Elt Field::from_int(i64 c) const {
  Elt a = zero();
  a[0] = mod_norm(c, p_);
  return a;
}

Field::Elt Field::gen() const {
  Elt a = zero();
  if (e_ == 1) {
    a[0] = mod_norm(-modulus_[0], p_);  // x == -f(0) in a degree-1 quotient
  } else {
    a[1] = 1;
  }
  return a;
}

bool Field::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](i64 c) { return c == 0; });
}

Field::Elt Field::add(const Elt& a, const Elt& b) const {
  Elt c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_norm(c[i] + b[i], p_);
  return c;
}

Field::Elt Field::sub(const Elt& a, const Elt& b) const {
  Elt c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_norm(c[i] - b[i], p_);
  return c;
}

Field::Elt Field::neg(const Elt& a) const {
  Elt c(a);
  for (i64& v : c) v = mod_norm(-v, p_);
  return c;
}

Field::Elt Field::mul(const Elt& a, const Elt& b) const {
  const size_t e = static_cast<size_t>(e_);
  std::vector<i64> c(2 * e - 1, 0);
  for (size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < e; ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  }
  for (size_t i = c.size(); i-- > e;) {
    const i64 t = c[i];
    if (t == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < e; ++j)
      c[i - e + j] = mod_norm(c[i - e + j] - t * modulus_[j], p_);
  }
  c.resize(e);
  return c;
}

Field::Elt Field::pow(const Elt& a, i64 k) const {
  if (k < 0) return pow(inv(a), -k);
  Elt result = one();
  Elt base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Field::Elt Field::inv(const Elt& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in GF(p^e)");
  return pow(a, order_ - 2);
}

Field::Elt Field::conj(const Elt& a) const {
  if (e_ % 2 != 0)
    throw std::domain_error("conjugation needs a field of even degree");
  return pow(a, checked_pow(p_, e_ / 2));
}

i64 Field::pack(const Elt& a) const {
  i64 idx = 0;
  for (size_t i = a.size(); i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

Field::Elt Field::unpack(i64 idx) const {
  Elt a = zero();
  for (i64 i = 0; i < e_; ++i) {
    a[static_cast<size_t>(i)] = idx % p_;
    idx /= p_;
  }
  return a;
}

std::string Field::to_string(const Elt& a) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

i64 Field::element_order(const Elt& a) const {
  if (is_zero(a)) throw std::domain_error("order of zero is undefined");
  i64 d = order_ - 1;
  for (i64 r : prime_factors(order_ - 1))
    while (d % r == 0 && eq(pow(a, d / r), one())) d /= r;
  return d;
}

Field::Elt TowerMap::embed(const Field::Elt& a) const {
  Field::Elt out = top.zero();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Field::Elt term = top.mul(top.from_int(a[i]), rho_pow[i]);
    out = top.add(out, term);
  }
  return out;
}

std::pair<Field::Elt, Field::Elt> TowerMap::project(const Field::Elt& a) const {
  const i64 d = top.degree();
  const i64 p = top.p();
  std::vector<i64> w(static_cast<size_t>(d), 0);
  for (i64 r = 0; r < d; ++r) {
    i64 acc = 0;
    for (i64 c = 0; c < d; ++c)
      acc = (acc + proj_matrix[static_cast<size_t>(r * d + c)] *
                       a[static_cast<size_t>(c)]) %
            p;
    w[static_cast<size_t>(r)] = acc;
  }
  const i64 h = d / 2;
  Field::Elt u(w.begin(), w.begin() + h);
  Field::Elt v(w.begin() + h, w.end());
  return {std::move(u), std::move(v)};
}

bool TowerMap::in_base(const Field::Elt& a) const {
  return base.is_zero(project(a).second);
}

TowerMap make_tower(i64 q) {
  const PrimePower pp = factor_prime_power(q);
  const i64 p = pp.p;
  const i64 eb = 2 * pp.e;  // degree of GF(q^2) over GF(p)
  const i64 et = 2 * eb;    // degree of GF(q^4) over GF(p)
  TowerMap t{q, pp, Field::make(p, eb), Field::make(p, et), {}, {}};

  // Subfield of order q^2 inside the top field: kernel of Frob^eb - id,
  // where Frob^eb maps z to z^(p^eb) = z^(q^2).
  const i64 q2 = checked_pow(p, eb);
  const Field::Elt xq2 = t.top.pow(t.top.gen(), q2);  // x^(q^2)
  PMat frob(et, et);
  Field::Elt power = t.top.one();  // (x^j)^(q^2) = (x^(q^2))^j
  for (i64 j = 0; j < et; ++j) {
    for (i64 r = 0; r < et; ++r) {
      i64 v = power[static_cast<size_t>(r)];
      if (r == j) v = mod_norm(v - 1, p);
      frob.at(r, j) = v;
    }
    power = t.top.mul(power, xq2);
  }
  std::vector<std::vector<i64>> kernel = pkernel(frob, p);
  if (static_cast<i64>(kernel.size()) != eb)
    throw std::logic_error("subfield of order q^2 has wrong dimension");

  // rho: the smallest root (in canonical encoding) of the base modulus among
  // the q^2 subfield elements.  Evaluate by Horner; coefficients are scalars.
  const std::vector<i64>& f = t.base.modulus();
  Field::Elt rho = t.top.zero();
  bool found = false;
  i64 best = 0;
  for (i64 idx = 0; idx < q2; ++idx) {
    Field::Elt cand = t.top.zero();
    i64 v = idx;
    for (i64 j = 0; j < eb; ++j) {
      const i64 lam = v % p;
      v /= p;
      if (lam == 0) continue;
      for (i64 r = 0; r < et; ++r)
        cand[static_cast<size_t>(r)] =
            (cand[static_cast<size_t>(r)] +
             lam * kernel[static_cast<size_t>(j)][static_cast<size_t>(r)]) %
            p;
    }
    Field::Elt val = t.top.from_int(f.back());
    for (size_t j = f.size() - 1; j-- > 0;) {
      val = t.top.mul(val, cand);
      val = t.top.add(val, t.top.from_int(f[j]));
    }
    if (t.top.is_zero(val)) {
      const i64 packed = t.top.pack(cand);
      if (!found || packed < best) {
        rho = cand;
        best = packed;
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("base modulus has no root in the tower");

  t.rho_pow.resize(static_cast<size_t>(eb));
  t.rho_pow[0] = t.top.one();
  for (i64 i = 1; i < eb; ++i) t.rho_pow[static_cast<size_t>(i)] = t.top.mul(t.rho_pow[static_cast<size_t>(i - 1)], rho);

  // Change of basis: columns are rho^i and x*rho^i as GF(p) coordinate
  // vectors; the inverse turns top-field coordinates into tower coordinates.
  PMat basis(et, et);
  const Field::Elt x = t.top.gen();
  for (i64 i = 0; i < eb; ++i) {
    const Field::Elt& a = t.rho_pow[static_cast<size_t>(i)];
    const Field::Elt b = t.top.mul(x, a);
    for (i64 r = 0; r < et; ++r) {
      basis.at(r, i) = a[static_cast<size_t>(r)];
      basis.at(r, eb + i) = b[static_cast<size_t>(r)];
    }
  }
  PMat inv = pinverse(basis, p);
  t.proj_matrix.assign(inv.a.begin(), inv.a.end());
  return t;
}

Field::Elt nth_root_of_unity(i64 n, const TowerMap& tower) {
  if (n <= 0) throw std::invalid_argument("order must be positive");
  const Field& F = tower.top;
  const i64 N = F.order() - 1;
  if (N % n != 0)
    throw std::domain_error("requested order does not divide q^4 - 1");
  if (n == 1) return F.one();
  const i64 exp = N / n;
  const std::vector<i64> factors = prime_factors(n);
  for (i64 idx = 1; idx < F.order(); ++idx) {
    const Field::Elt h = F.pow(F.unpack(idx), exp);
    bool exact = !F.is_zero(h);
    for (i64 r : factors) {
      if (!exact) break;
      if (F.eq(F.pow(h, n / r), F.one())) exact = false;
    }
    if (exact) return h;
  }
  throw std::logic_error("no element of the requested order");  // unreachable
}

}  // namespace eaqmds::gf
