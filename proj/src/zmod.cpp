#include "eaqmds/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace eaqmds {

namespace {

constexpr i64 kModulusLimit = i64{1} << 31;

void check_context(i64 n, i64 q) {
  if (n <= 0 || q <= 0) throw std::invalid_argument("zmod: n and q must be positive");
  if (n >= kModulusLimit || q >= kModulusLimit)
    throw std::invalid_argument("zmod: modulus out of supported range");
  if (std::gcd(n, q) != 1)
    throw std::invalid_argument("zmod: gcd(n, q) must be 1");
}

}  // namespace

i64 mod_norm(i64 x, i64 n) {
  x %= n;
  return x < 0 ? x + n : x;
}

i64 mod_mul(i64 x, i64 y, i64 n) { return (x * y) % n; }

i64 mod_pow(i64 x, i64 e, i64 n) {
  x = mod_norm(x, n);
  i64 r = 1 % n;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, x, n);
    x = mod_mul(x, x, n);
    e >>= 1;
  }
  return r;
}

bool is_prime(i64 p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (i64 d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i64 x) {
  std::vector<i64> fs;
  for (i64 d = 2; d * d <= x; d == 2 ? d = 3 : d += 2) {
    if (x % d == 0) {
      fs.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) fs.push_back(x);
  return fs;
}

bool CyclotomicCoset::contains(i64 x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool DefiningSet::contains(i64 x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

CyclotomicCoset cyclotomic_coset(i64 s, i64 n, i64 q) {
  check_context(n, q);
  const i64 base = mod_mul(mod_norm(q, n), mod_norm(q, n), n);
  CyclotomicCoset c;
  c.n = n;
  c.base = base;
  i64 x = mod_norm(s, n);
  do {
    c.elements.push_back(x);
    x = mod_mul(x, base, n);
  } while (x != mod_norm(s, n));
  std::sort(c.elements.begin(), c.elements.end());
  c.representative = c.elements.front();
  return c;
}

std::vector<CyclotomicCoset> all_cosets(i64 n, i64 q) {
  check_context(n, q);
  std::vector<CyclotomicCoset> cosets;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (i64 s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    CyclotomicCoset c = cyclotomic_coset(s, n, q);
    for (i64 x : c.elements) seen[static_cast<size_t>(x)] = 1;
    cosets.push_back(std::move(c));
  }
  return cosets;  // already sorted by representative: reps appear in order
}

std::vector<i64> neg_q_image(const std::vector<i64>& s, i64 q, i64 n) {
  check_context(n, q);
  const i64 negq = mod_norm(-q, n);
  std::set<i64> out;
  for (i64 x : s) out.insert(mod_mul(mod_norm(x, n), negq, n));
  return {out.begin(), out.end()};
}

CosetClass classify_coset(const CyclotomicCoset& c, i64 q) {
  const i64 n = c.n;
  const i64 image = mod_mul(mod_norm(-q, n), c.representative, n);
  CosetClass cls;
  if (c.contains(image)) {
    cls.kind = CosetClass::SkewSymmetric;
    cls.partner_rep = c.representative;
  } else {
    cls.kind = CosetClass::SkewAsymmetricPair;
    cls.partner_rep = cyclotomic_coset(image, n, q).representative;
  }
  return cls;
}

DefiningSet make_defining_set(i64 n, i64 q, const std::vector<i64>& reps) {
  check_context(n, q);
  DefiningSet t;
  t.n = n;
  t.q = q;
  std::set<i64> rep_set;
  std::set<i64> elem_set;
  for (i64 r : reps) {
    CyclotomicCoset c = cyclotomic_coset(r, n, q);
    if (rep_set.insert(c.representative).second)
      elem_set.insert(c.elements.begin(), c.elements.end());
  }
  t.coset_reps.assign(rep_set.begin(), rep_set.end());
  t.elements.assign(elem_set.begin(), elem_set.end());
  return t;
}

Decomposition decompose(const DefiningSet& t) {
  Decomposition d;
  d.tss.n = d.tsas.n = t.n;
  d.tss.q = d.tsas.q = t.q;
  if (t.elements.empty()) return d;

  const std::vector<i64> image = neg_q_image(t.elements, t.q, t.n);
  std::vector<i64> tss_elems;
  std::set_intersection(t.elements.begin(), t.elements.end(), image.begin(),
                        image.end(), std::back_inserter(tss_elems));
  std::vector<i64> tsas_elems;
  std::set_difference(t.elements.begin(), t.elements.end(), tss_elems.begin(),
                      tss_elems.end(), std::back_inserter(tsas_elems));

  // Witnesses at coset level.  A coset sits in T_ss exactly when its neg-q
  // partner coset is also contained in T.
  std::set<i64> tss_reps, tsas_reps, paired;
  for (i64 rep : t.coset_reps) {
    CyclotomicCoset c = cyclotomic_coset(rep, t.n, t.q);
    CosetClass cls = classify_coset(c, t.q);
    if (cls.kind == CosetClass::SkewSymmetric) {
      tss_reps.insert(rep);
      d.witnesses.push_back({CosetClass::SkewSymmetric, rep, rep});
    } else if (std::binary_search(t.coset_reps.begin(), t.coset_reps.end(),
                                  cls.partner_rep)) {
      tss_reps.insert(rep);
      if (paired.insert(std::min(rep, cls.partner_rep)).second)
        d.witnesses.push_back({CosetClass::SkewAsymmetricPair,
                               std::min(rep, cls.partner_rep),
                               std::max(rep, cls.partner_rep)});
    } else {
      tsas_reps.insert(rep);
    }
  }

  d.tss.coset_reps.assign(tss_reps.begin(), tss_reps.end());
  d.tss.elements = std::move(tss_elems);
  d.tsas.coset_reps.assign(tsas_reps.begin(), tsas_reps.end());
  d.tsas.elements = std::move(tsas_elems);
  return d;
}

}  // namespace eaqmds
