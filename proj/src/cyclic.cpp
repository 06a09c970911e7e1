#include "eaqmds/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eaqmds {

CodeContext make_code_context(i64 q, i64 n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("length must be odd and at least 3");
  const i64 q2 = q * q;
  if ((q2 + 1) % n != 0)
    throw std::invalid_argument("length must divide q^2 + 1");
  // gf::make_tower also validates that q is a prime power.
  CodeContext ctx{q, n, gf::make_tower(q), {}, nullptr};
  ctx.gamma = gf::nth_root_of_unity(n, ctx.tower);
  ctx.pf = std::make_shared<gf::PackedField>(ctx.tower.base);
  return ctx;
}

ConsecutiveSpec make_consecutive_spec(i64 n, i64 q, i64 k) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("length must be odd and at least 3");
  if ((q * q + 1) % n != 0)
    throw std::invalid_argument("length must divide q^2 + 1");
  const i64 s = (n + 1) / 2;
  if (k < 0 || k > s - 2)
    throw std::invalid_argument("run index must satisfy 0 <= k <= (n+1)/2 - 2");
  return {q, n, s, k};
}

DefiningSet build_defining_set(const ConsecutiveSpec& spec) {
  std::vector<i64> reps;
  reps.reserve(static_cast<size_t>(spec.k) + 1);
  for (i64 i = 0; i <= spec.k; ++i) reps.push_back(spec.s + i);
  return make_defining_set(spec.n, spec.q, reps);
}

CheckMatrix parity_check_matrix(const CodeContext& ctx, const DefiningSet& T) {
  const gf::Field& top = ctx.tower.top;
  const i64 n = ctx.n;
  const i64 rows_in = 2 * static_cast<i64>(T.coset_reps.size());
  gf::Mat m(rows_in, n);
  i64 r = 0;
  for (i64 rep : T.coset_reps) {
    // Row (gamma^{rep * j})_j over GF(q^4), split into tower coordinates.
    const gf::Field::Elt step = top.pow(ctx.gamma, rep);
    gf::Field::Elt cur = top.one();
    for (i64 j = 0; j < n; ++j) {
      auto [u, v] = ctx.tower.project(cur);
      m.at(r, j) = ctx.pf->pack(u);
      m.at(r + 1, j) = ctx.pf->pack(v);
      cur = top.mul(cur, step);
    }
    r += 2;
  }
  const i64 rk = gf::rref_in_place(*ctx.pf, m);
  if (rk != T.size())
    throw std::logic_error("parity rank " + std::to_string(rk) +
                           " does not match defining set size " +
                           std::to_string(T.size()));
  gf::Mat top_rows(rk, n);
  std::copy_n(m.a.begin(), static_cast<size_t>(rk) * static_cast<size_t>(n),
              top_rows.a.begin());
  return {ctx.q, ctx.n, ctx.pf, std::move(top_rows)};
}

Gq2Poly generator_polynomial(const CodeContext& ctx, const DefiningSet& T) {
  const gf::Field& top = ctx.tower.top;
  // Product of (x - gamma^i) accumulated in GF(q^4).
  std::vector<gf::Field::Elt> g = {top.one()};
  for (i64 i : T.elements) {
    const gf::Field::Elt root = top.pow(ctx.gamma, i);
    std::vector<gf::Field::Elt> next(g.size() + 1, top.zero());
    for (size_t d = 0; d < g.size(); ++d) {
      next[d + 1] = top.add(next[d + 1], g[d]);
      next[d] = top.sub(next[d], top.mul(root, g[d]));
    }
    g = std::move(next);
  }
  Gq2Poly out;
  out.coeffs.reserve(g.size());
  for (const gf::Field::Elt& c : g) {
    auto [u, v] = ctx.tower.project(c);
    if (!ctx.tower.base.is_zero(v))
      throw std::logic_error(
          "generator coefficient lies outside GF(q^2); defining set is not "
          "closed under the q^2 power map");
    out.coeffs.push_back(ctx.pf->pack(u));
  }
  return out;
}

i64 bch_designed_distance(const DefiningSet& T) {
  const i64 n = T.n;
  if (T.size() == 0) return 1;
  if (T.size() >= n)
    throw std::domain_error("defining set covers all residues (degenerate)");
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (i64 x : T.elements) in[static_cast<size_t>(x)] = true;
  // Longest cyclic run: start just after a gap and extend.
  i64 best = 0;
  for (i64 start = 0; start < n; ++start) {
    if (!in[static_cast<size_t>(start)] ||
        in[static_cast<size_t>((start + n - 1) % n)])
      continue;
    i64 len = 0;
    while (in[static_cast<size_t>((start + len) % n)]) ++len;
    best = std::max(best, len);
  }
  return best + 1;
}

CyclicCodeSpec build_code_spec(const CodeContext& ctx, const DefiningSet& T) {
  CyclicCodeSpec spec;
  spec.n = ctx.n;
  spec.q = ctx.q;
  spec.T = T;
  spec.g = generator_polynomial(ctx, T);
  spec.dimension = ctx.n - T.size();
  spec.delta = bch_designed_distance(T);
  return spec;
}

}  // namespace eaqmds
