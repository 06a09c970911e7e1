#include "eaqmds/verify.hpp"

#include <stdexcept>

namespace eaqmds {

i64 gram_rank(const CheckMatrix& H) {
  const gf::Mat g = gf::gram_matrix(*H.pf, H.m);
  return gf::rank(*H.pf, g);
}

EbitReport ebit_cross_check(const DefiningSet& T, const CheckMatrix& H) {
  EbitReport r;
  r.gram_rank = gram_rank(H);
  r.tss_size = static_cast<i64>(decompose(T).tss.size());
  r.agree = (r.gram_rank == r.tss_size);
  return r;
}

i64 binom_clamped(i64 n, i64 r, i64 limit) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  __int128 c = 1;
  for (i64 i = 0; i < r; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > limit) return limit;
  }
  return static_cast<i64>(c);
}

Saturation ea_singleton(i64 n, i64 k, i64 d, i64 c) {
  if (c < 0 || c > n - 1)
    throw std::domain_error("entanglement count outside [0, n-1]");
  const i64 lhs = 2 * (d - 1);
  const i64 rhs = n - k + c;
  if (lhs == rhs) return Saturation::Saturated;
  return lhs < rhs ? Saturation::Slack : Saturation::Violated;
}

EaqmdsRecord eaqmds_record(const DefiningSet& T, const CheckMatrix& H,
                           i64 delta, i64 minor_cap) {
  EaqmdsRecord rec;
  rec.q = H.q;
  rec.n = H.n;
  rec.d = delta;
  // A disagreement between the two ebit routes is a reportable finding
  // carried in the record, never an exception.
  rec.ebits = ebit_cross_check(T, H);
  rec.c = rec.ebits.gram_rank;
  rec.k = H.n - 2 * T.size() + rec.c;
  rec.saturation = ea_singleton(rec.n, rec.k, rec.d, rec.c);
  rec.minor = mds_minor_check(H, minor_cap);
  return rec;
}

}  // namespace eaqmds
