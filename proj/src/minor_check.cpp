#include <algorithm>
#include <atomic>

#include "eaqmds/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eaqmds {

namespace {

using gf::u32;

// Completes a dependent prefix to a full column subset with the smallest
// available columns; with increasing enumeration this is the
// lexicographically first dependent subset extending the prefix.
std::vector<i64> complete_witness(const std::vector<i64>& chosen, i64 j,
                                  i64 r, i64 /*n*/) {
  std::vector<i64> w = chosen;
  w.push_back(j);
  while (static_cast<i64>(w.size()) < r) w.push_back(w.back() + 1);
  return w;
}

// Depth-first enumeration over increasing column subsets, sharing
// elimination work along the tree.  The state at depth i holds every still
// eligible column reduced modulo the span of the i chosen columns and
// restricted to the r - i rows not yet consumed by pivots (column-major).
// A column that reduces to zero lies in the span of the chosen ones, so the
// subset completed with the smallest remaining columns is dependent.
struct ShrinkSearch {
  const gf::PackedField& f;
  i64 r, n;
  std::vector<std::vector<u32>> state;  // per depth: (r - i) rows x n cols
  std::vector<i64> chosen;
  std::vector<i64> witness;

  ShrinkSearch(const gf::PackedField& pf, const gf::Mat& h)
      : f(pf), r(h.rows), n(h.cols), state(static_cast<size_t>(h.rows) + 1) {
    for (i64 i = 0; i <= r; ++i)
      state[static_cast<size_t>(i)].assign(
          static_cast<size_t>((r - i) * n), 0);
    std::vector<u32>& s0 = state[0];
    for (i64 j = 0; j < n; ++j)
      for (i64 t = 0; t < r; ++t) s0[static_cast<size_t>(j * r + t)] = h.at(t, j);
  }

  // Explores subsets whose column at this depth starts at `first`; returns
  // true when a dependent subset was found (recorded in `witness`).
  bool dfs(i64 depth, i64 first, i64 last) {
    const i64 free_rows = r - depth;
    const std::vector<u32>& cur = state[static_cast<size_t>(depth)];
    for (i64 j = first; j <= std::min(last, n - free_rows); ++j) {
      const u32* col = cur.data() + static_cast<size_t>(j * free_rows);
      i64 pivot = -1;
      for (i64 t = 0; t < free_rows; ++t)
        if (col[t] != 0) { pivot = t; break; }
      if (pivot < 0) {
        witness = complete_witness(chosen, j, r, n);
        return true;
      }
      if (depth + 1 == r) continue;  // full independent subset
      // Eliminate the pivot row from every later column.
      std::vector<u32>& child = state[static_cast<size_t>(depth) + 1];
      const u32 pinv = f.inv(col[pivot]);
      const i64 fr = free_rows - 1;
      for (i64 jj = j + 1; jj < n; ++jj) {
        const u32* src = cur.data() + static_cast<size_t>(jj * free_rows);
        u32* dst = child.data() + static_cast<size_t>(jj * fr);
        const u32 factor = f.mul(src[pivot], pinv);
        i64 w = 0;
        if (factor == 0) {
          for (i64 t = 0; t < free_rows; ++t)
            if (t != pivot) dst[w++] = src[t];
        } else {
          for (i64 t = 0; t < free_rows; ++t)
            if (t != pivot) dst[w++] = f.sub(src[t], f.mul(factor, col[t]));
        }
      }
      chosen.push_back(j);
      const bool found = dfs(depth + 1, j + 1, n - 1);
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  }
};

MinorVerdict skip_or_trivial(const gf::Mat& h, i64 cap, bool& done) {
  MinorVerdict v;
  const i64 r = h.rows, n = h.cols;
  v.cost = binom_clamped(n, r);
  done = true;
  if (r == 0 || r == n) {
    // Only the empty set / the full set; the matrix has full row rank.
    v.outcome = MinorOutcome::Mds;
    return v;
  }
  if (v.cost > cap) {
    v.outcome = MinorOutcome::Skipped;
    return v;
  }
  done = false;
  return v;
}

}  // namespace

MinorVerdict mds_minor_check(const CheckMatrix& H, i64 cap) {
  bool done = false;
  MinorVerdict v = skip_or_trivial(H.m, cap, done);
  if (done) return v;
  const i64 r = H.m.rows, n = H.m.cols;

  // Split the outermost column choice across threads.  Each first column
  // spans an independent subtree; the recorded winner is the smallest first
  // column with a witness, so the result does not depend on scheduling.
  std::vector<std::vector<i64>> slot(static_cast<size_t>(n));
  std::atomic<i64> best{n};
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    ShrinkSearch search(*H.pf, H.m);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
    for (i64 j1 = 0; j1 <= n - r; ++j1) {
      if (j1 > best.load(std::memory_order_relaxed)) continue;
      if (search.dfs(0, j1, j1)) {
        slot[static_cast<size_t>(j1)] = search.witness;
        i64 prev = best.load(std::memory_order_relaxed);
        while (j1 < prev &&
               !best.compare_exchange_weak(prev, j1, std::memory_order_relaxed)) {
        }
      }
    }
  }
  for (const std::vector<i64>& w : slot) {
    if (w.empty()) continue;
    v.outcome = MinorOutcome::NotMds;
    v.witness = w;
    return v;
  }
  v.outcome = MinorOutcome::Mds;
  return v;
}

MinorVerdict mds_minor_check_serial(const CheckMatrix& H, i64 cap) {
  bool done = false;
  MinorVerdict v = skip_or_trivial(H.m, cap, done);
  if (done) return v;
  const gf::PackedField& f = *H.pf;
  const i64 r = H.m.rows, n = H.m.cols;

  // Plain enumeration: every subset is eliminated from scratch.
  std::vector<i64> idx(static_cast<size_t>(r));
  for (i64 i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
  gf::Mat sub(r, r);
  while (true) {
    for (i64 c = 0; c < r; ++c)
      for (i64 t = 0; t < r; ++t)
        sub.at(t, c) = H.m.at(t, idx[static_cast<size_t>(c)]);
    if (gf::rank(f, sub) < r) {
      v.outcome = MinorOutcome::NotMds;
      v.witness = idx;
      return v;
    }
    // next subset in lexicographic order
    i64 i = r - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (i64 t = i + 1; t < r; ++t)
      idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
  v.outcome = MinorOutcome::Mds;
  return v;
}

}  // namespace eaqmds
