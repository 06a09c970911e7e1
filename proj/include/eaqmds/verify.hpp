#pragma once

/**
 * @file verify.hpp
 * @brief Independent verification of code parameters: entanglement count via
 *        Gram rank, exhaustive minimum-distance certification via maximal
 *        minors, and the Singleton-type bound check.
 *
 * The minor check ships in two forms with identical contracts: a serial
 * reference that eliminates each column subset from scratch, and a fast
 * kernel that shares elimination work along the enumeration tree and splits
 * the outermost branching across OpenMP threads.  Both report the
 * lexicographically first dependent column set, so results are deterministic
 * regardless of thread count.
 */

#include <vector>

#include "eaqmds/cyclic.hpp"

namespace eaqmds {

/// Both routes to the entanglement count: the skew-symmetric part of the
/// defining set, and the rank of H H^dagger.
struct EbitReport {
  i64 gram_rank = 0;
  i64 tss_size = 0;
  bool agree = false;
};

i64 gram_rank(const CheckMatrix& H);
EbitReport ebit_cross_check(const DefiningSet& T, const CheckMatrix& H);

/// C(n, r) clamped to `limit` (also the overflow guard).
i64 binom_clamped(i64 n, i64 r, i64 limit = i64{4} * 1000 * 1000 * 1000 * 1000 * 1000 * 1000);

enum class MinorOutcome { Mds, NotMds, Skipped };

struct MinorVerdict {
  MinorOutcome outcome = MinorOutcome::Skipped;
  std::vector<i64> witness;  // NotMds: lexicographically first dependent set
  i64 cost = 0;              // C(n, rank), clamped; the enumeration size
};

/// Certifies that every rank-sized column subset of H is independent (the
/// check matrix of an MDS code), or exhibits the first dependent subset.
/// Subsets beyond `cap` are not enumerated: outcome Skipped with the cost.
MinorVerdict mds_minor_check(const CheckMatrix& H, i64 cap);
/// Straightforward per-subset elimination; same contract, kept as the
/// reference implementation for tests and benchmarks.
MinorVerdict mds_minor_check_serial(const CheckMatrix& H, i64 cap);

enum class Saturation { Saturated, Slack, Violated };

/// Compares 2(d-1) against n - k + c; requires 0 <= c <= n - 1.
Saturation ea_singleton(i64 n, i64 k, i64 d, i64 c);

/// One fully verified parameter set [[n, k, d; c]].
struct EaqmdsRecord {
  i64 q = 0, n = 0, k = 0, d = 0, c = 0;
  Saturation saturation = Saturation::Slack;
  EbitReport ebits;
  MinorVerdict minor;
};

/// Derives and verifies the record for the code with defining set T, check
/// matrix H and designed distance delta: c from the Gram rank (cross-checked
/// against the defining-set route), k = n - 2|T| + c, bound check, minor
/// check under cap.
EaqmdsRecord eaqmds_record(const DefiningSet& T, const CheckMatrix& H,
                           i64 delta, i64 minor_cap);

}  // namespace eaqmds
