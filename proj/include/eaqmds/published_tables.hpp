#pragma once

/**
 * @file published_tables.hpp
 * @brief The printed rows of the two published parameter tables, exactly as
 *        typeset (including defects), kept as claims under test.
 *
 * Each row of the source tables lists a field size q and a code
 * [[n, koff - 2d, d; 4]]_sub with a distance range; koff should equal n + 6
 * and sub should equal q, but the printed values are recorded verbatim so
 * that typos are detected rather than silently corrected.
 */

#include <vector>

#include "eaqmds/zmod.hpp"

namespace eaqmds {

struct PublishedRow {
  int table = 0;       // 1 or 2
  i64 l = 0;           // the block label the row appears under
  i64 q = 0;           // printed field size
  i64 n = 0;           // printed length
  i64 k_offset = 0;    // printed k = k_offset - 2d
  i64 subscript = 0;   // printed field subscript
  i64 d_min = 0, d_max = 0;  // printed distance range (d odd)
};

const std::vector<PublishedRow>& published_rows(int table);
/// nullptr when the (l, q) pair is not tabulated.
const PublishedRow* find_published_row(int table, i64 l, i64 q);

}  // namespace eaqmds
