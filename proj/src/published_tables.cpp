#include "eaqmds/published_tables.hpp"

namespace eaqmds {

const std::vector<PublishedRow>& published_rows(int table) {
  // {table, l, q, n, k_offset, subscript, d_min, d_max}, verbatim.
  static const std::vector<PublishedRow> table1 = {
      {1, 3, 13, 17, 23, 13, 7, 11},
      {1, 3, 23, 53, 59, 23, 11, 19},
      {1, 3, 43, 185, 191, 43, 19, 35},
      {1, 5, 31, 37, 43, 37, 9, 17},  // subscript printed 37 for q = 31
      {1, 5, 83, 265, 271, 83, 21, 45},
      {1, 5, 109, 457, 463, 109, 27, 59},
      {1, 7, 107, 229, 235, 107, 19, 43},
      {1, 7, 157, 493, 499, 157, 27, 63},
      {1, 7, 257, 1321, 1327, 257, 43, 103},
      {1, 9, 173, 365, 371, 173, 23, 55},
      {1, 9, 337, 1385, 1391, 337, 43, 107},
      {1, 9, 419, 2141, 2147, 419, 53, 133},
  };
  static const std::vector<PublishedRow> table2 = {
      {2, 7, 17, 29, 35, 17, 9, 13},
      {2, 7, 27, 73, 79, 27, 13, 21},
      {2, 7, 37, 137, 142, 37, 17, 29},  // k offset printed 142; n + 6 = 143
      {2, 13, 47, 65, 71, 47, 13, 19},
      {2, 13, 81, 193, 199, 81, 21, 33},
      {2, 13, 149, 653, 659, 149, 37, 61},
      {2, 17, 191, 629, 635, 191, 35, 59},
      {2, 17, 307, 1625, 1631, 307, 55, 95},
      {2, 27, 173, 205, 211, 173, 21, 33},
  };
  static const std::vector<PublishedRow> none = {};
  if (table == 1) return table1;
  if (table == 2) return table2;
  return none;
}

const PublishedRow* find_published_row(int table, i64 l, i64 q) {
  for (const PublishedRow& row : published_rows(table))
    if (row.l == l && row.q == q) return &row;
  return nullptr;
}

}  // namespace eaqmds
