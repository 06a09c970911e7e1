#include "eaqmds/matrix.hpp"

#include <stdexcept>

#include "eaqmds/zmod.hpp"

namespace eaqmds::gf {

PackedField::PackedField(const Field& f) : field_(f), order_(f.order()) {
  if (order_ > kMaxOrder)
    throw std::invalid_argument("field too large for packed tables");
  const size_t n = static_cast<size_t>(order_);
  one_ = static_cast<u32>(field_.pack(field_.one()));

  // Discrete log tables from the first generator in canonical element order.
  exp_.assign(2 * n - 2, 0);
  log_.assign(n, 0);
  Field::Elt g;
  bool found = false;
  for (i64 idx = 1; idx < order_ && !found; ++idx) {
    Field::Elt cand = field_.unpack(idx);
    if (field_.element_order(cand) == order_ - 1) {
      g = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no multiplicative generator found");
  Field::Elt acc = field_.one();
  for (i64 i = 0; i < order_ - 1; ++i) {
    const u32 packed = static_cast<u32>(field_.pack(acc));
    exp_[static_cast<size_t>(i)] = packed;
    exp_[static_cast<size_t>(i + order_ - 1)] = packed;
    log_[packed] = i;
    acc = field_.mul(acc, g);
  }

  neg_.assign(n, 0);
  inv_.assign(n, 0);
  for (i64 idx = 0; idx < order_; ++idx) {
    neg_[static_cast<size_t>(idx)] =
        static_cast<u32>(field_.pack(field_.neg(field_.unpack(idx))));
    if (idx != 0)
      inv_[static_cast<size_t>(idx)] =
          exp_[static_cast<size_t>(order_ - 1 - log_[static_cast<size_t>(idx)]) %
               static_cast<size_t>(order_ - 1)];
  }
  if (field_.degree() % 2 == 0) {
    conj_.assign(n, 0);
    const i64 sq = checked_pow(field_.p(), field_.degree() / 2);
    for (i64 idx = 0; idx < order_; ++idx)
      conj_[static_cast<size_t>(idx)] = pow(static_cast<u32>(idx), sq);
  }

  if (order_ <= kFullTableOrder) {
    add_full_.assign(n * n, 0);
    mul_full_.assign(n * n, 0);
    for (i64 a = 0; a < order_; ++a) {
      const Field::Elt ea = field_.unpack(a);
      for (i64 b = 0; b < order_; ++b) {
        const Field::Elt eb = field_.unpack(b);
        add_full_[static_cast<size_t>(a) * n + static_cast<size_t>(b)] =
            static_cast<u32>(field_.pack(field_.add(ea, eb)));
        mul_full_[static_cast<size_t>(a) * n + static_cast<size_t>(b)] =
            static_cast<u32>(field_.pack(field_.mul(ea, eb)));
      }
    }
  } else {
    // Split each index into two digit blocks; blocks add independently
    // because the encoding is positional base p.
    const i64 p = field_.p();
    const i64 e = field_.degree();
    half_mod_ = checked_pow(p, (e + 1) / 2);
    lo_.assign(n, 0);
    hi_.assign(n, 0);
    for (i64 idx = 0; idx < order_; ++idx) {
      lo_[static_cast<size_t>(idx)] = static_cast<u32>(idx % half_mod_);
      hi_[static_cast<size_t>(idx)] = static_cast<u32>(idx / half_mod_);
    }
    const size_t hm = static_cast<size_t>(half_mod_);
    half_add_.assign(hm * hm, 0);
    for (i64 a = 0; a < half_mod_; ++a)
      for (i64 b = 0; b < half_mod_; ++b) {
        // digitwise base-p addition of two digit blocks
        i64 x = a, y = b, scale = 1, out = 0;
        while (x > 0 || y > 0) {
          out += ((x + y) % p) * scale;
          x /= p;
          y /= p;
          scale *= p;
        }
        half_add_[static_cast<size_t>(a) * hm + static_cast<size_t>(b)] =
            static_cast<u32>(out);
      }
  }
}

u32 PackedField::inv(u32 a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(p^e)");
  return inv_[a];
}

u32 PackedField::conj(u32 a) const {
  if (conj_.empty())
    throw std::domain_error("conjugation needs a field of even degree");
  return conj_[a];
}

u32 PackedField::pow(u32 a, i64 k) const {
  const i64 m = order_ - 1;
  if (a == 0) {
    if (k < 0) throw std::domain_error("division by zero in GF(p^e)");
    return k == 0 ? one_ : 0;
  }
  i64 r = ((log_[a] * (k % m)) % m + m) % m;
  return exp_[static_cast<size_t>(r)];
}

Mat mat_mul(const PackedField& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("shape mismatch");
  Mat z(x.rows, y.cols);
  for (i64 i = 0; i < x.rows; ++i)
    for (i64 k = 0; k < x.cols; ++k) {
      const u32 v = x.at(i, k);
      if (v == 0) continue;
      for (i64 j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(v, y.at(k, j)));
    }
  return z;
}

Mat conj_transpose(const PackedField& f, const Mat& x) {
  Mat z(x.cols, x.rows);
  for (i64 i = 0; i < x.rows; ++i)
    for (i64 j = 0; j < x.cols; ++j) z.at(j, i) = f.conj(x.at(i, j));
  return z;
}

i64 rref_in_place(const PackedField& f, Mat& m) {
  i64 row = 0;
  for (i64 col = 0; col < m.cols && row < m.rows; ++col) {
    i64 sel = -1;
    for (i64 r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (i64 c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const u32 piv_inv = f.inv(m.at(row, col));
    for (i64 c = col; c < m.cols; ++c)
      m.at(row, c) = f.mul(m.at(row, c), piv_inv);
    for (i64 r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const u32 t = m.at(r, col);
      if (t == 0) continue;
      for (i64 c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(t, m.at(row, c)));
    }
    ++row;
  }
  return row;
}

i64 rank(const PackedField& f, Mat m) { return rref_in_place(f, m); }

Mat gram_matrix(const PackedField& f, const Mat& x) {
  Mat z(x.rows, x.rows);
  for (i64 i = 0; i < x.rows; ++i)
    for (i64 j = 0; j < x.rows; ++j) {
      u32 acc = 0;
      for (i64 k = 0; k < x.cols; ++k)
        acc = f.add(acc, f.mul(x.at(i, k), f.conj(x.at(j, k))));
      z.at(i, j) = acc;
    }
  return z;
}

}  // namespace eaqmds::gf
