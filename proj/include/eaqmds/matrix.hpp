#pragma once

/**
 * @file matrix.hpp
 * @brief Table-accelerated GF(q^2) arithmetic on packed element indices, and
 *        dense matrices over such a field.
 *
 * Matrix kernels (echelon forms, Gram ranks, minor checks) spend their time
 * in single add/mul steps, so elements are carried as canonical integer
 * encodings and all field operations become table lookups.  Small fields get
 * full addition/multiplication tables; larger ones fall back to log/exp
 * multiplication and a split-digit addition table.
 */

#include <cstdint>
#include <memory>
#include <vector>

#include "eaqmds/gf.hpp"

namespace eaqmds::gf {

using u32 = std::uint32_t;

class PackedField {
 public:
  /// Largest supported field order (tables are O(order) memory).
  static constexpr i64 kMaxOrder = i64{1} << 22;
  /// Full 2-D add/mul tables are built when order <= this.
  static constexpr i64 kFullTableOrder = 1024;

  explicit PackedField(const Field& f);

  const Field& field() const { return field_; }
  i64 order() const { return order_; }
  bool has_conj() const { return !conj_.empty(); }

  u32 zero() const { return 0; }
  u32 one() const { return one_; }
  u32 from_int(i64 c) const { return static_cast<u32>(field_.pack(field_.from_int(c))); }
  u32 pack(const Field::Elt& a) const { return static_cast<u32>(field_.pack(a)); }
  Field::Elt unpack(u32 a) const { return field_.unpack(a); }

  u32 add(u32 a, u32 b) const {
    if (!add_full_.empty())
      return add_full_[static_cast<size_t>(a) * static_cast<size_t>(order_) + b];
    return half_add_[static_cast<size_t>(lo_[a]) * half_mod_ + lo_[b]] +
           static_cast<u32>(half_mod_) *
               half_add_[static_cast<size_t>(hi_[a]) * half_mod_ + hi_[b]];
  }
  u32 neg(u32 a) const { return neg_[a]; }
  u32 sub(u32 a, u32 b) const { return add(a, neg_[b]); }
  u32 mul(u32 a, u32 b) const {
    if (!mul_full_.empty())
      return mul_full_[static_cast<size_t>(a) * static_cast<size_t>(order_) + b];
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<size_t>(log_[a]) + static_cast<size_t>(log_[b])];
  }
  u32 inv(u32 a) const;  // throws std::domain_error on zero
  u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }
  u32 conj(u32 a) const;  // requires even field degree
  u32 pow(u32 a, i64 k) const;

 private:
  Field field_;
  i64 order_ = 0;
  u32 one_ = 0;
  std::vector<u32> exp_;   // g^0 .. g^(2(order-1)-2)
  std::vector<i64> log_;   // log_[0] unused
  std::vector<u32> neg_;
  std::vector<u32> inv_;
  std::vector<u32> conj_;
  std::vector<u32> add_full_;  // order x order, only for small fields
  std::vector<u32> mul_full_;
  // split-digit addition: index = lo + half_mod * hi, digits add independently
  i64 half_mod_ = 0;
  std::vector<u32> lo_, hi_;
  std::vector<u32> half_add_;  // half_mod x half_mod
};

/// Dense row-major matrix of packed field elements.
struct Mat {
  i64 rows = 0, cols = 0;
  std::vector<u32> a;
  Mat() = default;
  Mat(i64 r, i64 c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
  u32& at(i64 r, i64 c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  u32 at(i64 r, i64 c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  bool operator==(const Mat&) const = default;
};

Mat mat_mul(const PackedField& f, const Mat& x, const Mat& y);
/// Conjugate transpose (entrywise a -> a^q).
Mat conj_transpose(const PackedField& f, const Mat& x);
/// Reduced row echelon form in place; deterministic (first nonzero pivot in
/// column order).  Returns the rank.
i64 rref_in_place(const PackedField& f, Mat& m);
i64 rank(const PackedField& f, Mat m);
/// x * conj_transpose(x).
Mat gram_matrix(const PackedField& f, const Mat& x);

}  // namespace eaqmds::gf
