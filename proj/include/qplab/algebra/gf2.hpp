#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qplab::algebra {

using Bits = std::uint64_t;

// Matrix over GF(2); each row is a bit-vector, bit j = column j.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int ncols, std::vector<Bits> rows);

  int ncols() const { return ncols_; }
  int nrows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Bits>& rows() const { return rows_; }

  // Reduced row echelon form (pivot = lowest set bit), zero rows dropped.
  GF2Matrix rref() const;
  int rank() const { return rref().nrows(); }
  // Basis of {v : <row, v> = 0 for all rows}, in RREF.
  GF2Matrix nullspace() const;
  // Row space membership.
  bool contains(Bits v) const;
  // Image of the row space under a linear map given by column images.
  GF2Matrix apply(const std::vector<Bits>& images, int target_cols) const;

  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const GF2Matrix& a, const GF2Matrix& b) {
    return a.ncols_ != b.ncols_ ? a.ncols_ < b.ncols_ : a.rows_ < b.rows_;
  }

  std::string to_string() const;

 private:
  int ncols_ = 0;
  std::vector<Bits> rows_;
};

inline int parity(Bits v) { return __builtin_parityll(v); }

// Number of k-dimensional subspaces of GF(2)^n.
std::uint64_t gaussian_binomial2(int n, int k);

// Every subspace of GF(2)^dim of codimension codim, once each, as RREF
// bases. DimensionTooLarge when dim > 16.
void gf2_for_each_subspace(int dim, int codim, const std::function<void(const GF2Matrix&)>& visit);
std::vector<GF2Matrix> gf2_subspaces(int dim, int codim);
// Same enumeration without materializing matrices; the row buffer is reused.
void gf2_for_each_subspace_rows(int dim, int codim, const std::function<void(const std::vector<Bits>&)>& visit);

}  // namespace qplab::algebra
