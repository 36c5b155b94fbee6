#include "qplab/algebra/gf2.hpp"

#include <algorithm>
#include <sstream>

#include "qplab/errors.hpp"

namespace qplab::algebra {

GF2Matrix::GF2Matrix(int ncols, std::vector<Bits> rows) : ncols_(ncols), rows_(std::move(rows)) {
  if (ncols < 0 || ncols > 64) throw Error(ErrorCode::DimensionTooLarge, "GF2Matrix supports at most 64 columns");
  Bits mask = ncols == 64 ? ~Bits{0} : ((Bits{1} << ncols) - 1);
  for (auto r : rows_)
    if (r & ~mask) throw Error(ErrorCode::OutOfRange, "row has bits beyond the column count");
}

GF2Matrix GF2Matrix::rref() const {
  std::vector<Bits> r = rows_;
  std::vector<Bits> out;
  for (int col = 0; col < ncols_; ++col) {
    Bits bit = Bits{1} << col;
    auto it = std::find_if(r.begin(), r.end(), [bit](Bits v) { return v & bit; });
    if (it == r.end()) continue;
    Bits piv = *it;
    r.erase(it);
    for (auto& v : r)
      if (v & bit) v ^= piv;
    for (auto& v : out)
      if (v & bit) v ^= piv;
    out.push_back(piv);
  }
  GF2Matrix m;
  m.ncols_ = ncols_;
  m.rows_ = std::move(out);
  return m;
}

GF2Matrix GF2Matrix::nullspace() const {
  GF2Matrix e = rref();
  Bits pivots = 0;
  std::vector<int> pivcol;
  for (auto v : e.rows_) {
    int p = __builtin_ctzll(v);
    pivots |= Bits{1} << p;
    pivcol.push_back(p);
  }
  std::vector<Bits> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (pivots & (Bits{1} << f)) continue;
    Bits v = Bits{1} << f;
    for (std::size_t i = 0; i < e.rows_.size(); ++i)
      if (e.rows_[i] & (Bits{1} << f)) v |= Bits{1} << pivcol[i];
    basis.push_back(v);
  }
  return GF2Matrix(ncols_, basis).rref();
}

bool GF2Matrix::contains(Bits v) const {
  GF2Matrix e = rref();
  for (auto r : e.rows_) {
    int p = __builtin_ctzll(r);
    if (v & (Bits{1} << p)) v ^= r;
  }
  return v == 0;
}

GF2Matrix GF2Matrix::apply(const std::vector<Bits>& images, int target_cols) const {
  std::vector<Bits> out;
  for (auto r : rows_) {
    Bits img = 0;
    for (int j = 0; j < ncols_; ++j)
      if (r & (Bits{1} << j)) img ^= images.at(j);
    out.push_back(img);
  }
  return GF2Matrix(target_cols, out).rref();
}

std::string GF2Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ",";
    for (int j = 0; j < ncols_; ++j) os << ((rows_[i] >> j) & 1);
  }
  os << "]";
  return os.str();
}

std::uint64_t gaussian_binomial2(int n, int k) {
  if (k < 0 || k > n) return 0;
  // prod_{i<k} (2^(n-i) - 1) / (2^(i+1) - 1), exact at every step
  unsigned __int128 num = 1;
  for (int i = 0; i < k; ++i) {
    num = num * ((static_cast<unsigned __int128>(1) << (n - i)) - 1);
    num = num / ((static_cast<unsigned __int128>(1) << (i + 1)) - 1);
  }
  return static_cast<std::uint64_t>(num);
}

void gf2_for_each_subspace_rows(int dim, int codim, const std::function<void(const std::vector<Bits>&)>& visit) {
  if (dim > 16) throw Error(ErrorCode::DimensionTooLarge, "gf2_subspaces: dim " + std::to_string(dim) + " > 16");
  if (dim < 0 || codim < 0 || codim > dim) throw Error(ErrorCode::OutOfRange, "gf2_subspaces: need 0 <= codim <= dim");
  const int k = dim - codim;
  // Choose pivot columns, then fill the free entries to the right of each
  // pivot that are not themselves pivot columns.
  std::vector<int> piv(k);
  std::vector<Bits> rows(k);
  std::vector<std::pair<int, Bits>> slots;  // (row, column bit)
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      Bits pivmask = 0;
      for (int p : piv) pivmask |= Bits{1} << p;
      slots.clear();
      for (int i = 0; i < k; ++i)
        for (int c = piv[i] + 1; c < dim; ++c)
          if (!(pivmask & (Bits{1} << c))) slots.emplace_back(i, Bits{1} << c);
      const int total = static_cast<int>(slots.size());
      for (int i = 0; i < k; ++i) rows[i] = Bits{1} << piv[i];
      // Gray code walk: one entry flips per step.
      visit(rows);
      for (Bits step = 1; step < (Bits{1} << total); ++step) {
        const auto& [r, bit] = slots[__builtin_ctzll(step)];
        rows[r] ^= bit;
        visit(rows);
      }
      return;
    }
    for (int c = start; c <= dim - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
}

void gf2_for_each_subspace(int dim, int codim, const std::function<void(const GF2Matrix&)>& visit) {
  gf2_for_each_subspace_rows(dim, codim, [&](const std::vector<Bits>& rows) { visit(GF2Matrix(dim, rows)); });
}

std::vector<GF2Matrix> gf2_subspaces(int dim, int codim) {
  std::vector<GF2Matrix> out;
  gf2_for_each_subspace(dim, codim, [&](const GF2Matrix& m) { out.push_back(m); });
  return out;
}

}  // namespace qplab::algebra
