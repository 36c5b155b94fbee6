#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qplab/algebra/cyclotomic.hpp"
#include "qplab/algebra/mobius.hpp"

namespace qplab::curves {

using algebra::Cyclo;

// K[s_1, ..., s_n] / (s_j^2 - lambda_j), elements stored on the 2^n monomials s_S.
class RadicalAlgebra {
 public:
  using Elem = std::vector<Cyclo>;

  explicit RadicalAlgebra(std::vector<Cyclo> squares);

  int nradicals() const { return static_cast<int>(squares_.size()); }
  std::size_t dim() const { return std::size_t{1} << squares_.size(); }

  Elem scalar(const Cyclo& c) const;
  Elem radical(int j) const;  // s_j, 1-based
  Elem add(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem scaled(const Elem& x, const Cyclo& c) const;
  bool equal(const Elem& x, const Elem& y) const;
  bool is_scalar(const Elem& x) const;
  std::string to_string(const Elem& x) const;
  std::complex<double> to_complex(const Elem& x) const;  // principal square roots

 private:
  std::vector<Cyclo> squares_;
};

// [x_1 : ... : x_m] -> [c_1 x_{src_1} : ... : c_m x_{src_m}], 0-based indices.
struct MonomialMap {
  std::vector<int> src;
  std::vector<RadicalAlgebra::Elem> coeff;
};

MonomialMap monomial_compose(const RadicalAlgebra& R, const MonomialMap& outer, const MonomialMap& inner);
bool monomial_projective_equal(const RadicalAlgebra& R, const MonomialMap& x, const MonomialMap& y);
// Diagonal with all c_i^2 equal: an element of F up to scalars. Signs of
// radical monomials are not decidable formally (s1 s2 vs s3), squares are.
bool monomial_in_sign_group(const RadicalAlgebra& R, const MonomialMap& x);

struct FermatAlpha {
  int radical = 0;  // index k of s_k, 0 if none
  Cyclo unit;       // root of unity c with alpha = c s_k
  std::string text;
};

struct FermatReport {
  int m = 0;
  long genus_c = 0;
  std::vector<Cyclo> lambda;            // lambda_1 .. lambda_{m-3}
  std::vector<Cyclo> alpha_squared;     // solved, alpha_1^2 .. alpha_{m-1}^2
  std::vector<FermatAlpha> alpha;
  bool t_preserves_curve = false;
  bool u_preserves_curve = false;
  bool pi_t = false;                    // pi o T = T~ o pi
  bool pi_u = false;                    // pi o U = U~ o pi
  std::vector<bool> t_conjugation;      // T o a_j = a_{j+1} o T, j = 1..m (a_{m+1} = a_1)
  bool u_squared_in_f = false;
  bool t_order_m = false;               // T^m scalar, no smaller power is
  bool dihedral = false;                // (U T)^2 in F
  bool genus_consistent = false;        // 1 + (g_C - 1)/2^(m-3) = m - 3
  double float_residual = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

// Solves for the coefficients of T on the generalized Fermat curve
// lambda_k x_1^2 + x_2^2 + x_{k+3}^2 = 0 (lambda_0 = 1), then checks the action.
// MTooLarge for m > 8, OutOfRange for m < 5, NoSolution if no T of the
// displayed shape exists.
FermatReport verify_fermat_action(int m, unsigned seed = 1);

}  // namespace qplab::curves
