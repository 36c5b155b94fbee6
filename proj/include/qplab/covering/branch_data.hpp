#pragma once

#include <string>
#include <vector>

#include "qplab/algebra/cyclotomic.hpp"
#include "qplab/algebra/mobius.hpp"

namespace qplab::covering {

struct BranchData {
  int m = 0;
  algebra::Cyclo omega;                // zeta_m
  std::vector<algebra::Cyclo> lambda;  // lambda_1 .. lambda_{m-3}
  algebra::MobiusTransformation M;     // ((w+1)/w)(z-w)/(z-1)
  algebra::MobiusTransformation T;     // M o (z -> w z) o M^-1
  algebra::MobiusTransformation U;     // -z + (1+w)^2/w
  std::vector<std::string> checks;     // identities verified, in order

  // lambda_j for -1 <= j <= m-2, with lambda_{-1} = 0, lambda_0 = 1, lambda_{m-2} = inf
  algebra::ProjPoint point(int j) const;
};

// VerificationFailed names the first identity that does not hold when verify is set.
BranchData branch_data(int m, bool verify = true);

// 1 + 2^(m-3) (m-4)
long fermat_genus(int m);

}  // namespace qplab::covering
