#include "qplab/covering/branch_data.hpp"

#include "qplab/errors.hpp"

namespace qplab::covering {

using algebra::Cyclo;
using algebra::MobiusTransformation;
using algebra::ProjPoint;

ProjPoint BranchData::point(int j) const {
  if (j < -1 || j > m - 2) throw Error(ErrorCode::OutOfRange, "lambda index out of range");
  return M.apply(Cyclo::zeta(m, 2 + j));
}

BranchData branch_data(int m, bool verify) {
  if (m < 5) throw Error(ErrorCode::OutOfRange, "branch_data needs m >= 5");
  BranchData d;
  d.m = m;
  const Cyclo w = Cyclo::zeta(m);
  const Cyclo one = Cyclo::one(m);
  d.omega = w;
  const Cyclo k = (w + one) / w;
  d.M = MobiusTransformation(k, -(k * w), one, -one);
  const MobiusTransformation rot(w, Cyclo::zero(m), Cyclo::zero(m), one);
  const MobiusTransformation inv(Cyclo::zero(m), one, one, Cyclo::zero(m));
  d.T = d.M.compose(rot).compose(d.M.inverse()).canonical();
  d.U = MobiusTransformation(-one, (one + w).pow(2) / w, Cyclo::zero(m), one);
  for (int j = 1; j <= m - 3; ++j) d.lambda.push_back(d.M.apply(w.pow(2 + j)).value);
  if (!verify) return d;

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::VerificationFailed, "m=" + std::to_string(m) + ": " + what);
    d.checks.push_back(what);
  };
  require(d.T.apply(ProjPoint::inf()) == ProjPoint::finite(Cyclo::zero(m)), "T(inf) = 0");
  require(d.T.apply(Cyclo::zero(m)) == ProjPoint::finite(one), "T(0) = 1");
  require(d.T.apply(one) == ProjPoint::finite(d.lambda[0]), "T(1) = lambda_1");
  for (int j = 1; j < m - 3; ++j)
    require(d.T.apply(d.lambda[j - 1]) == ProjPoint::finite(d.lambda[j]),
            "T(lambda_" + std::to_string(j) + ") = lambda_" + std::to_string(j + 1));
  require(d.T.apply(d.lambda[m - 4]).infinite, "T(lambda_{m-3}) = inf");
  MobiusTransformation p;
  for (int i = 0; i < m; ++i) {
    if (i > 0) require(!p.is_identity(), "T^" + std::to_string(i) + " != id");
    p = p.compose(d.T);
  }
  require(p.is_identity(), "T^m = id");
  require(d.U == d.M.compose(inv).compose(d.M.inverse()), "U = M o (1/z) o M^-1");
  require(d.U.compose(d.U).is_identity(), "U^2 = id");
  for (int j = -1; j <= m - 2; ++j) {
    int target = ((m - 4 - j) + 1) % m;  // shift to 0-based range of -1..m-2
    if (target < 0) target += m;
    target -= 1;
    require(d.U.apply(d.point(j)) == d.point(target),
            "U(lambda_" + std::to_string(j) + ") = lambda_" + std::to_string(target));
  }
  return d;
}

long fermat_genus(int m) {
  if (m < 5) throw Error(ErrorCode::OutOfRange, "fermat_genus needs m >= 5");
  return 1 + (1L << (m - 3)) * (m - 4);
}

}  // namespace qplab::covering
