#include "qplab/fp/maximality.hpp"

#include "qplab/errors.hpp"
#include "qplab/groups/constructors.hpp"

namespace qplab::fp {

namespace {

groups::FiniteGroup s3() { return groups::FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, {"c", "s"}); }

ChainStep theta(const groups::FiniteGroup& S3) {
  return {"theta", {"x", "y"}, {}, &S3, {S3.gen("c"), S3.gen("s")}, {0, S3.gen("s")}};
}

NormalityReport finish(const std::string& label, const Presentation& delta, ChainResult res) {
  NormalityReport r;
  r.label = label;
  r.index = res.index;
  r.generators = res.generators;
  auto t = todd_coxeter(delta, res.generators, 50 * res.index + 1000);
  if (t.ncosets != res.index) throw Error(ErrorCode::Internal, label + ": re-enumeration disagrees with the chain");
  r.induced_order = groups::FiniteGroup::from_permutations(t.permutations()).order();
  r.normal = is_normal_finite_index(delta, t);
  r.chain = std::move(res);
  return r;
}

}  // namespace

Presentation triangle_presentation(int p, int n) {
  return Presentation::make({"x", "y"}, {"x^" + std::to_string(p), "y^" + std::to_string(n), "(x*y)^2"});
}

NormalityReport case1_uniformizing_subgroup(int q) {
  if (q < 3 || q % 2 == 0) throw Error(ErrorCode::OutOfRange, "case 1 needs odd q >= 3");
  const int m = 2 * q;
  auto S3 = s3();
  auto Zm = groups::cyclic(m);
  auto V = groups::klein_four();
  Presentation delta = triangle_presentation(3, 2 * m);
  std::vector<ChainStep> chain{theta(S3)};
  chain.push_back({"to Z_m", {"u", "v"}, {"y", "x^-1*y*x^-1"}, &Zm, {1, 0}, {}});
  ChainStep eta{"eta", {}, {}, &V, {}, {}};
  for (int j = 1; j <= m; ++j) {
    eta.names.push_back("x" + std::to_string(j));
    eta.words.push_back("u^" + std::to_string(j - 1) + "*v*u^" + std::to_string(1 - j));
    eta.images.push_back(j % 2 == 1 ? V.gen("b") : V.parse("a*b"));
  }
  eta.names.push_back("x" + std::to_string(m + 1));
  eta.words.push_back("u^" + std::to_string(m));
  eta.images.push_back(V.gen("a"));
  chain.push_back(eta);
  return finish("K < Delta(3," + std::to_string(2 * m) + ",2)", delta, subgroup_from_homomorphism_chain(delta, chain));
}

NormalityReport case2b_uniformizing_subgroup(const Presentation& aut, int m) {
  auto S3 = s3();
  auto A = cayley_from_presentation(aut);
  Presentation delta = triangle_presentation(3, m);
  int t = A.gen("t"), u = A.gen("u");
  std::vector<ChainStep> chain{theta(S3)};
  chain.push_back({"to Aut", {"u", "v"}, {"y", "x^-1*y*x^-1"}, &A, {t, A.inv(A.mul(u, t))}, {}});
  return finish("K < Delta(3," + std::to_string(m) + ",2)", delta, subgroup_from_homomorphism_chain(delta, chain));
}

}  // namespace qplab::fp
