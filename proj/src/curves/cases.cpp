#include "qplab/curves/cases.hpp"

#include <numeric>

#include "qplab/covering/signature.hpp"
#include "qplab/errors.hpp"

namespace qplab::curves {

using groups::Action;

Case parse_case(const std::string& s) {
  if (s == "1") return Case::One;
  if (s == "2a") return Case::TwoA;
  if (s == "2b") return Case::TwoB;
  throw Error(ErrorCode::ParseError, "unknown case '" + s + "' (expected 1, 2a or 2b)");
}

std::string to_string(Case c) {
  switch (c) {
    case Case::One:
      return "1";
    case Case::TwoA:
      return "2a";
    case Case::TwoB:
      return "2b";
  }
  return "?";
}

CaseModel::CaseModel(Case k, int p, int mm, Action act, HyperPair c)
    : kind(k), param(p), m(mm), action(act), curve(std::move(c)) {}

namespace {

std::string mstr(int m) { return std::to_string(m); }

fp::Presentation deck(int m, Action act) {
  std::vector<std::string> rels{"a^2", "b^2", "(a*b)^2", "t^" + mstr(m)};
  if (act == Action::I) {
    rels.push_back("t*a*t^-1=a");
    rels.push_back("t*b*t^-1=a*b");
  } else {
    rels.push_back("t*a*t^-1=b");
    rels.push_back("t*b*t^-1=a*b");
  }
  return fp::Presentation::make({"a", "b", "t"}, rels);
}

UniPoly xpow(const Cyclo& c, int k) { return UniPoly::monomial(c, k); }

}  // namespace

fp::Presentation case1_bt_presentation(int m) {
  return fp::Presentation::make({"b", "t"}, {"b^2", "t^" + mstr(m), "[t,b]^2", "(t*b)^2=(b*t)^2"});
}

fp::Presentation aut_presentation_2a(int m) {
  return fp::Presentation::make({"t", "u"},
                                {"u^4", "t^" + mstr(m), "(u*t)^2", "t^3=(u^2*t)^3", "([t^-1,u]*u^-1)^2"});
}

fp::Presentation aut_presentation_2b(int m) {
  return fp::Presentation::make(
      {"t", "u"}, {"u^4", "t^" + mstr(m), "(t*u)^2", "[u^2,t]^2", "[u^2,t*u*t^-1]", "(t*u^2)^2=(u^2*t)^2"});
}

std::unique_ptr<CaseModel> make_case(Case kind, int param) {
  std::unique_ptr<CaseModel> cm;
  const Cyclo one(1L);
  const Cyclo i = Cyclo::zeta(4);
  const Cyclo w3 = Cyclo::zeta(3);
  switch (kind) {
    case Case::One: {
      const int q = param;
      if (q < 3 || q % 2 == 0) throw Error(ErrorCode::OutOfRange, "case 1 needs q >= 3 odd");
      const int m = 2 * q;
      auto c = HyperPair::make(xpow(one, q) - UniPoly(1L), xpow(one, m) - UniPoly(1L));
      cm = std::make_unique<CaseModel>(kind, q, m, Action::I, std::move(c));
      cm->signature = covering::Signature(0, {2, m, 2 * m});
      break;
    }
    case Case::TwoA: {
      const int l = param;
      if (l < 2) throw Error(ErrorCode::OutOfRange, "case 2a needs l >= 2");
      const int m = 3 * l;
      UniPoly xl = xpow(one, l);
      auto f = (xl - UniPoly(one)) * (xl - UniPoly(w3 * w3));
      auto g = (xl - UniPoly(w3)) * (xl - UniPoly(w3 * w3));
      cm = std::make_unique<CaseModel>(kind, l, m, Action::II, HyperPair::make(f, g));
      cm->signature = covering::Signature(0, {2, m, m});
      break;
    }
    case Case::TwoB: {
      const int l = param;
      if (l < 2) throw Error(ErrorCode::OutOfRange, "case 2b needs l >= 2");
      const int m = 4 * l;
      auto c = HyperPair::make(xpow(one, 2 * l) - UniPoly(1L), xpow(one, m) - UniPoly(1L));
      cm = std::make_unique<CaseModel>(kind, l, m, Action::I, std::move(c));
      cm->signature = covering::Signature(0, {2, m, m});
      break;
    }
  }
  const HyperPair& C = cm->curve;
  const int m = cm->m;
  const Cyclo wm = Cyclo::zeta(m);
  const FFE X = FFE::x(C), Y = FFE::radical(C, 0), Z = FFE::radical(C, 1);
  auto rf = [](const UniPoly& p) { return RationalFunction(p); };
  auto cst = [&](const Cyclo& c) { return FFE(C, RationalFunction(c)); };
  cm->maps.emplace("a", RationalMap(C, C, X, {-Y, Z}));
  cm->maps.emplace("b", RationalMap(C, C, X, {Y, -Z}));
  const FFE wx = FFE(C, rf(xpow(wm, 1)));
  if (kind == Case::TwoA) {
    const int l = cm->param;
    UniPoly xl = xpow(one, l);
    RationalFunction den = rf(xl - UniPoly(w3 * w3));
    cm->maps.emplace("t", RationalMap(C, C, wx, {cst(-w3) * Z, (Y * Z).scaled(RationalFunction(w3) / den)}));
    RationalFunction inv_x = RationalFunction(1L) / RationalFunction::x();
    RationalFunction xl_r = rf(xl);
    cm->maps.emplace("u", RationalMap(C, C, FFE(C, inv_x),
                                      {(Y * Z).scaled(RationalFunction(w3) / (xl_r * den)), Z.scaled(xl_r.inverse())}));
  } else {
    // t = (w x, i z / y, z)
    cm->maps.emplace("t", RationalMap(C, C, wx, {cst(i) * Z / Y, Z}));
    if (kind == Case::TwoB) {
      const int l = cm->param;
      RationalFunction inv_x = RationalFunction(1L) / RationalFunction::x();
      cm->maps.emplace("u", RationalMap(C, C, FFE(C, inv_x),
                                        {Y.scaled(RationalFunction(i) / rf(xpow(one, l))),
                                         Z.scaled(RationalFunction(i) / rf(xpow(one, 2 * l)))}));
    }
  }
  cm->deck_presentation = deck(m, cm->action);
  if (kind == Case::TwoA) cm->aut_presentation = aut_presentation_2a(m);
  if (kind == Case::TwoB) cm->aut_presentation = aut_presentation_2b(m);
  cm->genus = covering::genus_from_rh(4L * m, cm->signature);
  return cm;
}

}  // namespace qplab::curves
