#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qplab/covering/signature.hpp"
#include "qplab/curves/rational_map.hpp"
#include "qplab/fp/presentation.hpp"
#include "qplab/groups/constructors.hpp"

namespace qplab::curves {

enum class Case { One, TwoA, TwoB };

Case parse_case(const std::string& s);  // "1", "2a", "2b"
std::string to_string(Case c);

// The curve, maps and presentations of one case. Maps point into `curve`,
// so models are handed out by pointer and never copied.
struct CaseModel {
  Case kind;
  int param = 0;  // q for case 1, l otherwise
  int m = 0;
  groups::Action action;
  HyperPair curve;
  std::map<std::string, RationalMap> maps;  // a, b, t and, for 2a/2b, u
  fp::Presentation deck_presentation;       // on a, b, t
  std::optional<fp::Presentation> aut_presentation;  // on t, u
  covering::Signature signature;            // S/G
  int genus = 0;

  CaseModel(const CaseModel&) = delete;
  CaseModel& operator=(const CaseModel&) = delete;
  CaseModel(Case k, int p, int mm, groups::Action act, HyperPair c);
};

// OutOfRange unless q >= 3 odd (case 1) or l >= 2 (cases 2a, 2b).
std::unique_ptr<CaseModel> make_case(Case kind, int param);
// The case-1 presentation on b and t.
fp::Presentation case1_bt_presentation(int m);
fp::Presentation aut_presentation_2a(int m);
fp::Presentation aut_presentation_2b(int m);

}  // namespace qplab::curves
