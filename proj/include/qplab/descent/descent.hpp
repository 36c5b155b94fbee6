#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qplab/algebra/multipoly.hpp"
#include "qplab/curves/rational_map.hpp"

namespace qplab::descent {

using algebra::Cyclo;
using algebra::MultiPoly;
using curves::FFE;
using curves::HyperPair;
using curves::RationalMap;

// The nontrivial automorphism of Q(w3), w3 -> w3^2. Coefficients outside
// Q(w3) are rejected by the functions below.
Cyclo sigma(const Cyclo& c);
HyperPair conjugate_curve(const HyperPair& c);
// e^sigma, living on `target` (a curve whose radicands are those of e's curve, conjugated)
FFE conjugate_element(const FFE& e, const HyperPair& target);
// f^sigma : source^sigma -> target^sigma
RationalMap conjugate_map(const RationalMap& f, const HyperPair& source_sigma, const HyperPair& target_sigma);

struct GaloisDatum {
  const HyperPair* curve = nullptr;
  std::shared_ptr<const HyperPair> conjugate;  // C^sigma
  long sigma = 2;                              // w3 -> w3^sigma
  RationalMap f_sigma;                         // C -> C^sigma
};

// f_sigma = (1/x, c y / x^l, z / x^l) on the case-2a curve of parameter l; c = w3^2 is the stated datum.
GaloisDatum case2a_datum(const HyperPair& curve, int l, const Cyclo& y_coefficient);
GaloisDatum case2a_datum(const HyperPair& curve, int l);
// f_sigma = id for a curve with rational coefficients (InvalidArgument otherwise).
GaloisDatum identity_datum(const HyperPair& curve);

struct WeilReport {
  bool pullback = false;
  bool cocycle = false;
  bool pass() const { return pullback && cocycle; }
};

WeilReport verify_weil_datum(const GaloisDatum& d);

// (pullback along f_sigma) of e^sigma; the invariants are its fixed points
FFE twist(const GaloisDatum& d, const FFE& e);

// t1..t9 as polynomials in x1..x6.
std::vector<MultiPoly> invariant_generators();

struct InvariantSystem {
  const GaloisDatum* datum = nullptr;
  std::vector<FFE> x;  // x1..x6 on C
  std::vector<FFE> t;  // t1..t9 on C
  std::vector<bool> twisted_invariant;
};

// VerificationFailed unless the datum verifies and t4 = 1.
InvariantSystem build_invariants(const GaloisDatum& d);

// The three quadrics in t1..t9 (9 variables).
std::vector<MultiPoly> image_quadrics();

struct QuadricCheck {
  bool free_identity = false;
  bool on_curve = false;
};

struct QuadricReport {
  std::vector<QuadricCheck> checks;
  bool pass() const;
};

// p(t1..t6 in x1..x6) == 0
bool vanishes_freely(const MultiPoly& q);
// p(t1..t9) == 0 on C, by reduction in the function field
bool vanishes_in_function_field(const InvariantSystem& inv, const MultiPoly& p);
// same, via Horner evaluation in the Laurent ring of C (for large p)
bool vanishes_on_curve(const InvariantSystem& inv, const MultiPoly& p);

QuadricReport verify_quadric_relations(const InvariantSystem& inv, const std::vector<MultiPoly>& quadrics);
QuadricReport verify_quadric_relations(const InvariantSystem& inv);

enum class PQVariant { Displayed, CurveC };
std::string to_string(PQVariant v);

// Reduction of the y^2 quadratic in x^l modulo x^2 = t1 x - t4. P and Q are
// returned in the nine variables t1..t9.
struct PQResult {
  int l = 0;
  PQVariant variant = PQVariant::CurveC;
  algebra::UniPoly radicand;
  MultiPoly P, Q;
};

PQResult derive_pq(int l, PQVariant variant);  // OutOfRange if l < 1

// P(t) x + Q(t) == radicand(x) on C
bool check_pq_reduction(const InvariantSystem& inv, const PQResult& pq);

struct PQComparison {
  MultiPoly expected_P, expected_Q;
  bool p_matches = false;
  bool q_matches = false;
  std::string verdict;
};

MultiPoly expected_P();
MultiPoly expected_Q();
PQComparison compare_with_expected(const PQResult& pq);  // OutOfRange unless l = 2

struct DisplayComparison {
  bool matches = false;              // with B = t2 (2 t7 - t1 t2)
  bool matches_with_displayed_B = false; // with B = t2 (2 t7 - t1)
  bool negated_with_displayed_B = false;
};

struct DescentCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct DescentModel {
  int l = 2;
  PQResult pq;
  MultiPoly R_num, R_den;  // x = R_num / R_den
  MultiPoly y_num, y_den, z_num, z_den;
  MultiPoly E, F;
  std::vector<MultiPoly> quadrics;
  std::vector<MultiPoly> traces;  // E + E^s, w E + w^2 E^s, F + F^s, w F + w^2 F^s
  PQComparison pq_displayed, pq_curve;
  DisplayComparison y_display, z_display;
  bool r_identity_displayed_B = false;
  std::vector<DescentCheck> checks;

  std::vector<MultiPoly> equations() const;  // quadrics then traces
  bool pass() const;
  std::string to_markdown() const;
};

// l = 2 only (OutOfRange otherwise). With strict, a failed rationality or
// vanishing check throws RationalityFailed / IdentityFailed with a witness.
DescentModel derive_descent_system(int l = 2, bool strict = true);

std::vector<std::string> invariant_names();  // t1..t9

}  // namespace qplab::descent
