#include "qplab/algebra/rational.hpp"

#include "qplab/errors.hpp"

namespace qplab {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::IncompatibleAction: return "IncompatibleAction";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorCode::ChainInconsistent: return "ChainInconsistent";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::MTooLarge: return "MTooLarge";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::RationalityFailed: return "RationalityFailed";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::UnknownGeneratorName: return "UnknownGeneratorName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qplab

namespace qplab::algebra {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    Integer num(slash == std::string::npos ? s : s.substr(0, slash), 10);
    Integer den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
  }
}

}  // namespace qplab::algebra
