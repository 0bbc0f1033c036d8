#include "gpdrep/rational.hpp"

#include <cctype>

#include "gpdrep/error.hpp"

namespace gpdrep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  using boost::multiprecision::mpz_int;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    return false;
  }
  const mpz_int p{std::string(num)};
  const mpz_int q{std::string(den)};
  if (q == 0) {
    return false;
  }
  Rational r(p, q);  // canonicalizes
  out = negative ? Rational(-r) : r;
  return true;
}

std::string format_rational(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InvalidBisection: return "InvalidBisection";
    case ErrorKind::NotSemilinear: return "NotSemilinear";
    case ErrorKind::InvalidRep: return "InvalidRep";
    case ErrorKind::NotEnoughBisections: return "NotEnoughBisections";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::ChoiceDependent: return "ChoiceDependent";
    case ErrorKind::NotConstantOnFibers: return "NotConstantOnFibers";
    case ErrorKind::AgreementFailure: return "AgreementFailure";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::UnknownElement: return "UnknownElement";
  }
  return "Unknown";
}

}  // namespace gpdrep
