#include "a3kit/error.hpp"

#include "a3kit/report.hpp"

namespace a3kit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::AdmissibilityRequired: return "AdmissibilityRequired";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::NotAYBESolution: return "NotAYBESolution";
    case ErrorKind::SpansNotComplementary: return "SpansNotComplementary";
    case ErrorKind::MismatchedReference: return "MismatchedReference";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorKind::UnknownExpression: return "UnknownExpression";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& what, const CheckReport& report)
    : std::runtime_error(what), kind_(kind), report_(std::make_shared<const CheckReport>(report)) {}

Error::~Error() = default;
Error::Error(const Error&) = default;
Error& Error::operator=(const Error&) = default;

const CheckReport* Error::report() const noexcept { return report_.get(); }

void throw_dimension_mismatch(std::string_view where) {
  throw Error(ErrorKind::DimensionMismatch, "dimension mismatch in " + std::string(where));
}

}  // namespace a3kit
