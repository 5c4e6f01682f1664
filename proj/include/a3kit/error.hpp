#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace a3kit {

struct CheckReport;

enum class ErrorKind {
  DimensionMismatch,
  NotInvertible,
  AdmissibilityRequired,
  NotSkew,
  NotAYBESolution,
  SpansNotComplementary,
  MismatchedReference,
  PreconditionFailed,
  SearchSpaceTooLarge,
  RejectionBudgetExceeded,
  UnknownExpression,
  UnknownFamily,
  Parse,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. Precondition failures that come from
/// a law check carry the failing report so callers can print the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  Error(ErrorKind kind, const std::string& what, const CheckReport& report);
  ~Error() override;
  Error(const Error&);
  Error& operator=(const Error&);

  ErrorKind kind() const noexcept { return kind_; }
  const CheckReport* report() const noexcept;

 private:
  ErrorKind kind_;
  std::shared_ptr<const CheckReport> report_;
};

[[noreturn]] void throw_dimension_mismatch(std::string_view where);

}  // namespace a3kit
