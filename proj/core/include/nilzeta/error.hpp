#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilzeta {

enum class ErrorKind {
  BadInput,
  UnknownFamily,
  OrderCapExceeded,
  BudgetExceeded,
  NotNormal,
  BadIdentification,
  UnsupportedSupport,
  ZeroDenominator,
  NotTCGroup,
  GroupIsAbelian,
  GroupIsNilpotentOfSmallClass,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::BadIdentification: return "BadIdentification";
    case ErrorKind::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotTCGroup: return "NotTCGroup";
    case ErrorKind::GroupIsAbelian: return "GroupIsAbelian";
    case ErrorKind::GroupIsNilpotentOfSmallClass: return "GroupIsNilpotentOfSmallClass";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nilzeta
