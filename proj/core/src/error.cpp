#include "ifcrack/error.hpp"

namespace ifcrack {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::TailBoundExceeded: return "TailBoundExceeded";
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::Geometry: return "GeometryError";
    case ErrorKind::SelfBalance: return "SelfBalanceViolation";
    case ErrorKind::UnsupportedLoad: return "UnsupportedLoad";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Config: return "ConfigError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ifcrack
