#pragma once

#include <stdexcept>
#include <string>

namespace oyang {

struct BadParam : std::invalid_argument {
  explicit BadParam(const std::string& w) : std::invalid_argument(w) {}
};

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& w) : std::invalid_argument(w) {}
};

struct WindowViolation : std::domain_error {
  explicit WindowViolation(const std::string& w) : std::domain_error(w) {}
};

struct IncomposableLeadingTerm : std::domain_error {
  explicit IncomposableLeadingTerm(const std::string& w) : std::domain_error(w) {}
};

struct OrderError : std::logic_error {
  explicit OrderError(const std::string& w) : std::logic_error(w) {}
};

struct DegenerateArgument : std::invalid_argument {
  explicit DegenerateArgument(const std::string& w) : std::invalid_argument(w) {}
};

struct SingularB : std::invalid_argument {
  explicit SingularB(const std::string& w) : std::invalid_argument(w) {}
};

struct JacobiViolation : std::invalid_argument {
  explicit JacobiViolation(const std::string& w) : std::invalid_argument(w) {}
};

struct PoleError : std::domain_error {
  explicit PoleError(const std::string& w) : std::domain_error(w) {}
};

}  // namespace oyang
