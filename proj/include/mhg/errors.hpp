#pragma once

#include <stdexcept>
#include <string>

namespace mhg {

struct OrderMismatch : std::runtime_error {
  explicit OrderMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct DivisionByNonUnit : std::runtime_error {
  explicit DivisionByNonUnit(const std::string& m) : std::runtime_error(m) {}
};

struct BadConstantTerm : std::runtime_error {
  explicit BadConstantTerm(const std::string& m) : std::runtime_error(m) {}
};

struct NotInP : std::runtime_error {
  explicit NotInP(const std::string& m) : std::runtime_error(m) {}
};

struct RegularityFailure : std::runtime_error {
  int degree;
  RegularityFailure(const std::string& m, int d) : std::runtime_error(m), degree(d) {}
};

struct TableInconsistency : std::runtime_error {
  explicit TableInconsistency(const std::string& m) : std::runtime_error(m) {}
};

struct DegreeBoundExceeded : std::runtime_error {
  explicit DegreeBoundExceeded(const std::string& m) : std::runtime_error(m) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& m) : std::runtime_error(m) {}
};

struct SpecializationMismatch : std::runtime_error {
  explicit SpecializationMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct SolveFailure : std::runtime_error {
  explicit SolveFailure(const std::string& m) : std::runtime_error(m) {}
};

struct RankDeficient : std::runtime_error {
  explicit RankDeficient(const std::string& m) : std::runtime_error(m) {}
};

struct InterpolationUnstable : std::runtime_error {
  explicit InterpolationUnstable(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace mhg
