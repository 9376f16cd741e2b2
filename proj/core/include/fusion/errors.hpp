#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fusion {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad caller-supplied parameters (group data, family arguments, indices).
struct param_error : error {
  using error::error;
};

// A ring violates one of the defining identities.
struct structural_error : error {
  std::string identity;
  std::vector<int> where;

  structural_error(std::string ident, std::vector<int> idx, const std::string& msg)
      : error(msg), identity(std::move(ident)), where(std::move(idx)) {}
};

// Text input that cannot be read as a ring document.
struct parse_error : error {
  int line;

  parse_error(int line_no, const std::string& msg)
      : error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// A grading computation hit an inconsistency (component product not
// well defined, factorization does not exist, ...).
struct grading_error : error {
  using error::error;
};

// A bounded search ran out of its node budget before deciding.
struct budget_error : error {
  using error::error;
};

}  // namespace fusion
