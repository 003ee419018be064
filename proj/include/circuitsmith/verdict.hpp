#pragma once

#include <string>
#include <vector>

#include "circuitsmith/complex.hpp"

namespace circuitsmith {

enum class Status { Pass, Fail, Unknown };

const char* to_string(Status s);

/// One named condition of a verification, with the simplices that witness
/// its failure (or, for Unknown, the simplices that could not be decided).
struct Check {
  std::string name;
  Status status = Status::Pass;
  std::vector<Simplex> witnesses;
  std::string detail;
};

/// Ordered list of checks. Fail dominates Unknown, Unknown dominates Pass.
class Verdict {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void add(std::string name, Status status, std::vector<Simplex> witnesses = {},
           std::string detail = {});
  void append(const Verdict& other, const std::string& prefix = {});

  Status status() const;
  bool ok() const { return status() == Status::Pass; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* first_failure() const;
  const Check* find(const std::string& name) const;

 private:
  std::vector<Check> checks_;
};

}  // namespace circuitsmith
