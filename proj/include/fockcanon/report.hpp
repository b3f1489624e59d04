#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace fockcanon {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Named list of pass/fail assertions.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& other);

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

/// One summary line, then one line per failed check (all checks when verbose).
void print(std::ostream& os, const Report& r, bool verbose = false);

}  // namespace fockcanon
