#include "fockcanon/report.hpp"

#include <algorithm>

namespace fockcanon {

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back({other.title_ + ": " + c.name, c.passed, c.detail});
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

void print(std::ostream& os, const Report& r, bool verbose) {
  os << (r.passed() ? "PASS " : "FAIL ") << r.title() << " (" << r.checks().size() << " checks, " << r.failures()
     << " failed)\n";
  for (const auto& c : r.checks()) {
    if (c.passed && !verbose) continue;
    os << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << '\n';
  }
}

}  // namespace fockcanon
