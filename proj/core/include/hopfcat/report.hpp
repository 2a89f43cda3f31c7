#pragma once

#include <string>
#include <vector>

namespace hopfcat {

/// One verified identity: an id, the identity being tested in formula form,
/// the verdict, and a basis witness when the identity breaks.
struct CheckLine {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string suite;
  std::vector<CheckLine> lines;

  bool ok() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  void add(std::string id, std::string anchor, bool pass, std::string witness = "") {
    lines.push_back({std::move(id), std::move(anchor), pass, std::move(witness)});
  }
  void merge(const Report& other) {
    for (const auto& l : other.lines) lines.push_back(l);
  }
  std::string summary() const {
    int passed = 0;
    for (const auto& l : lines) passed += l.pass ? 1 : 0;
    return suite + ": " + std::to_string(passed) + "/" + std::to_string(lines.size()) +
           " checks passed";
  }
};

}  // namespace hopfcat
