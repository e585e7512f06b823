#pragma once

#include <string>
#include <vector>

namespace qslchan {

struct ValidationOptions {
  /// Perturbs one Kraus weight before the completeness check; the suite must
  /// then fail. Exists for exercising the failure path.
  bool inject_kraus_defect = false;
};

struct ValidationLine {
  std::string name;
  bool pass = false;
  bool info_only = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationLine> lines;
  bool all_pass() const;
  std::string render() const;
};

ValidationReport run_validation(const ValidationOptions& opts = {});

}  // namespace qslchan
