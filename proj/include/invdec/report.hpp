#pragma once

#include <string>
#include <vector>

namespace invdec {

// One failed check inside a verification suite, with enough context to
// reproduce it by hand.
struct Violation {
  std::string inputs;
  std::string expected;
  std::string got;
};

// Outcome of a verification suite. A suite passes exactly when it recorded
// no violations; `mode` says whether every case was visited or a documented
// deterministic sample was used.
struct Report {
  std::string suite;
  long cases = 0;
  std::vector<Violation> violations;
  std::string mode = "exhaustive";
  long max_bits_used = 0;

  bool passed() const { return violations.empty(); }
};

}  // namespace invdec
