#pragma once

#include <string>
#include <vector>

namespace gcm {

// Human-readable description of a family-member label (e.g. "thimm(2,1)",
// "g(0,1)", "g_last(1)", "f(0,2)") or a suite name ("commute", "independence",
// "reduced", "patterns", "yangian", "yangian.factorize", ...). Throws
// UnknownLabel listing the recognized forms when the label does not parse.
std::string explain(const std::string& label);

// The recognized label forms and suite names, for help output and error text.
std::vector<std::string> known_labels();

}  // namespace gcm
