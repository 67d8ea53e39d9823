#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace laplacekit {

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

// Structured verdict of one hypothesis check, with the numerical evidence
// that produced it. Verdicts are evidence summaries ("consistent with"),
// never proofs.
struct CheckReport {
  std::string check_name;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::pair<std::string, double>> evidence;
  std::map<std::string, double> thresholds_used;
  std::string notes;
};

}  // namespace laplacekit
