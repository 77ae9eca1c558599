#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hgfm {

struct HypothesisDiagnostic {
  std::string name;
  bool satisfied = true;
  int position = 0;  // witnessing or violating 1-based j; 0 when not applicable
  std::string detail;
};

struct ProbeRecord {
  std::string desc;
  std::string lhs, rhs;  // exact "p/q" or shortest-round-trip decimal
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool pass = false;
  std::string note;
};

/// The uniform result object of every identity verifier. `pass` is true iff
/// all hypotheses are satisfied and every probe's residual is within
/// tolerance (identically zero residuals in the exact backend).
struct VerificationReport {
  std::string identity;
  std::string backend;  // "exact" | "floating"
  double tolerance = 0.0;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<HypothesisDiagnostic> hypotheses;
  std::vector<ProbeRecord> probes;
  bool pass = false;

  /// Recomputes `pass` from hypotheses and probes.
  void finalize();

  double max_rel_residual() const;

  /// JSON with a stable schema (top-level "schema": 1).
  std::string to_json_string(int indent = 2) const;
  /// One header line plus one row per probe; fields quoted as needed.
  std::string to_csv() const;
  /// Human-readable summary.
  std::string to_text() const;
};

}  // namespace hgfm
