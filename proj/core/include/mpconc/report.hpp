#pragma once

// JSON and CSV emission for analysis results. Every document carries the
// library version and the calibration constant; numbers are written with
// round-trip precision so parsing reproduces the stored values exactly.

#include <iosfwd>
#include <string>

#include "mpconc/analysis.hpp"

namespace mpconc {

std::string to_json(const BoundReport& r, bool include_records = true);
std::string to_json(const CriteriaReport& r);
std::string to_json(const ScanResult& r);
std::string to_json(const VerifyResult& r);
std::string to_json(const DistillReport& r);

ScanResult scan_from_json(const std::string& text);
VerifyResult verify_from_json(const std::string& text);

/// Scan CSV: a `# key=value ...` provenance line, the header
/// `p,detector_value,verdict`, one row per evaluation, then a summary row
/// `p_star,value_at_p_star,threshold`.
void write_scan_csv(std::ostream& os, const ScanResult& r);
ScanResult read_scan_csv(std::istream& is);

}  // namespace mpconc
