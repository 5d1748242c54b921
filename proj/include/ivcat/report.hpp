#pragma once

#include <ostream>
#include <string>

#include "ivcat/enumerator.hpp"

namespace ivcat {

struct ReportOptions {
  bool compare = false;  // add reference values and a match flag
  bool timing = false;   // add per-term seconds (breaks byte-for-byte reproducibility)
};

/// Aligned "n count" table with the sequence name as a header line.
void write_table(std::ostream& out, const SequenceReport& report, const ReportOptions& options);
/// "n,count" header, one row per term.
void write_csv(std::ostream& out, const SequenceReport& report, const ReportOptions& options);
void write_json(std::ostream& out, const SequenceReport& report, const ReportOptions& options);
/// OEIS b-file: "n count" lines.
void write_bfile(std::ostream& out, const SequenceReport& report);

void write_lattice_dot(std::ostream& out, const ClosedFamily& family);
void write_lattice_json(std::ostream& out, const ClosedFamily& family);

}  // namespace ivcat
