#include "ivcat/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace ivcat {

namespace {

nlohmann::json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

}  // namespace

void write_table(std::ostream& out, const SequenceReport& report, const ReportOptions& options) {
  out << report.spec.sequence_name() << " [" << to_string(report.algorithm) << "]\n";
  for (const auto& t : report.terms) {
    out << std::setw(3) << t.n << "  " << std::setw(12) << t.count.str();
    if (options.compare) {
      const auto ref = reference_sequence(report.spec, t.n);
      if (ref) {
        out << "  reference " << ref->str() << (ref == t.count ? "  ok" : "  MISMATCH");
      } else {
        out << "  reference -";
      }
    }
    if (options.timing) out << "  " << seconds_text(t.seconds) << "s";
    out << '\n';
  }
}

void write_csv(std::ostream& out, const SequenceReport& report, const ReportOptions& options) {
  out << "n,count";
  if (options.compare) out << ",reference,match";
  if (options.timing) out << ",seconds";
  out << '\n';
  for (const auto& t : report.terms) {
    out << t.n << ',' << t.count.str();
    if (options.compare) {
      const auto ref = reference_sequence(report.spec, t.n);
      if (ref) {
        out << ',' << ref->str() << ',' << (*ref == t.count ? "true" : "false");
      } else {
        out << ",,";
      }
    }
    if (options.timing) out << ',' << seconds_text(t.seconds);
    out << '\n';
  }
}

void write_json(std::ostream& out, const SequenceReport& report, const ReportOptions& options) {
  nlohmann::json doc;
  doc["spec"] = report.spec.to_string();
  doc["name"] = report.spec.sequence_name();
  doc["algorithm"] = to_string(report.algorithm);
  doc["terms"] = nlohmann::json::array();
  for (const auto& t : report.terms) {
    nlohmann::json term{{"n", t.n}, {"count", big_to_json(t.count)}};
    if (options.compare) {
      const auto ref = reference_sequence(report.spec, t.n);
      term["reference"] = ref ? big_to_json(*ref) : nlohmann::json(nullptr);
      term["match"] = ref ? nlohmann::json(*ref == t.count) : nlohmann::json(nullptr);
    }
    if (options.timing) term["seconds"] = t.seconds;
    doc["terms"].push_back(std::move(term));
  }
  out << doc.dump(2) << '\n';
}

void write_bfile(std::ostream& out, const SequenceReport& report) {
  for (const auto& t : report.terms) out << t.n << ' ' << t.count.str() << '\n';
}

void write_lattice_dot(std::ostream& out, const ClosedFamily& family) {
  out << "digraph lattice {\n";
  out << "  // " << family.spec.sequence_name() << ", n = " << family.ambient.n() << ", "
      << family.members.size() << " closed sets\n";
  out << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& s = family.members[i];
    std::string intervals;
    for (const auto& x : s.members()) {
      if (!intervals.empty()) intervals += ' ';
      intervals += '[' + x.to_string() + ']';
    }
    out << "  m" << i << " [label=\"{" << s.to_index_list() << "}\\n" << intervals << "\"];\n";
  }
  for (const auto& [lo, hi] : family.covers) out << "  m" << lo << " -> m" << hi << ";\n";
  out << "}\n";
}

void write_lattice_json(std::ostream& out, const ClosedFamily& family) {
  nlohmann::json doc;
  doc["n"] = family.ambient.n();
  doc["spec"] = family.spec.to_string();
  doc["name"] = family.spec.sequence_name();
  doc["count"] = family.members.size();
  doc["members"] = nlohmann::json::array();
  for (const auto& s : family.members) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& x : s.members()) intervals.push_back(x.to_string());
    doc["members"].push_back({{"indices", s.indices()}, {"bitmask", s.to_bitmask()},
                              {"intervals", intervals}});
  }
  doc["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : family.covers) doc["covers"].push_back({lo, hi});
  out << doc.dump(2) << '\n';
}

}  // namespace ivcat
