#include "ivcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivcat/closure.hpp"
#include "ivcat/enumerator.hpp"
#include "ivcat/poset.hpp"
#include "ivcat/report.hpp"

namespace ivcat::cli {

namespace {

constexpr const char* kSequenceHelp = R"(Known sequences (n = 1..6):
  #(Q,S,E)  Serre                   2, 4, 8, 16, 32, 64            2^n
  #(C,K,E)  thick                   2, 5, 14, 42, 132, 429         Catalan(n+1)
  #(Q,E)    torsion classes         2, 5, 14, 42, 132, 429         Catalan(n+1)
  #(Q,S)    quotient and subobject  2, 5, 14, 42, 132, 429         Catalan(n+1)
  #(Q)      quotient closed         2, 6, 24, 120, 720, 5040       (n+1)!
  #(E)      extension closed        2, 7, 34, 199, 1308, 9300
  #(C,K)    exact abelian           2, 6, 22, 90, 394, 1806
  #(C)      finite colimit closed   2, 7, 37, 265, 2396, 26118
  #(none)   additive                2, 8, 64, 1024, 32768, 2097152 2^(n(n+1)/2)
Operations are letters from QSCKE (case-insensitive); "" or "none" is additive.
Exit codes: 0 ok, 1 --verify mismatch, 2 invalid input, 3 size cap exceeded.)";

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t count_with(const Ambient& ambient, ClosureSpec spec, Algorithm algorithm,
                         unsigned shards) {
  if (algorithm == Algorithm::Brute) return count_brute(ambient, spec);
  return shards > 1 ? shard_count(ambient, spec, shards) : count_next_closure(ambient, spec);
}

void verify_term(const Ambient& ambient, ClosureSpec spec, const BigInt& count) {
  if (ambient.universe_size() > static_cast<std::size_t>(kDefaultBruteBits)) return;
  const auto brute = count_brute(ambient, spec);
  if (BigInt(brute) != count) {
    throw VerifyFailure("verification failed for n = " + std::to_string(ambient.n()) + ", ops '" +
                        spec.to_string() + "': " + count.str() + " vs brute force " +
                        std::to_string(brute));
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count subcategories of multisets of intervals of type n closed under chosen operations",
               "ivcat"};
  app.footer(kSequenceHelp);
  app.require_subcommand(1);

  int n = 1;
  int n_max = 6;
  std::string ops;
  std::string algorithm_text = "next-closure";
  unsigned shards = 1;
  bool verify = false;
  bool compare = false;
  bool timing = false;
  std::string seq_format = "table";
  std::string list_format = "intervals";
  std::string lattice_format = "dot";
  std::string set_literal;
  std::string poset_file;
  std::string checks = "ideals,distributive,subfunctors,incidence,coherent,compact";
  int chain_n = 0;
  std::size_t cap = kDefaultLatticeCap;

  auto add_ops = [&](CLI::App* sub) {
    sub->add_option("--ops", ops, "Closure operations, letters from QSCKE; \"\" or none = additive")
        ->required();
  };

  auto* count = app.add_subcommand("count", "Count closed subcategories for one n");
  count->add_option("--n", n, "Number of vertices")->required();
  add_ops(count);
  count->add_option("--algorithm", algorithm_text, "brute | next-closure");
  count->add_option("--shards", shards, "Worker threads for next-closure");
  count->add_flag("--verify", verify, "Cross-check against brute force when under the bit cap");

  auto* seq = app.add_subcommand("sequence", "Counts for n = 1..n-max");
  add_ops(seq);
  seq->add_option("--n-max", n_max, "Last term")->required();
  seq->add_option("--format", seq_format, "table | csv | json | oeis")->capture_default_str();
  seq->add_option("--algorithm", algorithm_text, "brute | next-closure");
  seq->add_option("--shards", shards, "Worker threads for next-closure");
  seq->add_flag("--compare", compare, "Append closed-form reference values");
  seq->add_flag("--verify", verify, "Cross-check against brute force when under the bit cap");
  seq->add_flag("--timing", timing, "Report seconds per term");

  auto* list = app.add_subcommand("list", "List the closed sets in lectic order");
  list->add_option("--n", n, "Number of vertices")->required();
  add_ops(list);
  list->add_option("--format", list_format, "intervals | indices | bitmask | json")->capture_default_str();
  list->add_option("--cap", cap, "Maximum number of closed sets");

  auto* lat = app.add_subcommand("lattice", "Hasse diagram of the lattice of closed sets");
  lat->add_option("--n", n, "Number of vertices")->required();
  add_ops(lat);
  lat->add_option("--format", lattice_format, "dot | json")->capture_default_str();
  lat->add_option("--cap", cap, "Maximum number of closed sets");

  auto* check = app.add_subcommand("check", "Test whether a set of intervals is closed");
  check->add_option("--n", n, "Number of vertices")->required();
  add_ops(check);
  check->add_option("--set", set_literal, "Semicolon-separated intervals, e.g. \"1,1;2,2\"")->required();

  auto* pos = app.add_subcommand("poset", "Ideal lattice, subfunctor and coherence reports for a finite poset");
  pos->add_option("--file", poset_file, "Poset file ('elements: a b c' and 'x <= y' lines)");
  pos->add_option("--checks", checks,
                  "Comma list of ideals, distributive, subfunctors, incidence, coherent, compact");
  pos->add_option("--chain-check", chain_n, "Also check the chain example h_b/h_{a-1} = [a,b] up to n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  std::ostringstream buffer;
  try {
    if (shards == 0) throw ValidationError("--shards must be at least 1");
    const auto algorithm = parse_algorithm(algorithm_text);

    if (count->parsed()) {
      const Ambient ambient(n);
      const auto spec = ClosureSpec::parse(ops);
      const auto value = count_with(ambient, spec, algorithm, shards);
      if (verify) verify_term(ambient, spec, BigInt(value));
      buffer << value << '\n';
    } else if (seq->parsed()) {
      const auto spec = ClosureSpec::parse(ops);
      if (seq_format != "table" && seq_format != "csv" && seq_format != "json" && seq_format != "oeis") {
        throw ValidationError("unknown format '" + seq_format + "'");
      }
      if (n_max < 1) throw ValidationError("--n-max must be at least 1");
      // Reject caps before computing anything.
      if (n_max > kMaxSetN) (void)IntervalSet(Ambient(n_max));
      if (algorithm == Algorithm::Brute &&
          Ambient(n_max).universe_size() > static_cast<std::size_t>(kDefaultBruteBits)) {
        throw CapExceeded("brute force is limited to " + std::to_string(kDefaultBruteBits) + " bits");
      }
      const auto report = sequence(spec, n_max, algorithm, shards);
      if (verify) {
        for (const auto& t : report.terms) verify_term(Ambient(t.n), spec, t.count);
      }
      const ReportOptions options{compare, timing};
      if (seq_format == "csv") {
        write_csv(buffer, report, options);
      } else if (seq_format == "json") {
        write_json(buffer, report, options);
      } else if (seq_format == "oeis") {
        write_bfile(buffer, report);
      } else {
        write_table(buffer, report, options);
      }
    } else if (list->parsed()) {
      const Ambient ambient(n);
      const auto spec = ClosureSpec::parse(ops);
      if (list_format != "intervals" && list_format != "indices" && list_format != "bitmask" &&
          list_format != "json") {
        throw ValidationError("unknown format '" + list_format + "'");
      }
      const auto members = enumerate_closed(ambient, spec, cap);
      if (list_format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& s : members) doc.push_back(s.indices());
        buffer << doc.dump() << '\n';
      } else {
        for (const auto& s : members) {
          if (list_format == "indices") {
            buffer << s.to_index_list() << '\n';
          } else if (list_format == "bitmask") {
            buffer << s.to_bitmask() << '\n';
          } else {
            buffer << s.to_literal() << '\n';
          }
        }
      }
    } else if (lat->parsed()) {
      const Ambient ambient(n);
      const auto spec = ClosureSpec::parse(ops);
      if (lattice_format != "dot" && lattice_format != "json") {
        throw ValidationError("unknown format '" + lattice_format + "'");
      }
      const auto family = lattice(ambient, spec, cap);
      if (lattice_format == "dot") {
        write_lattice_dot(buffer, family);
      } else {
        write_lattice_json(buffer, family);
      }
    } else if (check->parsed()) {
      const Ambient ambient(n);
      const auto spec = ClosureSpec::parse(ops);
      const auto s = IntervalSet::parse_literal(ambient, set_literal);
      const RuleTable table(ambient, spec);
      if (table.is_closed(s)) {
        buffer << "closed\n";
      } else {
        buffer << "not closed\nmissing: " << (table.closure(s) - s).to_literal() << '\n';
      }
    } else if (pos->parsed()) {
      if (poset_file.empty() && chain_n == 0) {
        throw ValidationError("poset needs --file and/or --chain-check");
      }
      if (!poset_file.empty()) {
        std::ifstream in(poset_file);
        if (!in) throw ValidationError("cannot open '" + poset_file + "'");
        const auto p = poset::FinitePoset::parse(in);
        const auto selected = split_list(checks);
        static const std::vector<std::string> known{"ideals",    "distributive", "subfunctors",
                                                    "incidence", "coherent",     "compact"};
        for (const auto& c : selected) {
          if (std::find(known.begin(), known.end(), c) == known.end()) {
            throw ValidationError("unknown check '" + c + "'");
          }
        }
        auto wants = [&](const char* name) {
          return std::find(selected.begin(), selected.end(), name) != selected.end();
        };
        buffer << "elements=" << p.size() << '\n';
        if (wants("ideals") || wants("distributive")) {
          const auto lattice_of_ideals = poset::ideals(p);
          if (wants("ideals")) buffer << "ideals=" << lattice_of_ideals.size() << '\n';
          if (wants("distributive")) {
            buffer << "distributive=" << boolean(poset::is_distributive(lattice_of_ideals)) << '\n';
          }
        }
        if (wants("subfunctors")) {
          bool all_match = true;
          for (std::size_t x = 0; x < p.size(); ++x) {
            const auto subfunctors = poset::subfunctor_count(p, x);
            const auto below = poset::ideals(p.restrict_to(p.down(x))).size();
            all_match = all_match && subfunctors == below;
            buffer << "subfunctors[" << p.labels()[x] << "]=" << subfunctors
                   << " ideals_below=" << below << " match=" << boolean(subfunctors == below) << '\n';
          }
          buffer << "subfunctors_match=" << boolean(all_match) << '\n';
        }
        if (wants("incidence")) {
          const poset::IncidenceAlgebra algebra(p);
          buffer << "incidence_dimension=" << algebra.dimension() << '\n';
          buffer << "incidence_associative=" << boolean(algebra.is_associative()) << '\n';
          buffer << "incidence_identity=" << boolean(algebra.has_two_sided_identity()) << '\n';
        }
        if (wants("coherent")) buffer << "coherent=" << boolean(poset::coherent_check(p)) << '\n';
        if (wants("compact")) buffer << "compact_meets=" << boolean(poset::compact_meet_check(p)) << '\n';
      }
      if (chain_n > 0) {
        for (int k = 1; k <= chain_n; ++k) {
          buffer << "chain_equivalence[" << k << "]=" << boolean(poset::chain_equivalence_check(k)) << '\n';
        }
      }
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const VerifyFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace ivcat::cli
