#pragma once

// Counting and listing closed interval sets.
//
// Two counting routes are kept side by side: a full sweep over all subsets
// (the oracle, bounded by a bit cap) and Ganter's Next-Closure, which visits
// only the closed sets, in lectic order of the canonical interval index.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivcat/closure.hpp"
#include "ivcat/interval.hpp"

namespace ivcat {

using BigInt = boost::multiprecision::cpp_int;

enum class Algorithm { Brute, NextClosure };

std::string to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

inline constexpr int kDefaultBruteBits = 24;
inline constexpr std::size_t kDefaultLatticeCap = 200000;

/// Sweeps all 2^(n(n+1)/2) subsets.  Throws CapExceeded above bit_cap bits.
std::uint64_t count_brute(const Ambient& ambient, ClosureSpec spec, int bit_cap = kDefaultBruteBits);

/// Calls visit on every closed set, in lectic order.
void for_each_closed(const RuleTable& table, const std::function<void(Mask)>& visit);

std::uint64_t count_next_closure(const Ambient& ambient, ClosureSpec spec);
std::uint64_t count_next_closure(const RuleTable& table);

/// Closed sets in lectic order.  Throws CapExceeded past cap members.
std::vector<IntervalSet> enumerate_closed(const Ambient& ambient, ClosureSpec spec,
                                          std::size_t cap = kDefaultLatticeCap);

/// Next-Closure split into blocks sharing a fixed prefix of the index order,
/// handed out contiguously to `shards` worker threads.
std::uint64_t shard_count(const Ambient& ambient, ClosureSpec spec, unsigned shards);
/// Per-shard enumerations; concatenated in shard order they equal the
/// single-threaded lectic sequence.
std::vector<std::vector<Mask>> shard_enumerate(const Ambient& ambient, ClosureSpec spec,
                                               unsigned shards);

struct SequenceTerm {
  int n = 0;
  BigInt count;
  double seconds = 0.0;
};

struct SequenceReport {
  ClosureSpec spec;
  Algorithm algorithm = Algorithm::NextClosure;
  std::vector<SequenceTerm> terms;
};

SequenceReport sequence(ClosureSpec spec, int n_max, Algorithm algorithm, unsigned shards = 1);

/// Closed-form count where one is known: 2^n (Serre), the (n+1)-th Catalan
/// number (thick, torsion, quotient-and-subobject), (n+1)! (quotient closed),
/// 2^(n(n+1)/2) (additive).  Duals are included; Q subsumes C and S subsumes K.
std::optional<BigInt> reference_sequence(ClosureSpec spec, int n);

struct ClosedFamily {
  Ambient ambient;
  ClosureSpec spec;
  std::vector<IntervalSet> members;                     // lectic order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
};

/// All closed sets with the Hasse diagram of inclusion.
ClosedFamily lattice(const Ambient& ambient, ClosureSpec spec, std::size_t cap = kDefaultLatticeCap);

}  // namespace ivcat
