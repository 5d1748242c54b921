#include "ivcat/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>
#include <unordered_map>

namespace ivcat {

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::Brute ? "brute" : "next_closure";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "brute") return Algorithm::Brute;
  if (text == "next_closure" || text == "next-closure" || text == "nc") return Algorithm::NextClosure;
  throw ValidationError("unknown algorithm '" + std::string(text) +
                        "'; expected 'brute' or 'next-closure'");
}

std::uint64_t count_brute(const Ambient& ambient, ClosureSpec spec, int bit_cap) {
  const auto m = ambient.universe_size();
  if (m > static_cast<std::size_t>(bit_cap)) {
    throw CapExceeded("brute force needs 2^" + std::to_string(m) + " subsets; cap is 2^" +
                      std::to_string(bit_cap));
  }
  const RuleTable table(ambient, spec);
  std::uint64_t count = 0;
  const Mask end = Mask{1} << m;
  for (Mask s = 0; s < end; ++s) {
    if (table.is_closed(s)) ++count;
  }
  return count;
}

namespace {

Mask low_bits(std::size_t k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

// Next-Closure from `start`, only ever adding positions >= lo, so the prefix
// below lo stays fixed.  Returns after the last closed set with that prefix.
template <typename Visit>
void next_closure_block(const RuleTable& table, Mask start, std::size_t lo, Visit&& visit) {
  const std::size_t m = table.ambient().universe_size();
  Mask current = start;
  visit(current);
  for (;;) {
    bool advanced = false;
    for (std::size_t i = m; i-- > lo;) {
      const Mask b = Mask{1} << i;
      if (current & b) continue;
      const Mask prefix = current & (b - 1);
      const Mask candidate = table.close(prefix | b);
      if ((candidate & (b - 1)) == prefix) {
        current = candidate;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
    visit(current);
  }
}

// Reverses the low k bits, so that numeric order matches lectic order
// (lowest index most significant).
Mask lectic_key(Mask prefix, std::size_t k) {
  Mask out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((prefix >> i) & 1U) out |= Mask{1} << (k - 1 - i);
  }
  return out;
}

struct Block {
  Mask start;
};

// Blocks of the lectic sequence sharing the same first `depth` bits.  A prefix P
// occurs iff close(P) agrees with P below depth; close(P) is then the
// lectically first closed set in its block.
std::vector<Block> prefix_blocks(const RuleTable& table, std::size_t depth) {
  std::vector<std::pair<Mask, Mask>> keyed;
  const Mask lowmask = low_bits(depth);
  for (Mask p = 0; p < (Mask{1} << depth); ++p) {
    const Mask c = table.close(p);
    if ((c & lowmask) == p) keyed.emplace_back(lectic_key(p, depth), c);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Block> out;
  for (const auto& [key, start] : keyed) out.push_back({start});
  return out;
}

std::size_t shard_depth(std::size_t m, unsigned shards) {
  if (shards <= 1) return 0;
  std::size_t depth = static_cast<std::size_t>(std::bit_width(shards - 1U)) + 3;
  return std::min(depth, std::min<std::size_t>(m, 20));
}

template <typename PerShard>
void run_shards(const RuleTable& table, unsigned shards, PerShard&& per_shard) {
  const std::size_t depth = shard_depth(table.ambient().universe_size(), shards);
  const auto blocks = prefix_blocks(table, depth);
  std::vector<std::thread> workers;
  for (unsigned k = 0; k < shards; ++k) {
    const std::size_t begin = blocks.size() * k / shards;
    const std::size_t end = blocks.size() * (k + 1) / shards;
    workers.emplace_back([&, k, begin, end] {
      for (std::size_t b = begin; b < end; ++b) per_shard(k, blocks[b].start, depth);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

void for_each_closed(const RuleTable& table, const std::function<void(Mask)>& visit) {
  next_closure_block(table, table.close(0), 0, visit);
}

std::uint64_t count_next_closure(const RuleTable& table) {
  std::uint64_t count = 0;
  next_closure_block(table, table.close(0), 0, [&](Mask) { ++count; });
  return count;
}

std::uint64_t count_next_closure(const Ambient& ambient, ClosureSpec spec) {
  return count_next_closure(RuleTable(ambient, spec));
}

std::vector<IntervalSet> enumerate_closed(const Ambient& ambient, ClosureSpec spec, std::size_t cap) {
  const RuleTable table(ambient, spec);
  std::vector<IntervalSet> out;
  next_closure_block(table, table.close(0), 0, [&](Mask s) {
    if (out.size() >= cap) {
      throw CapExceeded("more than " + std::to_string(cap) + " closed sets for n = " +
                        std::to_string(ambient.n()) + ", spec '" + spec.to_string() + "'");
    }
    out.emplace_back(ambient, s);
  });
  return out;
}

std::uint64_t shard_count(const Ambient& ambient, ClosureSpec spec, unsigned shards) {
  if (shards == 0) throw ValidationError("shard count must be at least 1");
  const RuleTable table(ambient, spec);
  std::vector<std::uint64_t> partial(shards, 0);
  run_shards(table, shards, [&](unsigned k, Mask start, std::size_t depth) {
    next_closure_block(table, start, depth, [&](Mask) { ++partial[k]; });
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::vector<std::vector<Mask>> shard_enumerate(const Ambient& ambient, ClosureSpec spec,
                                               unsigned shards) {
  if (shards == 0) throw ValidationError("shard count must be at least 1");
  const RuleTable table(ambient, spec);
  std::vector<std::vector<Mask>> out(shards);
  run_shards(table, shards, [&](unsigned k, Mask start, std::size_t depth) {
    next_closure_block(table, start, depth, [&](Mask s) { out[k].push_back(s); });
  });
  return out;
}

SequenceReport sequence(ClosureSpec spec, int n_max, Algorithm algorithm, unsigned shards) {
  if (n_max < 1) throw ValidationError("n-max must be at least 1");
  SequenceReport report{spec, algorithm, {}};
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const Ambient ambient(n);
    std::uint64_t count = 0;
    if (algorithm == Algorithm::Brute) {
      count = count_brute(ambient, spec);
    } else if (shards > 1) {
      count = shard_count(ambient, spec, shards);
    } else {
      count = count_next_closure(ambient, spec);
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    report.terms.push_back({n, BigInt(count), dt.count()});
  }
  return report;
}

std::optional<BigInt> reference_sequence(ClosureSpec spec, int n) {
  if (n < 1) return std::nullopt;
  // Every cokernel is a quotient and every kernel a subobject.
  std::uint8_t bits = spec.bits();
  if (spec.has(Op::Quotients)) bits &= static_cast<std::uint8_t>(~static_cast<std::uint8_t>(Op::Cokernels));
  if (spec.has(Op::Subobjects)) bits &= static_cast<std::uint8_t>(~static_cast<std::uint8_t>(Op::Kernels));
  const std::string key = ClosureSpec(bits).to_string();

  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  if (key == "QSE") return BigInt(1) << n;
  if (key == "CKE" || key == "QE" || key == "SE" || key == "QS") {
    // (n+1)-th Catalan number: binom(2n+2, n+1) / (n+2).
    return factorial(2 * n + 2) / (factorial(n + 1) * factorial(n + 1)) / (n + 2);
  }
  if (key == "Q" || key == "S") return factorial(n + 1);
  if (key.empty()) return BigInt(1) << (n * (n + 1) / 2);
  return std::nullopt;
}

ClosedFamily lattice(const Ambient& ambient, ClosureSpec spec, std::size_t cap) {
  const RuleTable table(ambient, spec);
  ClosedFamily family{ambient, spec, {}, {}};
  std::vector<Mask> masks;
  next_closure_block(table, table.close(0), 0, [&](Mask s) {
    if (masks.size() >= cap) {
      throw CapExceeded("lattice has more than " + std::to_string(cap) + " members");
    }
    masks.push_back(s);
  });
  std::unordered_map<Mask, std::size_t> position;
  for (std::size_t i = 0; i < masks.size(); ++i) position.emplace(masks[i], i);

  // Upper covers of A are the minimal sets among close(A + x), x not in A.
  const Mask universe = IntervalSet::universe_mask(ambient);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const Mask a = masks[i];
    std::vector<Mask> candidates;
    for (Mask rest = universe & ~a; rest != 0; rest &= rest - 1) {
      candidates.push_back(table.close(a | (rest & (~rest + 1))));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (Mask c : candidates) {
      const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](Mask d) {
        return d != c && (d & ~c) == 0;
      });
      if (minimal) family.covers.emplace_back(i, position.at(c));
    }
  }
  std::sort(family.covers.begin(), family.covers.end());
  for (Mask s : masks) family.members.emplace_back(ambient, s);
  return family;
}

}  // namespace ivcat
