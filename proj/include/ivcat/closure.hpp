#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ivcat/interval.hpp"

namespace ivcat {

/// One of the five closure operations.
enum class Op : std::uint8_t {
  Quotients = 1U << 0,   // Q
  Subobjects = 1U << 1,  // S
  Cokernels = 1U << 2,   // C
  Kernels = 1U << 3,     // K
  Extensions = 1U << 4,  // E
};

char op_letter(Op op) noexcept;

/// A subset of {Q,S,C,K,E}.  The empty spec selects plain additive subcategories.
class ClosureSpec {
 public:
  constexpr ClosureSpec() = default;
  constexpr explicit ClosureSpec(std::uint8_t bits) : bits_(bits & 0x1FU) {}

  /// Case-insensitive, order-insensitive letters; "" and "none" are the empty spec.
  static ClosureSpec parse(std::string_view text);
  /// All 32 specs, by bit pattern.
  static std::vector<ClosureSpec> all();

  constexpr bool has(Op op) const noexcept { return (bits_ & static_cast<std::uint8_t>(op)) != 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  ClosureSpec with(Op op) const noexcept {
    return ClosureSpec(static_cast<std::uint8_t>(bits_ | static_cast<std::uint8_t>(op)));
  }

  /// Q <-> S and C <-> K; E is fixed.
  ClosureSpec dual() const noexcept;

  /// Letters in the order QSCKE; "" for the empty spec.
  std::string to_string() const;
  /// "#(Q,S,E)"-style name; "#(∅)" for the empty spec.
  std::string sequence_name() const;

  friend constexpr bool operator==(ClosureSpec, ClosureSpec) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Horn clause: premises present => conclusions present.  Conclusions never
/// overlap the premises; zero objects are dropped.
struct RuleInstance {
  Mask premises = 0;
  Mask conclusions = 0;
  Op tag = Op::Quotients;

  friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

/// Every rule instance for (n, spec), indexed by premise for saturation.
class RuleTable {
 public:
  RuleTable(Ambient ambient, ClosureSpec spec);

  const Ambient& ambient() const noexcept { return ambient_; }
  ClosureSpec spec() const noexcept { return spec_; }
  const std::vector<RuleInstance>& rules() const noexcept { return rules_; }

  /// Least closed superset of s (worklist saturation in canonical index order).
  Mask close(Mask s) const noexcept;
  bool is_closed(Mask s) const noexcept;

  IntervalSet closure(const IntervalSet& s) const;
  bool is_closed(const IntervalSet& s) const;

 private:
  void add(Mask premises, const Barcode& conclusions, Op tag);
  void check_ambient(const IntervalSet& s) const;

  Ambient ambient_;
  ClosureSpec spec_;
  std::vector<RuleInstance> rules_;
  // Only populated during construction, for deduplication.
  std::set<std::tuple<Mask, Mask, std::uint8_t>> seen_;
  // Rule ids mentioning each interval as a premise.
  std::vector<std::vector<std::uint32_t>> by_premise_;
  // Rule ids whose lowest premise index is the given interval.
  std::vector<std::vector<std::uint32_t>> by_lowest_premise_;
};

/// Rule instances for (n, spec), deduplicated, in generation order.
std::vector<RuleInstance> rules(const Ambient& ambient, ClosureSpec spec);

bool is_closed(const IntervalSet& s, ClosureSpec spec);
IntervalSet closure(const IntervalSet& s, ClosureSpec spec);

}  // namespace ivcat
