#include "ivcat/closure.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <tuple>

namespace ivcat {

namespace {

constexpr Op kOps[] = {Op::Quotients, Op::Subobjects, Op::Cokernels, Op::Kernels, Op::Extensions};

Mask bit(const Interval& x) { return Mask{1} << x.index(); }

}  // namespace

char op_letter(Op op) noexcept {
  switch (op) {
    case Op::Quotients: return 'Q';
    case Op::Subobjects: return 'S';
    case Op::Cokernels: return 'C';
    case Op::Kernels: return 'K';
    case Op::Extensions: return 'E';
  }
  return '?';
}

ClosureSpec ClosureSpec::parse(std::string_view text) {
  std::string lowered;
  for (char c : text) {
    if (c != ' ' && c != ',') lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (lowered.empty() || lowered == "none") return ClosureSpec();
  std::uint8_t bits = 0;
  for (char c : lowered) {
    const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    bool found = false;
    for (Op op : kOps) {
      if (op_letter(op) == upper) {
        bits |= static_cast<std::uint8_t>(op);
        found = true;
      }
    }
    if (!found) {
      throw ValidationError("unknown operation '" + std::string(1, c) + "' in '" +
                            std::string(text) + "'; allowed letters are Q, S, C, K, E (or 'none')");
    }
  }
  return ClosureSpec(bits);
}

std::vector<ClosureSpec> ClosureSpec::all() {
  std::vector<ClosureSpec> out;
  for (std::uint8_t b = 0; b < 32; ++b) out.emplace_back(b);
  return out;
}

ClosureSpec ClosureSpec::dual() const noexcept {
  ClosureSpec out(static_cast<std::uint8_t>(bits_ & static_cast<std::uint8_t>(Op::Extensions)));
  if (has(Op::Quotients)) out = out.with(Op::Subobjects);
  if (has(Op::Subobjects)) out = out.with(Op::Quotients);
  if (has(Op::Cokernels)) out = out.with(Op::Kernels);
  if (has(Op::Kernels)) out = out.with(Op::Cokernels);
  return out;
}

std::string ClosureSpec::to_string() const {
  std::string out;
  for (Op op : kOps) {
    if (has(op)) out += op_letter(op);
  }
  return out;
}

std::string ClosureSpec::sequence_name() const {
  if (empty()) return "#(∅)";
  std::string out = "#(";
  for (char c : to_string()) {
    if (out.size() > 2) out += ',';
    out += c;
  }
  return out + ')';
}

// --- RuleTable -----------------------------------------------------------------

RuleTable::RuleTable(Ambient ambient, ClosureSpec spec) : ambient_(ambient), spec_(spec) {
  // Validates n against the mask width.
  (void)IntervalSet(ambient);
  const auto xs = all_intervals(ambient);

  if (spec.has(Op::Quotients)) {
    for (const auto& x : xs) add(bit(x), quotients(x), Op::Quotients);
  }
  if (spec.has(Op::Subobjects)) {
    for (const auto& x : xs) add(bit(x), subobjects(x), Op::Subobjects);
  }
  if (spec.has(Op::Extensions)) {
    for (const auto& x : xs) {
      for (const auto& xprime : xs) {
        auto middle = ext_middle(xprime, x);
        if (!middle) continue;
        Barcode out{middle->first};
        if (middle->second) out.push_back(*middle->second);
        add(bit(x) | bit(xprime), out, Op::Extensions);
      }
    }
  }
  if (spec.has(Op::Cokernels)) {
    for (const auto& x : xs) {
      std::vector<Interval> targets;
      for (const auto& y : xs) {
        if (hom_dim(x, y) == 1) targets.push_back(y);
      }
      for (std::size_t i = 0; i < targets.size(); ++i) {
        add(bit(x) | bit(targets[i]), cokernel_single(x, targets[i]), Op::Cokernels);
        for (std::size_t j = i; j < targets.size(); ++j) {
          add(bit(x) | bit(targets[i]) | bit(targets[j]), cokernel_pair(x, targets[i], targets[j]),
              Op::Cokernels);
        }
      }
    }
  }
  if (spec.has(Op::Kernels)) {
    for (const auto& x : xs) {
      std::vector<Interval> sources;
      for (const auto& y : xs) {
        if (hom_dim(y, x) == 1) sources.push_back(y);
      }
      for (std::size_t i = 0; i < sources.size(); ++i) {
        add(bit(x) | bit(sources[i]), kernel_single(sources[i], x), Op::Kernels);
        for (std::size_t j = i; j < sources.size(); ++j) {
          add(bit(x) | bit(sources[i]) | bit(sources[j]), kernel_pair(sources[i], sources[j], x),
              Op::Kernels);
        }
      }
    }
  }

  seen_.clear();
  by_premise_.resize(ambient.universe_size());
  by_lowest_premise_.resize(ambient.universe_size());
  for (std::uint32_t id = 0; id < rules_.size(); ++id) {
    const Mask p = rules_[id].premises;
    by_lowest_premise_[static_cast<std::size_t>(std::countr_zero(p))].push_back(id);
    for (Mask m = p; m != 0; m &= m - 1) {
      by_premise_[static_cast<std::size_t>(std::countr_zero(m))].push_back(id);
    }
  }
}

void RuleTable::add(Mask premises, const Barcode& conclusions, Op tag) {
  Mask out = 0;
  for (const auto& y : conclusions) out |= bit(y);
  out &= ~premises;
  if (out == 0) return;
  if (seen_.emplace(premises, out, static_cast<std::uint8_t>(tag)).second) {
    rules_.push_back(RuleInstance{premises, out, tag});
  }
}

Mask RuleTable::close(Mask s) const noexcept {
  Mask result = s;
  Mask dirty = s;
  while (dirty != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(dirty));
    dirty &= dirty - 1;
    for (auto id : by_premise_[i]) {
      const auto& r = rules_[id];
      if ((r.premises & ~result) != 0) continue;
      const Mask fresh = r.conclusions & ~result;
      result |= fresh;
      dirty |= fresh;
    }
  }
  return result;
}

bool RuleTable::is_closed(Mask s) const noexcept {
  for (Mask m = s; m != 0; m &= m - 1) {
    for (auto id : by_lowest_premise_[static_cast<std::size_t>(std::countr_zero(m))]) {
      const auto& r = rules_[id];
      if ((r.premises & ~s) == 0 && (r.conclusions & ~s) != 0) return false;
    }
  }
  return true;
}

void RuleTable::check_ambient(const IntervalSet& s) const {
  if (!(s.ambient() == ambient_)) {
    throw ValidationError("interval set has n = " + std::to_string(s.ambient().n()) +
                          " but the rule table was built for n = " + std::to_string(ambient_.n()));
  }
}

IntervalSet RuleTable::closure(const IntervalSet& s) const {
  check_ambient(s);
  return IntervalSet(ambient_, close(s.mask()));
}

bool RuleTable::is_closed(const IntervalSet& s) const {
  check_ambient(s);
  return is_closed(s.mask());
}

std::vector<RuleInstance> rules(const Ambient& ambient, ClosureSpec spec) {
  return RuleTable(ambient, spec).rules();
}

bool is_closed(const IntervalSet& s, ClosureSpec spec) {
  return RuleTable(s.ambient(), spec).is_closed(s);
}

IntervalSet closure(const IntervalSet& s, ClosureSpec spec) {
  return RuleTable(s.ambient(), spec).closure(s);
}

}  // namespace ivcat
