#include "ivcat/interval.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace ivcat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("expected an integer in '" + std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::string Interval::bad_message(int a, int b) {
  return "invalid interval [" + std::to_string(a) + "," + std::to_string(b) +
         "]: need 1 <= a <= b";
}

Interval Interval::from_index(std::size_t index) {
  // b is the unique value with b(b-1)/2 <= index < b(b+1)/2.
  std::size_t b = 1;
  while (b * (b + 1) / 2 <= index) ++b;
  const std::size_t a = index - b * (b - 1) / 2 + 1;
  return Interval(static_cast<int>(a), static_cast<int>(b));
}

Interval Interval::parse(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 2) {
    throw ValidationError("expected an interval 'a,b', got '" + std::string(text) + "'");
  }
  return Interval(parse_int(parts[0], text), parse_int(parts[1], text));
}

std::string Interval::to_string() const {
  return std::to_string(a_) + "," + std::to_string(b_);
}

Ambient::Ambient(int n) : n_(n) {
  if (n < 1) throw ValidationError("n must be at least 1, got " + std::to_string(n));
}

void Ambient::require(const Interval& x) const {
  if (!contains(x)) {
    throw ValidationError("interval [" + x.to_string() + "] exceeds n = " + std::to_string(n_));
  }
}

Barcode make_barcode(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end());
  return intervals;
}

std::string to_string(const Barcode& barcode) {
  std::string out = "{";
  for (std::size_t i = 0; i < barcode.size(); ++i) {
    if (i) out += ' ';
    out += '[' + barcode[i].to_string() + ']';
  }
  return out + '}';
}

bool compose_nonzero(const Interval& x, const Interval& y, const Interval& z) {
  if (hom_dim(x, y) == 0 || hom_dim(y, z) == 0) {
    throw ValidationError("compose_nonzero needs nonzero maps [" + x.to_string() + "]->[" +
                          y.to_string() + "]->[" + z.to_string() + "]");
  }
  // a <= c <= e <= b <= d <= f; the outer links already hold.
  return z.a() <= x.b();
}

std::optional<Interval> image(const Interval& x, const Interval& y) {
  if (hom_dim(x, y) == 0) return std::nullopt;
  return Interval(y.a(), x.b());
}

std::vector<Interval> quotients(const Interval& x) {
  std::vector<Interval> out;
  for (int c = x.a(); c <= x.b(); ++c) out.emplace_back(c, x.b());
  return make_barcode(std::move(out));
}

std::vector<Interval> subobjects(const Interval& x) {
  std::vector<Interval> out;
  for (int b = x.a(); b <= x.b(); ++b) out.emplace_back(x.a(), b);
  return out;
}

std::optional<std::pair<Interval, std::optional<Interval>>> ext_middle(const Interval& xprime,
                                                                       const Interval& x) {
  // Nonsplit only for strict a < a' and b < b'; on the boundary the sequence
  // degenerates to x (+) x'.
  if (!(x.a() < xprime.a() && x.b() < xprime.b() && xprime.a() <= x.b() + 1)) {
    return std::nullopt;
  }
  const Interval y(x.a(), xprime.b());
  std::optional<Interval> yprime;
  if (xprime.a() <= x.b()) yprime.emplace(xprime.a(), x.b());
  return std::pair{y, yprime};
}

Barcode cokernel_single(const Interval& x, const Interval& y) {
  if (hom_dim(x, y) == 0) {
    throw ValidationError("no nonzero map [" + x.to_string() + "]->[" + y.to_string() + "]");
  }
  if (x.b() + 1 > y.b()) return {};
  return {Interval(x.b() + 1, y.b())};
}

Barcode cokernel_pair(const Interval& x, const Interval& y1, const Interval& y2) {
  if (hom_dim(x, y1) == 0 || hom_dim(x, y2) == 0) {
    throw ValidationError("cokernel_pair needs nonzero maps from [" + x.to_string() + "]");
  }
  Barcode out;
  const int low_end = std::min(y1.b(), y2.b());
  if (x.b() + 1 <= low_end) out.emplace_back(x.b() + 1, low_end);
  out.emplace_back(std::max(y1.a(), y2.a()), std::max(y1.b(), y2.b()));
  return make_barcode(std::move(out));
}

namespace {

// Smallest ambient in which all arguments live; duality is then taken there.
// The kernel formulas do not depend on the choice.
Ambient common_ambient(std::initializer_list<Interval> xs) {
  int n = 1;
  for (const auto& x : xs) n = std::max(n, x.b());
  return Ambient(n);
}

}  // namespace

Barcode kernel_single(const Interval& y, const Interval& x) {
  if (hom_dim(y, x) == 0) {
    throw ValidationError("no nonzero map [" + y.to_string() + "]->[" + x.to_string() + "]");
  }
  const Ambient amb = common_ambient({y, x});
  return dual(cokernel_single(dual(x, amb), dual(y, amb)), amb);
}

Barcode kernel_pair(const Interval& y1, const Interval& y2, const Interval& x) {
  if (hom_dim(y1, x) == 0 || hom_dim(y2, x) == 0) {
    throw ValidationError("kernel_pair needs nonzero maps into [" + x.to_string() + "]");
  }
  const Ambient amb = common_ambient({y1, y2, x});
  return dual(cokernel_pair(dual(x, amb), dual(y1, amb), dual(y2, amb)), amb);
}

Interval dual(const Interval& x, const Ambient& ambient) {
  ambient.require(x);
  return Interval(ambient.n() + 1 - x.b(), ambient.n() + 1 - x.a());
}

Barcode dual(const Barcode& barcode, const Ambient& ambient) {
  Barcode out;
  out.reserve(barcode.size());
  for (const auto& x : barcode) out.push_back(dual(x, ambient));
  return make_barcode(std::move(out));
}

int comp_length(const Barcode& barcode) noexcept {
  int total = 0;
  for (const auto& x : barcode) total += comp_length(x);
  return total;
}

std::vector<Interval> all_intervals(const Ambient& ambient) {
  std::vector<Interval> out;
  out.reserve(ambient.universe_size());
  for (int b = 1; b <= ambient.n(); ++b) {
    for (int a = 1; a <= b; ++a) out.emplace_back(a, b);
  }
  return out;
}

// --- IntervalSet ---------------------------------------------------------------

IntervalSet::IntervalSet(Ambient ambient, Mask mask) : ambient_(ambient), mask_(mask) {
  if (ambient.n() > kMaxSetN) {
    throw CapExceeded("interval sets support n <= " + std::to_string(kMaxSetN) + ", got n = " +
                      std::to_string(ambient.n()));
  }
  if ((mask & ~universe_mask(ambient)) != 0) {
    throw ValidationError("mask has bits outside the interval universe of n = " +
                          std::to_string(ambient.n()));
  }
}

IntervalSet::IntervalSet(Ambient ambient, const std::vector<Interval>& members)
    : IntervalSet(ambient) {
  for (const auto& x : members) insert(x);
}

IntervalSet IntervalSet::full(Ambient ambient) {
  return IntervalSet(ambient, universe_mask(ambient));
}

Mask IntervalSet::universe_mask(const Ambient& ambient) {
  const auto m = ambient.universe_size();
  return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}

bool IntervalSet::contains(const Interval& x) const noexcept {
  return ambient_.contains(x) && ((mask_ >> x.index()) & 1U) != 0;
}

bool IntervalSet::contains_all(const Barcode& xs) const noexcept {
  return std::all_of(xs.begin(), xs.end(), [this](const Interval& x) { return contains(x); });
}

void IntervalSet::insert(const Interval& x) {
  ambient_.require(x);
  mask_ |= Mask{1} << x.index();
}

void IntervalSet::erase(const Interval& x) {
  ambient_.require(x);
  mask_ &= ~(Mask{1} << x.index());
}

std::size_t IntervalSet::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<Interval> IntervalSet::members() const {
  std::vector<Interval> out;
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(Interval::from_index(static_cast<std::size_t>(std::countr_zero(m))));
  }
  return out;
}

std::vector<std::size_t> IntervalSet::indices() const {
  std::vector<std::size_t> out;
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const noexcept {
  return (mask_ & ~other.mask_) == 0;
}

IntervalSet IntervalSet::operator&(const IntervalSet& other) const {
  return IntervalSet(ambient_, mask_ & other.mask_);
}

IntervalSet IntervalSet::operator|(const IntervalSet& other) const {
  return IntervalSet(ambient_, mask_ | other.mask_);
}

IntervalSet IntervalSet::operator-(const IntervalSet& other) const {
  return IntervalSet(ambient_, mask_ & ~other.mask_);
}

IntervalSet IntervalSet::dual() const {
  IntervalSet out(ambient_);
  for (const auto& x : members()) out.insert(ivcat::dual(x, ambient_));
  return out;
}

std::string IntervalSet::to_index_list() const {
  std::string out;
  for (auto i : indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

IntervalSet IntervalSet::from_index_list(Ambient ambient, std::string_view text) {
  IntervalSet out(ambient);
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) {
    const int i = parse_int(part, text);
    if (i < 0 || static_cast<std::size_t>(i) >= ambient.universe_size()) {
      throw ValidationError("interval index " + std::to_string(i) + " out of range for n = " +
                            std::to_string(ambient.n()));
    }
    out.mask_ |= Mask{1} << i;
  }
  return out;
}

std::string IntervalSet::to_bitmask() const {
  std::string out(ambient_.universe_size(), '0');
  for (auto i : indices()) out[i] = '1';
  return out;
}

IntervalSet IntervalSet::from_bitmask(Ambient ambient, std::string_view bits) {
  IntervalSet out(ambient);
  if (bits.size() != ambient.universe_size()) {
    throw ValidationError("bitmask length " + std::to_string(bits.size()) + " != " +
                          std::to_string(ambient.universe_size()));
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.mask_ |= Mask{1} << i;
    } else if (bits[i] != '0') {
      throw ValidationError("bitmask may only contain '0' and '1'");
    }
  }
  return out;
}

std::string IntervalSet::to_literal() const {
  std::string out;
  for (const auto& x : members()) {
    if (!out.empty()) out += ';';
    out += x.to_string();
  }
  return out;
}

IntervalSet IntervalSet::parse_literal(Ambient ambient, std::string_view text) {
  IntervalSet out(ambient);
  if (trim(text).empty()) return out;
  for (auto part : split(text, ';')) {
    if (trim(part).empty()) continue;
    out.insert(Interval::parse(part));
  }
  return out;
}

}  // namespace ivcat
