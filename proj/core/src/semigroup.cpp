#include "semichomp/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace semichomp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidPosition: return "invalid-position";
    case ErrorKind::kIllegalMove: return "illegal-move";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kTableTooLarge: return "table-too-large";
    case ErrorKind::kOutOfWindow: return "out-of-window";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kMemoOverflow: return "memo-overflow";
    case ErrorKind::kBudgetExhausted: return "budget-exhausted";
    case ErrorKind::kNoStrategy: return "no-strategy";
    case ErrorKind::kUndefinedBound: return "undefined-bound";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> generators)
    : NumericalSemigroup(std::span<const Int>(generators.begin(), generators.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> generators) {
  if (generators.empty()) fail(ErrorKind::kInvalidInput, "generator list is empty");
  Int d = 0;
  for (Int v : generators) {
    if (v <= 0) fail(ErrorKind::kInvalidInput, "generators must be positive, got " + std::to_string(v));
    d = std::gcd(d, v);
  }
  generators_.reserve(generators.size());
  for (Int v : generators) generators_.push_back(v / d);
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

  const Int m = generators_.front();
  const Int top = generators_.back();

  // Grow the membership table until m consecutive members appear; everything
  // after such a run is in S, so the last non-member before it is g(S).
  std::vector<bool> member{true};
  Int run = 0;
  Int x = 0;
  while (run < m) {
    x = checked_add(x, 1);
    bool in = false;
    for (Int a : generators_) {
      if (a > x) break;
      if (member[static_cast<std::size_t>(x - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  // The element before the run is a gap, except for m == 1 where it is 0.
  frobenius_ = m == 1 ? -1 : x - m;

  const Int table_end = checked_add(std::max<Int>(frobenius_, 0), top);
  membership_.assign(static_cast<std::size_t>(table_end) + 1, true);
  for (Int v = 0; v <= frobenius_; ++v) {
    membership_[static_cast<std::size_t>(v)] = member[static_cast<std::size_t>(v)];
    if (!member[static_cast<std::size_t>(v)]) gaps_.push_back(v);
  }

  // a is a minimal generator iff it is not a sum of two nonzero elements.
  for (Int a : generators_) {
    bool decomposable = false;
    for (Int s = 1; s < a && !decomposable; ++s) decomposable = contains(s) && contains(a - s);
    if (!decomposable) minimal_generators_.push_back(a);
  }
}

std::vector<Int> NumericalSemigroup::elements_between(Int lo, Int hi) const {
  std::vector<Int> out;
  for (Int v = std::max<Int>(lo, 0); v <= hi; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < minimal_generators_.size(); ++i) {
    if (i) os << ',';
    os << minimal_generators_[i];
  }
  os << '>';
  return os.str();
}

bool AperySet::contains(Int v) const { return std::binary_search(elements.begin(), elements.end(), v); }

AperySet apery(const NumericalSemigroup& s, Int a) {
  if (a <= 0 || !s.contains(a))
    fail(ErrorKind::kInvalidArgument, "Apery base " + std::to_string(a) + " is not a nonzero element of " + s.to_string());
  AperySet ap;
  ap.base = a;
  // The least element of S in each residue class modulo a.
  std::vector<Int> least(static_cast<std::size_t>(a), -1);
  Int found = 0;
  for (Int v = 0; found < a; ++v) {
    if (!s.contains(v)) continue;
    auto& slot = least[static_cast<std::size_t>(v % a)];
    if (slot < 0) {
      slot = v;
      ++found;
    }
  }
  ap.elements = least;
  std::sort(ap.elements.begin(), ap.elements.end());

  const std::size_t n = ap.elements.size();
  ap.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) ap.below[i][j] = s.leq(ap.elements[i], ap.elements[j]);
  for (std::size_t i = 0; i < n; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < n && maximal; ++j) maximal = !ap.below[i][j];
    if (maximal) ap.maximal_elements.push_back(ap.elements[i]);
  }
  return ap;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_naturals()) return {-1};
  const Int m = s.multiplicity();
  std::vector<Int> pf;
  for (Int w : apery(s, m).maximal_elements) pf.push_back(w - m);
  return pf;
}

std::size_t type(const NumericalSemigroup& s) { return pseudo_frobenius(s).size(); }

bool is_symmetric(const NumericalSemigroup& s) {
  const bool by_type = type(s) == 1;
  const Int g = s.frobenius();
  bool by_definition = true;
  for (Int x = 0; x <= g && by_definition; ++x) by_definition = s.contains(x) != s.contains(g - x);
  if (by_type != by_definition)
    fail(ErrorKind::kInternal, "symmetry tests disagree for " + s.to_string());
  return by_type;
}

bool is_max_embedding_dimension(const NumericalSemigroup& s) {
  const bool by_count = static_cast<Int>(s.embedding_dimension()) == s.multiplicity();
  bool by_apery = true;
  if (!s.is_naturals()) {
    std::vector<Int> expected{0};
    for (Int a : s.minimal_generators())
      if (a != s.multiplicity()) expected.push_back(a);
    by_apery = apery(s, s.multiplicity()).elements == expected;
  }
  if (by_count != by_apery)
    fail(ErrorKind::kInternal, "maximal embedding dimension tests disagree for " + s.to_string());
  return by_count;
}

std::vector<Int> parse_generators(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  auto error_at = [&](std::size_t at, const std::string& what) {
    fail(ErrorKind::kParse, "generator list: " + what + " at position " + std::to_string(at));
  };
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) error_at(pos, "empty list");
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    Int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) error_at(pos, "expected a positive integer");
    if (value <= 0) error_at(pos, "generators must be positive");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') error_at(pos, std::string("unexpected character '") + text[pos] + "'");
    ++pos;
    if (pos == text.size()) error_at(pos, "trailing comma");
  }
  return out;
}

NumericalSemigroup semigroup_from_string(std::string_view text) {
  const auto gens = parse_generators(text);
  return NumericalSemigroup(std::span<const Int>(gens));
}

NumericalSemigroup interval_semigroup(Int a, Int k) {
  std::vector<Int> gens;
  for (Int i = 0; i <= k; ++i) gens.push_back(a + i);
  return NumericalSemigroup(std::span<const Int>(gens));
}

}  // namespace semichomp
