#include "semichomp/poset.hpp"

#include <algorithm>
#include <sstream>

#include "semichomp/semigroup.hpp"

namespace semichomp {

FinitePoset::FinitePoset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& below) {
  labels_ = std::move(labels);
  const std::size_t n = labels_.size();
  if (n == 0) fail(ErrorKind::kValidation, "poset must be nonempty");
  if (below.size() != n) fail(ErrorKind::kValidation, "relation matrix size does not match labels");
  for (const auto& row : below)
    if (row.size() != n) fail(ErrorKind::kValidation, "relation matrix is not square");
  finish(below);
}

void FinitePoset::finish(std::vector<std::vector<bool>> below) {
  const std::size_t n = labels_.size();
  up_.assign(n, ElementSet(n));
  down_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!below[i][i]) fail(ErrorKind::kValidation, "relation is not reflexive at " + labels_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      if (i != j && below[j][i])
        fail(ErrorKind::kValidation, "relation is not antisymmetric: " + labels_[i] + ", " + labels_[j]);
      up_[i].set(j);
      down_[j].set(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    up_[i].for_each([&](std::size_t j) { ok = ok && up_[j].is_subset_of(up_[i]); });
    if (!ok) fail(ErrorKind::kValidation, "relation is not transitive above " + labels_[i]);
  }
  std::optional<std::size_t> minimum;
  for (std::size_t i = 0; i < n && !minimum; ++i)
    if (up_[i].count() == n) minimum = i;
  if (!minimum) fail(ErrorKind::kValidation, "poset has no global minimum");
  minimum_ = *minimum;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) below[i][i] = true;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) fail(ErrorKind::kValidation, "cover pair out of range");
    below[lo][hi] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (below[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (below[k][j]) below[i][j] = true;
  return FinitePoset(std::move(labels), below);
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

void FinitePoset::set_values(std::vector<Int> values) {
  if (!values.empty() && values.size() != size()) fail(ErrorKind::kInvalidArgument, "value list size mismatch");
  values_ = std::move(values);
}

std::optional<std::size_t> FinitePoset::index_of_value(Int v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it != values_.end() && *it == v) return static_cast<std::size_t>(it - values_.begin());
  // values are not necessarily sorted for hand-built posets
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == v) return i;
  return std::nullopt;
}

bool FinitePoset::is_down_set(const ElementSet& s) const {
  if (s.universe() != size()) return false;
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && down_[i].is_subset_of(s); });
  return ok;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers(const ElementSet& within) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  within.for_each([&](std::size_t i) {
    within.for_each([&](std::size_t j) {
      if (i == j || !leq(i, j)) return;
      // i < j is a cover when no k in `within` sits strictly between.
      ElementSet between = up_[i];
      between &= down_[j];
      between &= within;
      if (between.count() == 2) out.emplace_back(i, j);
    });
  });
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements(const ElementSet& within) const {
  std::vector<std::size_t> out;
  within.for_each([&](std::size_t i) {
    ElementSet above = up_[i];
    above &= within;
    if (above.count() == 1) out.push_back(i);
  });
  return out;
}

FinitePoset FinitePoset::restricted_to(const ElementSet& subset) const {
  const auto idx = subset.indices();
  std::vector<std::string> labels;
  std::vector<Int> values;
  for (auto i : idx) {
    labels.push_back(labels_[i]);
    if (!values_.empty()) values.push_back(values_[i]);
  }
  std::vector<std::vector<bool>> below(idx.size(), std::vector<bool>(idx.size(), false));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) below[a][b] = leq(idx[a], idx[b]);
  FinitePoset out(std::move(labels), below);
  out.set_values(std::move(values));
  return out;
}

FinitePoset grid_poset(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) fail(ErrorKind::kInvalidArgument, "grid dimensions must be positive");
  const std::size_t n = rows * cols;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) labels.push_back("(" + std::to_string(r) + "," + std::to_string(c) + ")");
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[i][j] = i / cols <= j / cols && i % cols <= j % cols;
  return FinitePoset(std::move(labels), below);
}

FinitePoset ten_element_poset() {
  std::vector<std::string> labels{"0"};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) labels.push_back("x" + std::to_string(i) + std::to_string(j));
  auto x = [](int i, int j) { return static_cast<std::size_t>(1 + (i - 1) * 3 + (j - 1)); };
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int j = 1; j <= 3; ++j) covers.emplace_back(0, x(1, j));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) covers.emplace_back(x(i, j), x(i + 1, j));
  for (int i = 1; i <= 2; ++i) covers.emplace_back(x(i, 3), x(i + 1, 2));
  covers.emplace_back(x(3, 1), x(3, 3));
  return FinitePoset::from_covers(std::move(labels), covers);
}

FinitePoset apery_poset(const NumericalSemigroup& s, Int a) {
  const AperySet ap = apery(s, a);
  std::vector<std::string> labels;
  for (Int v : ap.elements) labels.push_back(std::to_string(v));
  FinitePoset poset(std::move(labels), ap.below);
  poset.set_values(ap.elements);
  return poset;
}

FinitePoset read_poset(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> lower;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::kParse, "poset line " + std::to_string(line_no) + ": missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string label;
    head >> label;
    if (label.empty()) fail(ErrorKind::kParse, "poset line " + std::to_string(line_no) + ": empty label");
    labels.push_back(label);
    std::istringstream rest(line.substr(colon + 1));
    std::vector<std::string> covers;
    for (std::string c; rest >> c;) covers.push_back(c);
    lower.push_back(std::move(covers));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (const auto& c : lower[i]) {
      auto it = std::find(labels.begin(), labels.end(), c);
      if (it == labels.end()) fail(ErrorKind::kParse, "poset: unknown element '" + c + "' below " + labels[i]);
      pairs.emplace_back(static_cast<std::size_t>(it - labels.begin()), i);
    }
  }
  return FinitePoset::from_covers(std::move(labels), pairs);
}

std::string write_poset(const FinitePoset& poset) {
  const auto cover_pairs = poset.covers(poset.all());
  std::ostringstream os;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    os << poset.label(i) << ':';
    for (auto [lo, hi] : cover_pairs)
      if (hi == i) os << ' ' << poset.label(lo);
    os << '\n';
  }
  return os.str();
}

std::string render_position(const FinitePoset& poset, const ElementSet& position) {
  std::vector<std::string> names;
  position.for_each([&](std::size_t i) { names.push_back(poset.label(i)); });
  if (!poset.values().empty()) {
    std::vector<std::pair<Int, std::string>> keyed;
    position.for_each([&](std::size_t i) { keyed.emplace_back(poset.values()[i], poset.label(i)); });
    std::sort(keyed.begin(), keyed.end());
    names.clear();
    for (auto& [v, l] : keyed) names.push_back(l);
  } else {
    std::sort(names.begin(), names.end());
  }
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

PosetSolver::PosetSolver(const FinitePoset& poset, SolveLimits limits) : poset_(poset), limits_(limits) {}

bool PosetSolver::mover_wins(const ElementSet& position) { return evaluate(position); }

bool PosetSolver::evaluate(const ElementSet& position) {
  if (auto it = memo_.find(position); it != memo_.end()) return it->second;
  bool wins = false;
  const std::size_t minimum = poset_.minimum();
  position.for_each([&](std::size_t y) {
    if (wins || y == minimum) return;
    if (!evaluate(poset_.after_move(position, y))) wins = true;
  });
  if (memo_.size() >= limits_.max_memo_entries)
    fail(ErrorKind::kMemoOverflow, "memo table exceeded " + std::to_string(limits_.max_memo_entries) + " entries");
  memo_.emplace(position, wins);
  return wins;
}

std::vector<std::size_t> PosetSolver::winning_moves(const ElementSet& position) {
  std::vector<std::size_t> out;
  const std::size_t minimum = poset_.minimum();
  position.for_each([&](std::size_t y) {
    if (y != minimum && !evaluate(poset_.after_move(position, y))) out.push_back(y);
  });
  return out;
}

std::optional<std::size_t> PosetSolver::least_winning_move(const ElementSet& position) {
  std::optional<std::size_t> out;
  const std::size_t minimum = poset_.minimum();
  position.for_each([&](std::size_t y) {
    if (!out && y != minimum && !evaluate(poset_.after_move(position, y))) out = y;
  });
  return out;
}

GameOutcome solve(const FinitePoset& poset, const ElementSet& start, SolveLimits limits) {
  if (!poset.is_down_set(start) || !start.test(poset.minimum()))
    fail(ErrorKind::kInvalidPosition, "start position is not a down-set containing the minimum");
  PosetSolver solver(poset, limits);
  GameOutcome out;
  out.winning_moves = solver.winning_moves(start);
  out.mover_wins = !out.winning_moves.empty();
  out.explored_states = solver.explored_states();
  return out;
}

GameOutcome solve(const FinitePoset& poset) { return solve(poset, poset.all()); }

}  // namespace semichomp
