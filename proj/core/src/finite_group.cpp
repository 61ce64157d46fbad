#include "semichomp/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace semichomp {

FiniteMonoid::FiniteMonoid(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  finish();
}

void FiniteMonoid::finish() {
  const std::size_t n = table_.size();
  if (n == 0) fail(ErrorKind::kInvalidInput, "a monoid needs at least one element");
  if (names_.size() != n) fail(ErrorKind::kInvalidInput, "monoid table and name list differ in size");
  for (const auto& row : table_) {
    if (row.size() != n) fail(ErrorKind::kInvalidInput, "monoid table is not square");
    for (std::size_t v : row)
      if (v >= n) fail(ErrorKind::kInvalidInput, "monoid table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
          fail(ErrorKind::kValidation, "multiplication is not associative at (" + names_[i] + ", " + names_[j] +
                                           ", " + names_[k] + ")");
  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = table_[e][i] == i && table_[i][e] == i;
    if (ok) id = e;
  }
  if (!id) fail(ErrorKind::kValidation, "the table has no identity element");
  identity_ = *id;
  is_abelian_ = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] != table_[j][i]) is_abelian_ = false;
  is_group_ = true;
  inverse_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] == identity_ && table_[j][i] == identity_) inverse_[i] = j;
    if (inverse_[i] == n) is_group_ = false;
  }
}

FiniteMonoid FiniteMonoid::cyclic_product(const std::vector<Int>& factors) {
  for (Int m : factors)
    if (m < 1) fail(ErrorKind::kInvalidInput, "cyclic factors must be positive");
  std::size_t n = 1;
  for (Int m : factors) {
    n *= static_cast<std::size_t>(m);
    if (n > 4096) fail(ErrorKind::kInvalidInput, "group too large for a multiplication table");
  }
  FiniteMonoid g;
  g.factors_ = factors;
  g.factor_form_ = true;
  auto encode = [&](const std::vector<Int>& r) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) idx = idx * static_cast<std::size_t>(factors[f]) + static_cast<std::size_t>(r[f]);
    return idx;
  };
  std::vector<std::vector<Int>> res(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> r(factors.size());
    std::size_t rest = i;
    for (std::size_t f = factors.size(); f-- > 0;) {
      r[f] = static_cast<Int>(rest % static_cast<std::size_t>(factors[f]));
      rest /= static_cast<std::size_t>(factors[f]);
    }
    res[i] = r;
    std::string name;
    for (std::size_t f = 0; f < r.size(); ++f) name += (f ? ";" : "") + std::to_string(r[f]);
    g.names_.push_back(factors.empty() ? "e" : name);
  }
  g.table_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> r(factors.size());
      for (std::size_t f = 0; f < r.size(); ++f) r[f] = (res[i][f] + res[j][f]) % factors[f];
      g.table_[i][j] = encode(r);
    }
  g.finish();
  return g;
}

FiniteMonoid FiniteMonoid::symmetric3() {
  // Images of (1,2,3), in name order.
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  std::vector<std::string> names{"id", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[static_cast<std::size_t>(x)] = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(x)])];
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteMonoid(std::move(table), std::move(names));
}

FiniteMonoid FiniteMonoid::capped(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n + 1, std::vector<std::size_t>(n + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) table[i][j] = std::min(i + j, n);
  return FiniteMonoid(std::move(table), std::move(names));
}

std::optional<std::size_t> FiniteMonoid::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  if (!factor_form_ || factors_.empty()) return std::nullopt;
  std::vector<Int> r;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t end = std::min(name.find(';', pos), name.size());
    Int v = 0;
    const auto* first = name.data() + pos;
    const auto [p, ec] = std::from_chars(first, name.data() + end, v);
    if (ec != std::errc() || p != name.data() + end || end == pos) return std::nullopt;
    r.push_back(v);
    pos = end + 1;
  }
  if (r.size() != factors_.size()) return std::nullopt;
  std::size_t idx = 0;
  for (std::size_t f = 0; f < r.size(); ++f)
    idx = idx * static_cast<std::size_t>(factors_[f]) + static_cast<std::size_t>(((r[f] % factors_[f]) + factors_[f]) % factors_[f]);
  return idx;
}

std::size_t FiniteMonoid::inverse(std::size_t i) const {
  if (!is_group_) fail(ErrorKind::kInvalidArgument, "inverses need a group");
  return inverse_[i];
}

std::size_t FiniteMonoid::order(std::size_t i) const {
  std::size_t x = i, k = 1;
  while (x != identity_) {
    x = op(x, i);
    if (++k > size() + 1) fail(ErrorKind::kInvalidArgument, name(i) + " has no finite order");
  }
  return k;
}

std::size_t FiniteMonoid::power(std::size_t i, Int k) const {
  std::size_t base = k < 0 ? inverse(i) : i;
  Int e = k < 0 ? -k : k;
  if (is_group_) e %= static_cast<Int>(order(base));
  std::size_t out = identity_;
  for (Int step = 0; step < e; ++step) out = op(out, base);
  return out;
}

std::vector<Int> FiniteMonoid::residues(std::size_t i) const {
  std::vector<Int> r(factors_.size());
  for (std::size_t f = factors_.size(); f-- > 0;) {
    r[f] = static_cast<Int>(i % static_cast<std::size_t>(factors_[f]));
    i /= static_cast<std::size_t>(factors_[f]);
  }
  return r;
}

std::string FiniteMonoid::describe() const {
  if (factor_form_) {
    if (factors_.empty()) return "trivial";
    std::string out;
    for (std::size_t f = 0; f < factors_.size(); ++f) out += (f ? "x" : "") + std::string("Z") + std::to_string(factors_[f]);
    return out;
  }
  return std::string(is_group_ ? "group" : "monoid") + " of order " + std::to_string(size());
}

FiniteMonoid read_monoid_table(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (!words.empty()) rows.push_back(std::move(words));
  }
  if (rows.empty()) fail(ErrorKind::kParse, "empty monoid table");
  const std::vector<std::string> names = rows.front();
  if (rows.size() != names.size() + 1)
    fail(ErrorKind::kParse, "expected " + std::to_string(names.size()) + " table rows, found " +
                                std::to_string(rows.size() - 1));
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != names.size()) fail(ErrorKind::kParse, "table row " + std::to_string(r) + " has the wrong length");
    std::vector<std::size_t> row;
    for (const auto& w : rows[r]) {
      auto it = std::find(names.begin(), names.end(), w);
      if (it == names.end()) fail(ErrorKind::kParse, "unknown element '" + w + "' in table row " + std::to_string(r));
      row.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    table.push_back(std::move(row));
  }
  return FiniteMonoid(std::move(table), names);
}

FiniteMonoid parse_group(std::string_view spec) {
  if (spec == "trivial" || spec == "1" || spec == "Z1") return FiniteMonoid::cyclic_product({});
  if (spec == "S3") return FiniteMonoid::symmetric3();
  if (spec.substr(0, 6) == "table:") {
    const std::string path(spec.substr(6));
    std::ifstream in(path);
    if (!in) fail(ErrorKind::kParse, "cannot open group table " + path);
    return read_monoid_table(in);
  }
  std::vector<Int> factors;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    if (spec[pos] != 'Z') fail(ErrorKind::kParse, "group spec: expected 'Z' at offset " + std::to_string(pos));
    ++pos;
    Int m = 0;
    const auto [p, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), m);
    if (ec != std::errc() || m < 1) fail(ErrorKind::kParse, "group spec: expected a positive order at offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(p - spec.data());
    factors.push_back(m);
    if (pos < spec.size()) {
      if (spec[pos] != 'x') fail(ErrorKind::kParse, "group spec: expected 'x' at offset " + std::to_string(pos));
      ++pos;
      if (pos == spec.size()) fail(ErrorKind::kParse, "group spec ends after 'x'");
    }
  }
  if (factors.empty()) fail(ErrorKind::kParse, "empty group spec");
  return FiniteMonoid::cyclic_product(factors);
}

}  // namespace semichomp
