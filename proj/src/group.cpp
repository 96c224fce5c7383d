#include "levikit/group.hpp"

#include <algorithm>
#include <array>

#include "levikit/error.hpp"

namespace levikit {

GroupBackend GroupBackend::finite(std::vector<std::string> labels, std::vector<std::vector<size_t>> table) {
  const size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty multiplication table");
  if (labels.empty())
    for (size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  if (labels.size() != n) throw Error(ErrorKind::NotAGroup, "label count differs from table size");
  for (size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::NotAGroup, "table row has wrong length", {static_cast<long>(i)});
    for (size_t j = 0; j < n; ++j)
      if (table[i][j] >= n) throw Error(ErrorKind::NotAGroup, "table entry out of range", {static_cast<long>(i), static_cast<long>(j)});
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAGroup, "associativity fails",
                      {static_cast<long>(a), static_cast<long>(b), static_cast<long>(c)});
  size_t identity = n;
  for (size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorKind::NotAGroup, "no identity element");
  std::vector<size_t> inv(n, n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) inv[a] = b;
    if (inv[a] == n) throw Error(ErrorKind::NotAGroup, "element without inverse", {static_cast<long>(a)});
  }
  GroupBackend g;
  g.kind_ = Kind::FiniteTable;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_ = std::move(inv);
  return g;
}

GroupBackend GroupBackend::free_abelian(size_t rank) {
  GroupBackend g;
  g.kind_ = Kind::FreeAbelian;
  g.rank_ = rank;
  return g;
}

GroupBackend GroupBackend::trivial() { return cyclic(1); }

GroupBackend GroupBackend::cyclic(size_t n) {
  std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : (n == 2 ? "g" : "g" + std::to_string(i)));
    for (size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return finite(std::move(labels), std::move(table));
}

GroupBackend GroupBackend::symmetric3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<size_t>> table(6, std::vector<size_t>(6));
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[static_cast<size_t>(x)] = perms[a][static_cast<size_t>(perms[b][static_cast<size_t>(x)])];
      table[a][b] = static_cast<size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return finite(std::move(labels), std::move(table));
}

GroupBackend::Element GroupBackend::identity() const {
  if (kind_ == Kind::FiniteTable) return {static_cast<long long>(identity_)};
  return Element(rank_, 0);
}

GroupBackend::Element GroupBackend::multiply(const Element& a, const Element& b) const {
  if (kind_ == Kind::FiniteTable) return {static_cast<long long>(table_[static_cast<size_t>(a[0])][static_cast<size_t>(b[0])])};
  Element c(rank_);
  for (size_t i = 0; i < rank_; ++i) c[i] = a[i] + b[i];
  return c;
}

GroupBackend::Element GroupBackend::inverse(const Element& a) const {
  if (kind_ == Kind::FiniteTable) return {static_cast<long long>(inverse_[static_cast<size_t>(a[0])])};
  Element c(rank_);
  for (size_t i = 0; i < rank_; ++i) c[i] = -a[i];
  return c;
}

bool GroupBackend::is_element(const Element& a) const {
  if (kind_ == Kind::FiniteTable) return a.size() == 1 && a[0] >= 0 && static_cast<size_t>(a[0]) < table_.size();
  return a.size() == rank_;
}

GroupBackend::Element GroupBackend::element(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::Parse, "unknown group element '" + label + "'");
  return {static_cast<long long>(it - labels_.begin())};
}

std::string GroupBackend::format(const Element& a) const {
  if (kind_ == Kind::FiniteTable) return labels_.at(static_cast<size_t>(a.at(0)));
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace levikit
