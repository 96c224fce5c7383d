#pragma once

#include <string>
#include <vector>

namespace levikit {

/// Grading groups: a finite group given by its multiplication table, or Z^k.
class GroupBackend {
 public:
  enum class Kind { FiniteTable, FreeAbelian };

  /// Finite table elements are {index}; free abelian elements are integer k-vectors.
  using Element = std::vector<long long>;

  /// Checks closure, associativity, a two-sided identity and inverses; throws NotAGroup.
  static GroupBackend finite(std::vector<std::string> labels, std::vector<std::vector<size_t>> table);
  static GroupBackend free_abelian(size_t rank);

  static GroupBackend trivial();
  static GroupBackend cyclic(size_t n);
  /// S3 with labels e, (12), (23), (13), (123), (132); product is composition (gh)(x) = g(h(x)).
  static GroupBackend symmetric3();

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::FiniteTable; }
  size_t order() const noexcept { return table_.size(); }
  size_t rank() const noexcept { return rank_; }
  size_t identity_index() const noexcept { return identity_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<size_t>>& table() const noexcept { return table_; }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool is_element(const Element& a) const;
  /// Finite groups: element by label. Throws Parse on unknown labels.
  Element element(const std::string& label) const;
  Element element(size_t index) const { return {static_cast<long long>(index)}; }
  std::string format(const Element& a) const;

  friend bool operator==(const GroupBackend& a, const GroupBackend& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.table_ == b.table_;
  }

 private:
  Kind kind_ = Kind::FiniteTable;
  size_t rank_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<size_t>> table_;
  size_t identity_ = 0;
  std::vector<size_t> inverse_;
};

}  // namespace levikit
