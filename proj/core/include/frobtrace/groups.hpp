#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobtrace {

// Finite model of Gal(F/K): a full multiplication table (element 0 is the
// identity), the inertia subgroup and an element whose image generates the
// cyclic quotient G/I.
struct GroupData {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> mul;      // row-major, order * order entries
  std::vector<std::uint32_t> inertia;  // sorted element indices
  std::uint32_t frob = 0;
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
  std::string summary() const;
};

ValidationReport validate_group(const GroupData& data);

// Conjugacy classes, ordered by their smallest element; that element is the
// class representative, so the identity class is always class 0.
struct ClassData {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> sizes;

  std::size_t count() const noexcept { return reps.size(); }
};

ClassData conjugacy_classes(const GroupData& data);

// A validated group with the derived tables the rest of the library needs.
class Group {
 public:
  // Throws DomainError (E_GROUP_INVALID) carrying the validation summary.
  explicit Group(GroupData data);

  const GroupData& data() const noexcept { return data_; }
  std::uint32_t order() const noexcept { return data_.order; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return data_.mul[std::size_t(a) * data_.order + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t power(std::uint32_t a, std::int64_t k) const;
  std::uint32_t element_order(std::uint32_t a) const { return element_order_[a]; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  const std::vector<std::uint32_t>& inertia() const noexcept { return data_.inertia; }
  std::uint32_t inertia_order() const noexcept { return static_cast<std::uint32_t>(data_.inertia.size()); }
  bool in_inertia(std::uint32_t g) const { return degree_[g] == 0; }
  std::uint32_t frob() const noexcept { return data_.frob; }
  // f = |G / I|
  std::uint32_t residue_degree() const noexcept { return order() / inertia_order(); }
  // Image of g in G/I = Z/f, with deg(frob) = 1.
  std::uint32_t degree(std::uint32_t g) const { return degree_[g]; }
  // Elements g with deg(g) = r mod f, in increasing index order.
  std::vector<std::uint32_t> coset(std::int64_t r) const;

  const ClassData& classes() const noexcept { return classes_; }
  std::uint32_t class_of(std::uint32_t g) const { return classes_.class_of[g]; }
  std::uint32_t inverse_class(std::uint32_t c) const { return inverse_class_[c]; }
  const std::vector<std::uint32_t>& class_elements(std::uint32_t c) const { return class_elements_[c]; }

 private:
  GroupData data_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint32_t exponent_ = 1;
  std::vector<std::uint32_t> degree_;
  ClassData classes_;
  std::vector<std::uint32_t> inverse_class_;
  std::vector<std::vector<std::uint32_t>> class_elements_;
};

}  // namespace frobtrace
