#include "frobtrace/groups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "frobtrace/error.hpp"

namespace frobtrace {

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
  return os.str();
}

ValidationReport validate_group(const GroupData& data) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  const std::uint32_t n = data.order;
  if (n == 0) {
    fail("order must be positive");
    return report;
  }
  if (data.mul.size() != std::size_t(n) * n) {
    fail("multiplication table has " + std::to_string(data.mul.size()) + " entries, expected " +
         std::to_string(std::size_t(n) * n));
    return report;
  }
  for (std::uint32_t v : data.mul) {
    if (v >= n) {
      fail("multiplication table entry " + std::to_string(v) + " out of range");
      return report;
    }
  }
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return data.mul[std::size_t(a) * n + b]; };

  for (std::uint32_t x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      fail("element 0 is not the identity (fails at " + std::to_string(x) + ")");
      break;
    }
  }
  std::vector<char> seen(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool perm = true;
    for (std::uint32_t b = 0; b < n && perm; ++b) perm = !std::exchange(seen[mul(a, b)], 1);
    if (!perm) {
      fail("row " + std::to_string(a) + " is not a permutation");
      break;
    }
  }
  for (std::uint32_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    bool perm = true;
    for (std::uint32_t a = 0; a < n && perm; ++a) perm = !std::exchange(seen[mul(a, b)], 1);
    if (!perm) {
      fail("column " + std::to_string(b) + " is not a permutation");
      break;
    }
  }
  if (!report.ok()) return report;

  auto assoc_fails = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return mul(mul(a, b), c) != mul(a, mul(b, c));
  };
  bool assoc = true;
  if (n <= 64) {
    for (std::uint32_t a = 0; a < n && assoc; ++a)
      for (std::uint32_t b = 0; b < n && assoc; ++b)
        for (std::uint32_t c = 0; c < n && assoc; ++c) assoc = !assoc_fails(a, b, c);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (int t = 0; t < 20000 && assoc; ++t) assoc = !assoc_fails(pick(rng), pick(rng), pick(rng));
  }
  if (!assoc) fail("multiplication is not associative");

  const auto& inertia = data.inertia;
  if (inertia.empty()) {
    fail("inertia subgroup is empty");
    return report;
  }
  if (!std::is_sorted(inertia.begin(), inertia.end()) ||
      std::adjacent_find(inertia.begin(), inertia.end()) != inertia.end()) {
    fail("inertia list must be sorted without duplicates");
    return report;
  }
  if (inertia.back() >= n) {
    fail("inertia element out of range");
    return report;
  }
  std::vector<char> in_i(n, 0);
  for (std::uint32_t h : inertia) in_i[h] = 1;
  if (!in_i[0]) fail("inertia does not contain the identity");
  bool closed = true;
  for (std::uint32_t a : inertia)
    for (std::uint32_t b : inertia) closed = closed && in_i[mul(a, b)];
  if (!closed) fail("inertia is not closed under multiplication");
  if (n % inertia.size() != 0) fail("inertia order does not divide the group order");
  if (!report.ok()) return report;

  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) inv[a] = b;
  bool normal = true;
  for (std::uint32_t g = 0; g < n && normal; ++g)
    for (std::uint32_t h : inertia) normal = normal && in_i[mul(mul(g, h), inv[g])];
  if (!normal) fail("inertia is not a normal subgroup");

  if (data.frob >= n) {
    fail("frob index out of range");
    return report;
  }
  const std::size_t f = n / inertia.size();
  std::uint32_t x = data.frob;
  for (std::size_t k = 1; k < f; ++k) {
    if (in_i[x]) {
      fail("image of frob does not generate G/I (frob^" + std::to_string(k) + " lies in I)");
      break;
    }
    x = mul(x, data.frob);
  }
  if (report.ok() && !in_i[x]) fail("G/I is not cyclic of order " + std::to_string(f) + " generated by frob");
  return report;
}

ClassData conjugacy_classes(const GroupData& data) {
  const std::uint32_t n = data.order;
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return data.mul[std::size_t(a) * n + b]; };
  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) inv[a] = b;

  ClassData out;
  constexpr std::uint32_t unset = ~0u;
  out.class_of.assign(n, unset);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (out.class_of[x] != unset) continue;
    const auto c = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(x);
    std::uint32_t size = 0;
    for (std::uint32_t g = 0; g < n; ++g) {
      const std::uint32_t y = mul(mul(g, x), inv[g]);
      if (out.class_of[y] == unset) {
        out.class_of[y] = c;
        ++size;
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

Group::Group(GroupData data) : data_(std::move(data)) {
  const auto report = validate_group(data_);
  if (!report.ok()) throw DomainError("E_GROUP_INVALID", "invalid group: " + report.summary());
  const std::uint32_t n = order();
  inverse_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
  element_order_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t k = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  degree_.assign(n, 0);
  std::uint32_t x = 0;
  for (std::uint32_t k = 0; k < residue_degree(); ++k) {
    for (std::uint32_t h : data_.inertia) degree_[mul(x, h)] = k;
    x = mul(x, data_.frob);
  }
  classes_ = conjugacy_classes(data_);
  inverse_class_.resize(classes_.count());
  class_elements_.resize(classes_.count());
  for (std::uint32_t c = 0; c < classes_.count(); ++c) inverse_class_[c] = class_of(inverse(classes_.reps[c]));
  for (std::uint32_t g = 0; g < n; ++g) class_elements_[class_of(g)].push_back(g);
}

std::uint32_t Group::power(std::uint32_t a, std::int64_t k) const {
  const std::int64_t o = element_order_[a];
  k %= o;
  if (k < 0) k += o;
  std::uint32_t result = 0;
  for (std::int64_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

std::vector<std::uint32_t> Group::coset(std::int64_t r) const {
  const std::int64_t f = residue_degree();
  const auto target = static_cast<std::uint32_t>(((r % f) + f) % f);
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < order(); ++g)
    if (degree_[g] == target) out.push_back(g);
  return out;
}

}  // namespace frobtrace
