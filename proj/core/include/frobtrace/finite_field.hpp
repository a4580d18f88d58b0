#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobtrace {

// F_{p^k}, p odd, as F_p[x]/(m). Elements are integers 0..q-1 whose base-p digits
// are the coefficients, constant term least significant. m is the first monic
// irreducible of degree k when (m_0, ..., m_{k-1}) runs in lexicographic order.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Throws ConfigError (E_FIELD) unless p is an odd prime and q = p^k <= max_q.
  FiniteField(std::uint32_t p, std::uint32_t k, std::uint64_t max_q = 1u << 24);

  // "p^k" or "p"
  static FiniteField parse(const std::string& spec, std::uint64_t max_q = 1u << 24);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  // constant first, monic, length k + 1
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem from_int(long long v) const;  // image of Z -> F_p -> F_q
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws DomainError on 0
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_square(Elem a) const;  // 0 counts as a square
  Elem generator() const noexcept { return exp_[1 % exp_.size()]; }

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;       // exp_[i] = g^i, i < q - 1
  std::vector<std::uint32_t> log_;  // log_[0] unused
};

}  // namespace frobtrace
