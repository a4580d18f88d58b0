#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/cyclo.hpp"
#include "frobtrace/groups.hpp"

namespace frobtrace {

// Irreducible characters of a group, one row per character, one column per
// conjugacy class in the group's class order. Rows are kept in canonical
// order: by degree, trivial character first, then lexicographically by value
// under the class order.
struct CharTable {
  ClassData classes;
  std::vector<std::vector<CycloNum>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  std::uint32_t degree(std::size_t row) const;
  std::vector<std::uint32_t> degrees() const;
  // Value of character `row` at group element g.
  const CycloNum& at(const Group& group, std::size_t row, std::uint32_t g) const {
    return rows[row][group.class_of(g)];
  }
};

struct OrthogonalityReport {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
  std::string summary() const;
};

// Exact row and column orthogonality plus sum of squared degrees = |G|.
OrthogonalityReport check_orthogonality(const Group& group, const CharTable& table);

void sort_rows_canonically(CharTable& table);

struct DixonOptions {
  std::uint32_t max_order = 2000;
  int max_primes = 20;
};

// Burnside-Dixon: common eigenvectors of the class multiplication matrices
// over F_p (p = 1 mod exponent), lifted to Q(zeta_e) through discrete Fourier
// inversion of the character values on cyclic subgroups.
CharTable compute_chartable(const Group& group, const DixonOptions& options = {});

// One column of an externally supplied table.
struct ClassColumn {
  std::uint32_t rep;
  std::uint32_t size;
};

// Map columns onto the group's classes, validate exactly and sort canonically.
// Throws DomainError: E_CHARTAB_SHAPE (class/row count), E_CHARTAB_CLASS
// (unknown or mismatched class), E_CHARTAB_ORTHO (orthogonality failure).
CharTable ingest_chartable(const Group& group, const std::vector<ClassColumn>& columns,
                           const std::vector<std::vector<CycloNum>>& rows);

}  // namespace frobtrace
