#pragma once

// Multiplication-table builders for the small groups used in fixtures,
// tests and the round-trip command.

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/groups.hpp"

namespace frobtrace::library {

using Permutation = std::vector<std::uint32_t>;

// Element k is x^k.
GroupData cyclic(std::uint32_t n);
// Order 2n; element a + n*b is r^a s^b with s r s^-1 = r^-1.
GroupData dihedral(std::uint32_t n);
// C_p x| C_q with t s t^-1 = s^r; element a + p*b is s^a t^b.
GroupData metacyclic(std::uint32_t p, std::uint32_t q, std::uint32_t r);
// Quaternion group; element u + 4*s is (-1)^s times unit u of {1, i, j, k}.
GroupData quaternion();
// Closure of permutation generators, identity first, then breadth-first order.
GroupData from_permutations(const std::vector<Permutation>& generators);
GroupData symmetric(std::uint32_t n);

// Subgroup generated by the given elements, sorted.
std::vector<std::uint32_t> generated_subgroup(const GroupData& data, const std::vector<std::uint32_t>& generators);

// Copy of data with inertia = <inertia_generators> and the given Frobenius lift.
GroupData with_inertia(GroupData data, const std::vector<std::uint32_t>& inertia_generators, std::uint32_t frob);

// Named local shapes used across the test suites and the CLI:
// "c7c3" (I = C7, f = 3), "c2_unramified", "c6_i2", "c6_i3", "s3_i3",
// "d4_i4" (rotations), "d4_ikl" (Klein four with a reflection), "q8_i4".
GroupData named_shape(const std::string& name);
std::vector<std::string> named_shapes();

}  // namespace frobtrace::library
