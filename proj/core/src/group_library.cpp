#include "frobtrace/group_library.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "frobtrace/error.hpp"

namespace frobtrace::library {

namespace {

GroupData table_from(std::uint32_t n, auto&& product) {
  GroupData g;
  g.order = n;
  g.mul.resize(std::size_t(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.mul[std::size_t(a) * n + b] = product(a, b);
  g.inertia.resize(n);
  std::iota(g.inertia.begin(), g.inertia.end(), 0u);
  g.frob = 0;
  return g;
}

}  // namespace

GroupData cyclic(std::uint32_t n) {
  return table_from(n, [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; });
}

GroupData dihedral(std::uint32_t n) {
  return table_from(2 * n, [n](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t a = x % n, b = x / n, c = y % n, d = y / n;
    const std::uint32_t rot = b ? (a + n - c) % n : (a + c) % n;
    return rot + n * ((b + d) % 2);
  });
}

GroupData metacyclic(std::uint32_t p, std::uint32_t q, std::uint32_t r) {
  std::uint64_t rq = 1;
  for (std::uint32_t i = 0; i < q; ++i) rq = rq * r % p;
  if (rq != 1) throw DomainError("E_GROUP_BUILD", "r must have order dividing q modulo p");
  std::vector<std::uint32_t> rpow(q);
  rpow[0] = 1;
  for (std::uint32_t i = 1; i < q; ++i) rpow[i] = rpow[i - 1] * r % p;
  return table_from(p * q, [=](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t a = x % p, b = x / p, c = y % p, d = y / p;
    return (a + rpow[b] * c) % p + p * ((b + d) % q);
  });
}

GroupData quaternion() {
  // unit products among {1, i, j, k} as (sign, unit)
  static const std::uint32_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const std::uint32_t sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return table_from(8, [](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t u = x % 4, s = x / 4, v = y % 4, t = y / 4;
    return unit[u][v] + 4 * ((s + t + sign[u][v]) % 2);
  });
}

GroupData from_permutations(const std::vector<Permutation>& generators) {
  if (generators.empty()) return cyclic(1);
  const std::size_t degree = generators.front().size();
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  auto compose = [](const Permutation& g, const Permutation& h) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[h[i]];
    return out;
  };
  std::vector<Permutation> elements{id};
  std::map<Permutation, std::uint32_t> index{{id, 0}};
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const Permutation x = elements[queue.front()];
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(x, g);
      if (index.emplace(y, static_cast<std::uint32_t>(elements.size())).second) {
        queue.push_back(static_cast<std::uint32_t>(elements.size()));
        elements.push_back(std::move(y));
      }
    }
  }
  const auto n = static_cast<std::uint32_t>(elements.size());
  return table_from(n, [&](std::uint32_t a, std::uint32_t b) { return index.at(compose(elements[a], elements[b])); });
}

GroupData symmetric(std::uint32_t n) {
  if (n <= 1) return cyclic(1);
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return from_permutations({swap, cycle});
}

std::vector<std::uint32_t> generated_subgroup(const GroupData& data, const std::vector<std::uint32_t>& generators) {
  const std::uint32_t n = data.order;
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<std::uint32_t> members{0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::uint32_t g : generators) {
      const std::uint32_t y = data.mul[std::size_t(members[i]) * n + g];
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

GroupData with_inertia(GroupData data, const std::vector<std::uint32_t>& inertia_generators, std::uint32_t frob) {
  data.inertia = generated_subgroup(data, inertia_generators);
  data.frob = frob;
  return data;
}

GroupData named_shape(const std::string& name) {
  if (name == "c7c3") return with_inertia(metacyclic(7, 3, 2), {1}, 7);
  if (name == "c2_unramified") return with_inertia(cyclic(2), {}, 1);
  if (name == "c6_i2") return with_inertia(cyclic(6), {3}, 1);
  if (name == "c6_i3") return with_inertia(cyclic(6), {2}, 1);
  if (name == "s3_i3") {
    GroupData s3 = dihedral(3);
    return with_inertia(std::move(s3), {1}, 3);
  }
  if (name == "d4_i4") return with_inertia(dihedral(4), {1}, 4);
  if (name == "d4_ikl") return with_inertia(dihedral(4), {2, 4}, 1);
  if (name == "q8_i4") return with_inertia(quaternion(), {1}, 2);
  throw ConfigError("E_UNKNOWN_SHAPE", "unknown group shape '" + name + "'");
}

std::vector<std::string> named_shapes() {
  return {"c7c3", "c2_unramified", "c6_i2", "c6_i3", "s3_i3", "d4_i4", "d4_ikl", "q8_i4"};
}

}  // namespace frobtrace::library
