#include "frobtrace/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frobtrace/error.hpp"

namespace frobtrace {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const Fp& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && f.pow(g, (f.p - 1) / q) != 1;
    if (ok) return g;
  }
  return 1;
}

// Reduced row echelon form; returns nonzero rows and fills pivot columns.
Mat rref(Mat rows, const Fp& f, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

Mat nullspace(const Mat& a, const Fp& f) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivots;
  Mat r = rref(a, f, pivots);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, r[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (constant term first) by Hessenberg reduction.
Vec charpoly(Mat h, const Fp& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u64 inv = f.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      const u64 u = f.mul(h[j][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[j][c] = f.sub(h[j][c], f.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][m] = f.add(h[r][m], f.mul(u, h[r][j]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    // (x - h_mm) p_{m-1}
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], p[m - 1][k]);
      cur[k] = f.sub(cur[k], f.mul(h[m - 1][m - 1], p[m - 1][k]));
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const u64 coef = f.mul(h[i - 1][m - 1], t);
      for (std::size_t k = 0; k < p[i - 1].size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, p[i - 1][k]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<u64> roots_mod_p(const Vec& poly, const Fp& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = f.add(f.mul(v, x), poly[k]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

struct DixonAttempt {
  bool ok = false;
  std::vector<std::vector<CycloNum>> rows;
};

DixonAttempt dixon_mod_p(const Group& group, u64 p) {
  const Fp f{p};
  const ClassData& cls = group.classes();
  const std::size_t k = cls.count();
  const u64 order = group.order();

  auto class_matrix = [&](std::size_t i) {
    Mat m(k, Vec(k, 0));
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint32_t gl = cls.reps[l];
      for (std::uint32_t x : group.class_elements(static_cast<std::uint32_t>(i))) {
        const std::uint32_t j = group.class_of(group.mul(group.inverse(x), gl));
        m[j][l] = (m[j][l] + 1) % p;
      }
    }
    return m;
  };

  std::vector<Mat> spaces;
  {
    Mat id(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    const Mat m = class_matrix(i);
    std::vector<Mat> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::vector<std::size_t> pivots;
      space = rref(std::move(space), f, pivots);
      Mat a(d, Vec(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        // image of basis vector s under m, read off at pivot columns
        for (std::size_t t = 0; t < d; ++t) {
          u64 acc = 0;
          const std::size_t row = pivots[t];
          for (std::size_t l = 0; l < k; ++l)
            if (space[s][l] && m[row][l]) acc = f.add(acc, f.mul(m[row][l], space[s][l]));
          a[t][s] = acc;
        }
      }
      const auto eigenvalues = roots_mod_p(charpoly(a, f), f);
      if (eigenvalues.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t total = 0;
      for (u64 lambda : eigenvalues) {
        Mat shifted = a;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        Mat sub;
        for (const auto& coords : nullspace(shifted, f)) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < d; ++s)
            if (coords[s])
              for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(coords[s], space[s][l]));
          sub.push_back(std::move(v));
        }
        total += sub.size();
        if (!sub.empty()) next.push_back(std::move(sub));
      }
      if (total != d) return {};
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) return {};

  const std::uint32_t e = group.exponent();
  const u64 w = f.pow(primitive_root(f), (p - 1) / e);

  DixonAttempt out;
  for (auto& space : spaces) {
    Vec omega = space.front();
    if (omega[0] == 0) return {};
    const u64 scale = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, scale);

    u64 s = 0;
    for (std::size_t l = 0; l < k; ++l)
      s = f.add(s, f.mul(f.mul(omega[l], omega[group.inverse_class(static_cast<std::uint32_t>(l))]), f.inv(cls.sizes[l] % p)));
    if (s == 0) return {};
    const u64 target = f.mul(order % p, f.inv(s));
    u64 degree = 0;
    for (u64 dd = 1; dd * dd <= order; ++dd)
      if (f.mul(dd, dd) == target) degree = dd;
    if (degree == 0) return {};

    Vec chi(k);
    for (std::size_t l = 0; l < k; ++l) chi[l] = f.mul(f.mul(omega[l], degree), f.inv(cls.sizes[l] % p));

    std::vector<CycloNum> row(k);
    for (std::size_t l = 0; l < k; ++l) {
      const std::uint32_t g = cls.reps[l];
      const std::uint32_t o = group.element_order(g);
      const u64 z = f.pow(w, e / o);
      const u64 zinv = f.inv(z);
      const u64 oinv = f.inv(o % p);
      Vec vals(o);
      std::uint32_t x = 0;
      for (std::uint32_t t = 0; t < o; ++t) {
        vals[t] = chi[group.class_of(x)];
        x = group.mul(x, g);
      }
      std::vector<mpq_class> mult(o);
      for (std::uint32_t j = 0; j < o; ++j) {
        u64 acc = 0;
        const u64 step = f.pow(zinv, j);
        u64 zz = 1;
        for (std::uint32_t t = 0; t < o; ++t) {
          acc = f.add(acc, f.mul(vals[t], zz));
          zz = f.mul(zz, step);
        }
        acc = f.mul(acc, oinv);
        if (acc > degree) return {};
        mult[j] = static_cast<unsigned long>(acc);
      }
      row[l] = CycloNum::from_cyclic(o, mult);
    }
    out.rows.push_back(std::move(row));
  }
  out.ok = true;
  return out;
}

}  // namespace

std::string OrthogonalityReport::summary() const {
  if (ok()) return "orthogonal";
  std::ostringstream os;
  for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
  return os.str();
}

std::uint32_t CharTable::degree(std::size_t row) const {
  return static_cast<std::uint32_t>(rows[row][0].to_rational().get_num().get_ui());
}

std::vector<std::uint32_t> CharTable::degrees() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(degree(i));
  return out;
}

OrthogonalityReport check_orthogonality(const Group& group, const CharTable& table) {
  OrthogonalityReport report;
  const auto& cls = group.classes();
  const std::size_t k = cls.count();
  const long order = group.order();
  if (table.rows.size() != k) {
    report.failures.push_back("table has " + std::to_string(table.rows.size()) + " rows for " + std::to_string(k) +
                              " classes");
    return report;
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (table.rows[a].size() != k) {
      report.failures.push_back("row " + std::to_string(a) + " has wrong length");
      return report;
    }
    const CycloNum& d = table.rows[a][0];
    if (!d.is_rational() || d.to_rational().get_den() != 1 || sgn(d.to_rational()) <= 0)
      report.failures.push_back("row " + std::to_string(a) + " has non-positive-integer degree " + d.to_string());
  }
  if (!report.ok()) return report;

  mpz_class sum_sq = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const mpz_class d = table.rows[a][0].to_rational().get_num();
    sum_sq += d * d;
  }
  if (sum_sq != order)
    report.failures.push_back("sum of squared degrees is " + sum_sq.get_str() + ", expected " + std::to_string(order));

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      CycloNum s;
      for (std::size_t l = 0; l < k; ++l)
        s += (table.rows[a][l] * table.rows[b][group.inverse_class(static_cast<std::uint32_t>(l))])
                 .scaled(mpq_class(cls.sizes[l]));
      const CycloNum expected(a == b ? order : 0L);
      if (s != expected)
        report.failures.push_back("rows " + std::to_string(a) + "," + std::to_string(b) + ": inner product " +
                                  s.scaled(mpq_class(1, order)).to_string());
    }
  }
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t m = l; m < k; ++m) {
      CycloNum s;
      const auto minv = group.inverse_class(static_cast<std::uint32_t>(m));
      for (std::size_t a = 0; a < k; ++a) s += table.rows[a][l] * table.rows[a][minv];
      const CycloNum expected = (l == m) ? CycloNum(mpq_class(order / cls.sizes[l])) : CycloNum();
      if (s != expected)
        report.failures.push_back("columns " + std::to_string(l) + "," + std::to_string(m) + ": sum " + s.to_string());
    }
  }
  return report;
}

namespace {

bool is_trivial(const std::vector<CycloNum>& row) {
  return std::all_of(row.begin(), row.end(), [](const CycloNum& v) { return v == CycloNum(1L); });
}

}  // namespace

void sort_rows_canonically(CharTable& table) {
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const std::vector<CycloNum>& x, const std::vector<CycloNum>& y) {
                     const mpq_class dx = x[0].to_rational(), dy = y[0].to_rational();
                     if (dx != dy) return dx < dy;
                     const bool tx = is_trivial(x), ty = is_trivial(y);
                     if (tx != ty) return tx;
                     return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end()) < 0;
                   });
}

CharTable compute_chartable(const Group& group, const DixonOptions& options) {
  if (group.order() > options.max_order)
    throw DomainError("E_CHARTAB_BOUND", "group order " + std::to_string(group.order()) + " exceeds bound " +
                                             std::to_string(options.max_order));
  const u64 e = group.exponent();
  const double floor_p = 2.0 * std::sqrt(static_cast<double>(group.order()));
  u64 p = e + 1;
  int tried = 0;
  while (tried < options.max_primes) {
    if (is_prime(p) && static_cast<double>(p) > floor_p) {
      ++tried;
      auto attempt = dixon_mod_p(group, p);
      if (attempt.ok) {
        CharTable table{group.classes(), std::move(attempt.rows)};
        sort_rows_canonically(table);
        const auto report = check_orthogonality(group, table);
        if (report.ok()) return table;
      }
    }
    p += e;
  }
  throw DomainError("E_CHARTAB_PRIME",
                    "no suitable prime found for group exponent " + std::to_string(e) + " after " +
                        std::to_string(options.max_primes) + " candidates");
}

CharTable ingest_chartable(const Group& group, const std::vector<ClassColumn>& columns,
                           const std::vector<std::vector<CycloNum>>& rows) {
  const auto& cls = group.classes();
  const std::size_t k = cls.count();
  if (columns.size() != k)
    throw DomainError("E_CHARTAB_SHAPE", "table lists " + std::to_string(columns.size()) + " classes, group has " +
                                             std::to_string(k));
  if (rows.size() != k)
    throw DomainError("E_CHARTAB_SHAPE",
                      "table has " + std::to_string(rows.size()) + " rows, group has " + std::to_string(k) + " classes");
  std::vector<std::size_t> column_of_class(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto rep = columns[c].rep;
    if (rep >= group.order())
      throw DomainError("E_CHARTAB_CLASS", "class representative " + std::to_string(rep) + " out of range");
    const auto cl = group.class_of(rep);
    if (column_of_class[cl] != k)
      throw DomainError("E_CHARTAB_CLASS", "two columns name class of element " + std::to_string(rep));
    if (cls.sizes[cl] != columns[c].size)
      throw DomainError("E_CHARTAB_CLASS", "class of element " + std::to_string(rep) + " has size " +
                                               std::to_string(cls.sizes[cl]) + ", table says " +
                                               std::to_string(columns[c].size));
    column_of_class[cl] = c;
  }
  CharTable table{cls, {}};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != k)
      throw DomainError("E_CHARTAB_SHAPE", "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                               " entries, expected " + std::to_string(k));
    std::vector<CycloNum> row(k);
    for (std::size_t cl = 0; cl < k; ++cl) row[cl] = rows[r][column_of_class[cl]];
    table.rows.push_back(std::move(row));
  }
  const auto report = check_orthogonality(group, table);
  if (!report.ok()) throw DomainError("E_CHARTAB_ORTHO", "character table fails orthogonality: " + report.summary());
  sort_rows_canonically(table);
  return table;
}

}  // namespace frobtrace
