#include "hfdts/int_linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "hfdts/error.hpp"

namespace hfdts {

namespace {

// u*a + v*b = g >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = checked_add(old_r, -checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_add(old_s, -checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_add(old_t, -checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

// Replace columns (i, j) of m by (p*ci + q*cj, r*ci + s*cj).
void combine_columns(IntMatrix& m, int i, int j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  for (auto& row : m) {
    const std::int64_t a = row[i];
    const std::int64_t b = row[j];
    row[i] = checked_add(checked_mul(p, a), checked_mul(q, b));
    row[j] = checked_add(checked_mul(r, a), checked_mul(s, b));
  }
}

void swap_columns(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (auto& row : m) std::swap(row[i], row[j]);
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a, int cols) {
  ColumnEchelon out;
  out.h = a;
  out.u.assign(cols, IntVector(cols, 0));
  for (int i = 0; i < cols; ++i) out.u[i][i] = 1;
  int k = 0;
  const int rows = static_cast<int>(a.size());
  for (int r = 0; r < rows && k < cols; ++r) {
    for (int c = k + 1; c < cols; ++c) {
      const std::int64_t x = out.h[r][k];
      const std::int64_t y = out.h[r][c];
      if (y == 0) continue;
      if (x == 0) {
        swap_columns(out.h, k, c);
        swap_columns(out.u, k, c);
        continue;
      }
      std::int64_t s, t;
      const std::int64_t g = ext_gcd(x, y, s, t);
      // [s t; -y/g x/g] has determinant 1.
      combine_columns(out.h, k, c, s, t, -y / g, x / g);
      combine_columns(out.u, k, c, s, t, -y / g, x / g);
    }
    if (out.h[r][k] != 0) {
      if (out.h[r][k] < 0) {
        for (auto& row : out.h) row[k] = -row[k];
        for (auto& row : out.u) row[k] = -row[k];
      }
      // Reduce earlier columns modulo the pivot to keep entries small.
      for (int j = 0; j < k; ++j) {
        const std::int64_t q = out.h[r][j] / out.h[r][k];
        if (q == 0) continue;
        for (auto& row : out.h) row[j] = checked_add(row[j], -checked_mul(q, row[k]));
        for (auto& row : out.u) row[j] = checked_add(row[j], -checked_mul(q, row[k]));
      }
      out.pivot_rows.push_back(r);
      ++k;
    }
  }
  return out;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a, int cols) {
  const auto ech = column_echelon(a, cols);
  std::vector<IntVector> basis;
  for (int c = ech.rank(); c < cols; ++c) {
    IntVector v(cols);
    for (int i = 0; i < cols; ++i) v[i] = ech.u[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IntVector> integer_solve(const IntMatrix& a, int cols, const IntVector& b) {
  const auto ech = column_echelon(a, cols);
  const int rows = static_cast<int>(a.size());
  IntVector y(cols, 0);
  for (int k = 0; k < ech.rank(); ++k) {
    const int r = ech.pivot_rows[k];
    std::int64_t acc = b[r];
    for (int j = 0; j < k; ++j) acc = checked_add(acc, -checked_mul(ech.h[r][j], y[j]));
    if (acc % ech.h[r][k] != 0) return std::nullopt;
    y[k] = acc / ech.h[r][k];
  }
  for (int r = 0; r < rows; ++r) {
    std::int64_t acc = 0;
    for (int j = 0; j < ech.rank(); ++j) acc = checked_add(acc, checked_mul(ech.h[r][j], y[j]));
    if (acc != b[r]) return std::nullopt;
  }
  IntVector x(cols, 0);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < ech.rank(); ++j) x[i] = checked_add(x[i], checked_mul(ech.u[i][j], y[j]));
  return x;
}

RationalRref rational_rref(const IntMatrix& a, int cols) {
  const int rows = static_cast<int>(a.size());
  RationalRref out;
  out.reduced.assign(rows, std::vector<Rational>(cols));
  out.transform.assign(rows, std::vector<Rational>(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.reduced[r][c] = Rational(a[r][c]);
    out.transform[r][r] = Rational(1);
  }
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (!out.reduced[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(out.reduced[row], out.reduced[p]);
    std::swap(out.transform[row], out.transform[p]);
    const Rational inv = Rational(1) / out.reduced[row][c];
    for (auto& x : out.reduced[row]) x *= inv;
    for (auto& x : out.transform[row]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || out.reduced[r][c].is_zero()) continue;
      const Rational f = out.reduced[r][c];
      for (int j = 0; j < cols; ++j)
        if (!out.reduced[row][j].is_zero()) out.reduced[r][j] -= f * out.reduced[row][j];
      for (int j = 0; j < rows; ++j)
        if (!out.transform[row][j].is_zero()) out.transform[r][j] -= f * out.transform[row][j];
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

}  // namespace hfdts

namespace hfdts {

namespace {

// a . lambda + c >= 0 over rationals.
struct Ineq {
  std::vector<Rational> a;
  Rational c;
};

void normalize(Ineq& q) {
  // scale so the first nonzero coefficient has magnitude 1
  for (const auto& x : q.a)
    if (!x.is_zero()) {
      const Rational s = x.sign() > 0 ? x : -x;
      for (auto& y : q.a) y /= s;
      q.c /= s;
      return;
    }
}

bool same(const Ineq& p, const Ineq& q) { return p.a == q.a && p.c == q.c; }

}  // namespace

std::optional<IntVector> nonnegative_combination(const std::vector<IntVector>& vectors) {
  const int r = static_cast<int>(vectors.size());
  if (r == 0) return std::nullopt;
  const int n = static_cast<int>(vectors[0].size());
  // Constraints: (V lambda)_j >= 0 for each coordinate, and sum_j (V lambda)_j >= 1.
  std::vector<Ineq> system;
  Ineq total{std::vector<Rational>(r), Rational(-1)};
  for (int j = 0; j < n; ++j) {
    Ineq q{std::vector<Rational>(r), Rational(0)};
    bool any = false;
    for (int i = 0; i < r; ++i) {
      q.a[i] = Rational(vectors[i][j]);
      total.a[i] += q.a[i];
      any = any || vectors[i][j] != 0;
    }
    if (any) system.push_back(std::move(q));
  }
  system.push_back(total);

  std::vector<std::vector<Ineq>> stages;
  for (int k = 0; k < r; ++k) {
    stages.push_back(system);
    std::vector<Ineq> pos, neg, rest;
    for (auto& q : system) {
      if (q.a[k].sign() > 0) pos.push_back(q);
      else if (q.a[k].sign() < 0) neg.push_back(q);
      else rest.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& m : neg) {
        // p.a[k] > 0, m.a[k] < 0: combine to cancel variable k
        const Rational sp = -m.a[k], sm = p.a[k];
        Ineq q{std::vector<Rational>(r), p.c * sp + m.c * sm};
        for (int i = 0; i < r; ++i) q.a[i] = p.a[i] * sp + m.a[i] * sm;
        q.a[k] = Rational(0);
        normalize(q);
        bool dup = false;
        for (const auto& o : rest)
          if (same(o, q)) dup = true;
        if (!dup) rest.push_back(std::move(q));
      }
    system = std::move(rest);
  }
  for (const auto& q : system)
    if (q.c.sign() < 0) return std::nullopt;

  std::vector<Rational> lambda(r);
  for (int k = r - 1; k >= 0; --k) {
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const auto& q : stages[k]) {
      Rational rest = q.c;
      for (int i = k + 1; i < r; ++i) rest += q.a[i] * lambda[i];
      if (q.a[k].is_zero()) continue;
      const Rational bound = -rest / q.a[k];
      if (q.a[k].sign() > 0) {
        if (!has_lo || lo < bound) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo) lambda[k] = lo;
    else if (has_hi) lambda[k] = hi;
    else lambda[k] = Rational(0);
  }
  std::int64_t den = 1;
  for (const auto& x : lambda) den = checked_mul(den / std::gcd(den, x.den()), x.den());
  IntVector out(r);
  for (int i = 0; i < r; ++i) out[i] = (lambda[i] * Rational(den)).num();
  return out;
}

std::int64_t determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = checked_add(checked_mul(m[i][j], m[k][k]), -checked_mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace hfdts
