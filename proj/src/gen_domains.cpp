#include "hd/gen_domains.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hd {

std::vector<Generator> enumerate_generators(const HeegaardDiagram& dg, int fam_a, int fam_b) {
  if (fam_a == fam_b) throw std::invalid_argument("generator families must differ");
  std::vector<int> curves_a, curves_b;
  for (int ci = 0; ci < (int)dg.curves.size(); ++ci) {
    if (dg.curves[ci].family == fam_a) curves_a.push_back(ci);
    if (dg.curves[ci].family == fam_b) curves_b.push_back(ci);
  }
  // vertices joining the pair, grouped by their fam_a curve
  std::vector<std::vector<int>> options(curves_a.size());
  for (int vi = 0; vi < (int)dg.vertices.size(); ++vi) {
    if (!dg.vertex_joins(vi, fam_a, fam_b)) continue;
    int ca = dg.curve_at_vertex(vi, fam_a);
    auto it = std::find(curves_a.begin(), curves_a.end(), ca);
    options[it - curves_a.begin()].push_back(vi);
  }

  std::vector<Generator> out;
  std::vector<int> chosen;
  std::set<int> used_b;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == options.size()) {
      out.push_back(make_generator(dg, fam_a, fam_b, chosen));
      return;
    }
    for (int v : options[i]) {
      int cb = dg.curve_at_vertex(v, fam_b);
      if (used_b.count(cb)) continue;
      used_b.insert(cb);
      chosen.push_back(v);
      rec(i + 1);
      chosen.pop_back();
      used_b.erase(cb);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const Generator& a, const Generator& b) { return a.vertices < b.vertices; });
  return out;
}

Domain DomainSolution::particular_domain() const {
  if (!particular) throw std::logic_error("infeasible system has no particular solution");
  Domain D(*dg);
  D.coeff = *particular;
  return D;
}

Domain DomainSolution::basis_domain(int i) const {
  Domain D(*dg);
  D.coeff = basis[i];
  return D;
}

namespace {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

// Column-style integer echelon: M * U = H with U unimodular. Kernel of M
// is spanned by the U columns matching zero H columns. Deterministic.
struct ColumnReduction {
  Mat H;  // rows x cols, echelon by columns
  Mat U;  // cols x cols (column operations applied to identity)
  std::vector<int> pivot_row_of_col;

  ColumnReduction(Mat M, int cols) : H(std::move(M)) {
    int rows = (int)H.size();
    U.assign(cols, Vec(cols, 0));
    for (int i = 0; i < cols; ++i) U[i][i] = 1;
    pivot_row_of_col.assign(cols, -1);

    auto col_op_sub = [&](int dst, int src, long long f) {
      if (f == 0) return;
      for (int r = 0; r < rows; ++r) H[r][dst] -= f * H[r][src];
      for (int r = 0; r < cols; ++r) U[r][dst] -= f * U[r][src];
    };
    auto col_swap = [&](int a, int b) {
      if (a == b) return;
      for (int r = 0; r < rows; ++r) std::swap(H[r][a], H[r][b]);
      for (int r = 0; r < cols; ++r) std::swap(U[r][a], U[r][b]);
    };
    auto col_negate = [&](int c) {
      for (int r = 0; r < rows; ++r) H[r][c] = -H[r][c];
      for (int r = 0; r < cols; ++r) U[r][c] = -U[r][c];
    };

    int lead = 0;
    for (int row = 0; row < rows && lead < cols; ++row) {
      // gcd-reduce the row segment [lead, cols) into column `lead`
      while (true) {
        int nz = -1;
        for (int c = lead; c < cols; ++c)
          if (H[row][c] != 0 && (nz == -1 || llabs(H[row][c]) < llabs(H[row][nz]))) nz = c;
        if (nz == -1) break;
        col_swap(lead, nz);
        if (H[row][lead] < 0) col_negate(lead);
        bool cleared = true;
        for (int c = lead + 1; c < cols; ++c) {
          long long q = H[row][c] / H[row][lead];
          col_op_sub(c, lead, q);
          if (H[row][c] != 0) cleared = false;
        }
        if (cleared) break;
      }
      if (lead < cols && H[row][lead] != 0) {
        pivot_row_of_col[lead] = row;
        ++lead;
      }
    }
    rank = lead;
  }

  int rank = 0;
};

// Row Hermite normal form with positive pivots and entries above each
// pivot reduced into [0, pivot). Canonical for a given lattice.
Mat row_hnf(Mat rows) {
  if (rows.empty()) return rows;
  int cols = (int)rows.front().size();
  int top = 0;
  for (int col = 0; col < cols && top < (int)rows.size(); ++col) {
    while (true) {
      int best = -1;
      for (int r = top; r < (int)rows.size(); ++r)
        if (rows[r][col] != 0 && (best == -1 || llabs(rows[r][col]) < llabs(rows[best][col]))) best = r;
      if (best == -1) break;
      std::swap(rows[top], rows[best]);
      if (rows[top][col] < 0)
        for (auto& x : rows[top]) x = -x;
      bool cleared = true;
      for (int r = top + 1; r < (int)rows.size(); ++r) {
        long long q = rows[r][col] / rows[top][col];
        if (q != 0)
          for (int c = 0; c < cols; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[top][col] != 0) {
      // reduce entries above the pivot
      for (int r = 0; r < top; ++r) {
        long long q = rows[r][col] / rows[top][col];
        if (rows[r][col] % rows[top][col] < 0) q -= 1;  // floor division
        if (q != 0)
          for (int c = 0; c < cols; ++c) rows[r][c] -= q * rows[top][c];
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

int pivot_col(const Vec& row) {
  for (int c = 0; c < (int)row.size(); ++c)
    if (row[c] != 0) return c;
  return -1;
}

}  // namespace

DomainSolution solve_domains(const HeegaardDiagram& dg, const GonConfig& cfg) {
  int nr = (int)dg.regions.size();
  Mat M;
  Vec b;

  // corner equations per (configuration position, vertex)
  for (int pos = 0; pos < cfg.sides(); ++pos) {
    int fam = cfg.families[pos];
    PointSum rhs = required_corner_boundary(cfg, pos);
    for (int vi = 0; vi < (int)dg.vertices.size(); ++vi) {
      const Vertex& v = dg.vertices[vi];
      if (v.fam_first != fam && v.fam_second != fam) {
        if (rhs.coeff[vi] != 0)
          throw std::invalid_argument("generator coordinate off its family's curves");
        continue;
      }
      Vec row(nr, 0);
      int sign = (v.fam_first == fam) ? -1 : +1;
      for (int q = 0; q < 4; ++q) row[v.quadrant_region[q]] += sign * (q % 2 == 0 ? 1 : -1);
      M.push_back(std::move(row));
      b.push_back(rhs.coeff[vi]);
    }
  }
  // families outside the configuration: every arc multiplicity vanishes
  std::set<int> listed(cfg.families.begin(), cfg.families.end());
  for (int f = 1; f <= dg.family_count; ++f) {
    if (listed.count(f)) continue;
    for (const Arc& a : dg.arcs) {
      if (dg.curves[a.curve].family != f) continue;
      Vec row(nr, 0);
      row[a.left_region] += 1;
      row[a.right_region] -= 1;
      M.push_back(std::move(row));
      b.push_back(0);
    }
  }

  ColumnReduction red(M, nr);
  DomainSolution sol;
  sol.dg = &dg;

  // kernel basis: columns of U beyond the rank
  Mat kernel;
  for (int c = red.rank; c < nr; ++c) {
    Vec v(nr);
    for (int r = 0; r < nr; ++r) v[r] = red.U[r][c];
    kernel.push_back(std::move(v));
  }
  kernel = row_hnf(std::move(kernel));

  // particular solution: solve H y = b column by column
  Vec y(nr, 0);
  Vec resid = b;
  bool feasible = true;
  for (int c = 0; c < red.rank && feasible; ++c) {
    int pr = red.pivot_row_of_col[c];
    long long piv = red.H[pr][c];
    if (resid[pr] % piv != 0) { feasible = false; break; }
    long long q = resid[pr] / piv;
    y[c] = q;
    if (q != 0)
      for (int r = 0; r < (int)resid.size(); ++r) resid[r] -= q * red.H[r][c];
  }
  if (feasible)
    for (long long r : resid)
      if (r != 0) { feasible = false; break; }

  if (feasible) {
    Vec x(nr, 0);
    for (int c = 0; c < red.rank; ++c)
      if (y[c] != 0)
        for (int r = 0; r < nr; ++r) x[r] += y[c] * red.U[r][c];
    // canonical representative modulo the lattice
    for (const Vec& row : kernel) {
      int pc = pivot_col(row);
      long long piv = row[pc];
      long long q = x[pc] / piv;
      if (x[pc] % piv < 0) q -= 1;
      if (q != 0)
        for (int c = 0; c < nr; ++c) x[c] -= q * row[c];
    }
    std::vector<int> xi(nr);
    for (int c = 0; c < nr; ++c) xi[c] = (int)x[c];
    sol.particular = std::move(xi);
  }

  for (const Vec& row : kernel) {
    std::vector<int> v(nr);
    for (int c = 0; c < nr; ++c) v[c] = (int)row[c];
    sol.basis.push_back(std::move(v));
  }
  return sol;
}

std::vector<Domain> enumerate_positive_domains(const DomainSolution& sol,
                                               const EnumerateOptions& opt) {
  std::vector<Domain> out;
  if (!sol.feasible()) return out;
  if (opt.max_coeff < 0) throw std::invalid_argument("max_coeff must be nonnegative");
  const HeegaardDiagram& dg = *sol.dg;
  int nr = (int)dg.regions.size();
  std::vector<bool> forbidden(nr, false);
  for (int r : opt.forbidden_regions) forbidden[r] = true;

  int rank = (int)sol.basis.size();
  std::vector<int> pivots(rank);
  for (int i = 0; i < rank; ++i) {
    pivots[i] = -1;
    for (int c = 0; c < nr; ++c)
      if (sol.basis[i][c] != 0) { pivots[i] = c; break; }
  }

  std::vector<long long> c(rank, 0);
  std::vector<long long> val(nr);
  std::function<void(int)> rec = [&](int i) {
    if (i == rank) {
      for (int r = 0; r < nr; ++r) {
        long long v = (*sol.particular)[r];
        for (int j = 0; j < rank; ++j) v += c[j] * sol.basis[j][r];
        if (v < 0 || v > opt.max_coeff) return;
        if (forbidden[r] && v != 0) return;
        val[r] = v;
      }
      Domain D(dg);
      for (int r = 0; r < nr; ++r) D.coeff[r] = (int)val[r];
      if (opt.require_positive && !D.is_positive()) return;
      out.push_back(std::move(D));
      return;
    }
    // the pivot column of basis row i is untouched by rows > i, so the
    // box constraint there bounds c[i] exactly
    int pc = pivots[i];
    long long base = (*sol.particular)[pc];
    for (int j = 0; j < i; ++j) base += c[j] * sol.basis[j][pc];
    long long piv = sol.basis[i][pc];  // positive (HNF)
    long long hi = forbidden[pc] ? 0 : opt.max_coeff;
    // need 0 <= base + c[i]*piv <= hi
    long long lo_c = -((base) / piv);
    while (base + lo_c * piv < 0) ++lo_c;
    while (base + (lo_c - 1) * piv >= 0) --lo_c;
    long long hi_c = (hi - base) / piv;
    while (base + hi_c * piv > hi) --hi_c;
    while (base + (hi_c + 1) * piv <= hi) ++hi_c;
    for (c[i] = lo_c; c[i] <= hi_c; ++c[i]) rec(i + 1);
    c[i] = 0;
  };
  rec(0);

  std::sort(out.begin(), out.end(),
            [](const Domain& a, const Domain& b) { return a.coeff < b.coeff; });
  return out;
}

}  // namespace hd
