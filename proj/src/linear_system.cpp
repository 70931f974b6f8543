#include "polyalg/linear_system.hpp"

#include "polyalg/poly_gcd.hpp"

namespace polyalg {

namespace {

CoeffPoly as_poly(const NRatFn &f) { return f.as_polynomial().to_coeff_poly(); }

NRatFn as_ratfn(const CoeffPoly &p) { return NRatFn(NPoly::from_coeff_poly(p)); }

}  // namespace

LinearSolution solve_linear(const LinearSystem &sys) {
  const std::size_t m = sys.A.size();
  if (sys.b.size() != m) throw std::invalid_argument("solve_linear: rhs size mismatch");
  const std::size_t n = m ? sys.A[0].size() : sys.unknowns.size();
  for (const auto &row : sys.A)
    if (row.size() != n) throw std::invalid_argument("solve_linear: ragged matrix");
  if (!sys.unknowns.empty() && sys.unknowns.size() != n)
    throw std::invalid_argument("solve_linear: unknown names mismatch");

  // Clear denominators row by row; the augmented column sits at index n.
  std::vector<std::vector<CoeffPoly>> M(m, std::vector<CoeffPoly>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    NRatFn scale(1);
    for (std::size_t j = 0; j <= n; ++j) {
      const NRatFn &e = j < n ? sys.A[i][j] : sys.b[i];
      if (!e.is_polynomial() || !e.den().coeff(0).is_monomial()) scale *= NRatFn(e.den());
    }
    for (std::size_t j = 0; j <= n; ++j) M[i][j] = as_poly((j < n ? sys.A[i][j] : sys.b[i]) * scale);
  }

  std::vector<std::size_t> pivot_cols;
  CoeffPoly prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && M[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j)
        M[i][j] = divide_exact(M[r][col] * M[i][j] - M[i][col] * M[r][j], prev);
      M[i][col] = CoeffPoly();
    }
    prev = M[r][col];
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!M[i][n].is_zero())
      throw InconsistentSystem("solve_linear: inconsistent equation, residual " + M[i][n].str());

  LinearSolution sol;
  sol.rank = r;
  sol.x.assign(n, NRatFn());
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::string name = sys.unknowns.empty() ? "x" + std::to_string(j + 1) : sys.unknowns[j];
    sol.free_variables.push_back(name);
    sol.x[j] = NRatFn(CoeffPoly::var(name));
  }
  for (std::size_t k = r; k-- > 0;) {
    std::size_t col = pivot_cols[k];
    NRatFn acc = as_ratfn(M[k][n]);
    for (std::size_t j = col + 1; j < n; ++j)
      if (!M[k][j].is_zero()) acc -= as_ratfn(M[k][j]) * sol.x[j];
    sol.x[col] = acc / as_ratfn(M[k][col]);
  }

  sol.certified = true;
  for (std::size_t i = 0; i < m; ++i) {
    NRatFn res = -sys.b[i];
    for (std::size_t j = 0; j < n; ++j)
      if (!sys.A[i][j].is_zero()) res += sys.A[i][j] * sol.x[j];
    sol.certified = sol.certified && res.is_zero();
    sol.residual.push_back(std::move(res));
  }
  return sol;
}

}  // namespace polyalg
