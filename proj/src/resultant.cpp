#include "polyalg/resultant.hpp"

#include "polyalg/poly_gcd.hpp"

#include <vector>

namespace polyalg {

namespace {

using Matrix = std::vector<std::vector<CoeffPoly>>;

std::vector<CoeffPoly> dense(const CoeffPoly &p, Var x) {
  std::vector<CoeffPoly> c;
  for (auto &[e, part] : p.collect(x)) {
    if (e < 0) throw std::invalid_argument("resultant: negative power of " + x.name());
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(e + 1);
    c[e] = part;
  }
  return c;
}

// Rows of x^k p(x), highest power in column 0, for the given column count.
void push_shifted(Matrix &S, const std::vector<CoeffPoly> &c, std::size_t copies, std::size_t cols) {
  const std::size_t d = c.size() - 1;
  for (std::size_t k = 0; k < copies; ++k) {
    std::vector<CoeffPoly> row(cols);
    for (std::size_t i = 0; i <= d; ++i) row[k + (d - i)] = c[i];
    S.push_back(std::move(row));
  }
}

CoeffPoly bareiss_det(Matrix M) {
  const std::size_t n = M.size();
  if (n == 0) return CoeffPoly(1);
  CoeffPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && M[p][k].is_zero()) ++p;
    if (p == n) return CoeffPoly();
    if (p != k) {
      std::swap(M[p], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M[i][j] = divide_exact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = CoeffPoly();
    }
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

}  // namespace

CoeffPoly resultant(const CoeffPoly &p, const CoeffPoly &q, Var x) {
  auto cp = dense(p, x), cq = dense(q, x);
  if (cp.size() < 2 || cq.size() < 2) throw std::invalid_argument("resultant: both inputs must involve " + x.name());
  const std::size_t m = cp.size() - 1, n = cq.size() - 1;
  Matrix S;
  push_shifted(S, cp, n, m + n);
  push_shifted(S, cq, m, m + n);
  return bareiss_det(std::move(S));
}

CoeffPoly eliminate(const CoeffPoly &p, const CoeffPoly &q, Var x) {
  CoeffPoly r = resultant(p, q, x);
  if (r.is_zero()) throw ZeroResultant("eliminate: common factor in " + x.name() + " between the two polynomials");
  return r;
}

std::pair<CoeffPoly, CoeffPoly> first_subresultant(const CoeffPoly &p, const CoeffPoly &q, Var x) {
  auto cp = dense(p, x), cq = dense(q, x);
  if (cp.size() < 2 || cq.size() < 2) throw std::invalid_argument("first_subresultant: both inputs must involve " + x.name());
  const std::size_t m = cp.size() - 1, n = cq.size() - 1;
  // Sylvester submatrix with n-1 rows of p and m-1 rows of q over m+n-1
  // columns; S_1 coefficients are determinants keeping all but the last two
  // columns plus one of them.
  Matrix S;
  push_shifted(S, cp, n - 1, m + n - 1);
  push_shifted(S, cq, m - 1, m + n - 1);
  const std::size_t rows = S.size();  // m + n - 2
  auto minor_with = [&](std::size_t last_col) {
    Matrix M(rows, std::vector<CoeffPoly>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j + 1 < rows; ++j) M[i][j] = S[i][j];
      M[i][rows - 1] = S[i][last_col];
    }
    return bareiss_det(std::move(M));
  };
  if (rows == 0) return {cq[1], cq[0]};  // both linear: q itself
  return {minor_with(rows - 1), minor_with(rows)};
}

}  // namespace polyalg
