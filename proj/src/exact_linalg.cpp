#include "sandpile/exact_linalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace sandpile {

namespace {

// Lexicographically next k-combination of {0,...,n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

// Bareiss elimination on a scratch copy held in `work` (n x n, row-major).
mpz_class bareiss_det(std::vector<mpz_class>& work, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& {
    return work[i * n + j];
  };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot_row = k;
      while (pivot_row < n && at(pivot_row, k) == 0) ++pivot_row;
      if (pivot_row == n) return 0;
      for (std::size_t j = k; j < n; ++j)
        std::swap(at(k, j), at(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign < 0 ? mpz_class(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

}  // namespace

mpz_class det(const IntegerMatrix& m) {
  if (!m.square())
    throw std::invalid_argument("det: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<mpz_class> work(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i * n + j] = m(i, j);
  return bareiss_det(work, n);
}

mpz_class minors_gcd(const IntegerMatrix& m, std::size_t t,
                     std::size_t max_dim) {
  if (m.rows() > max_dim || m.cols() > max_dim)
    throw std::invalid_argument(
        "minors_gcd: matrix exceeds the brute-force size guard (" +
        std::to_string(max_dim) + ")");
  if (t < 1 || t > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minors_gcd: t out of range");

  std::vector<mpz_class> work(t * t);
  mpz_class g = 0;
  auto rows = first_combination(t);
  do {
    auto cols = first_combination(t);
    do {
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
          work[i * t + j] = m(rows[i], cols[j]);
      mpz_class d = bareiss_det(work, t);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) return g;  // gcd can only stay 1 from here
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

IntegerMatrix SnfResult::diagonal_matrix() const {
  IntegerMatrix d(left.rows(), right.cols());
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

namespace {

// Smallest-magnitude nonzero entry of A[k.., k..]; nullopt when that
// trailing submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(
    const IntegerMatrix& a, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  mpz_class cur;
  for (std::size_t i = k; i < a.rows(); ++i) {
    for (std::size_t j = k; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      cur = abs(a(i, j));
      if (!best || cur < best_abs) {
        best = {{i, j}};
        best_abs = cur;
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(r);
  IntegerMatrix v = IntegerMatrix::identity(c);

  const std::size_t dim = std::min(r, c);
  std::size_t rank = 0;

  for (std::size_t k = 0; k < dim; ++k) {
    // Pull the smallest entry to (k,k) and retry until it divides its row
    // and column; each retry strictly shrinks the pivot, so this stops.
    for (;;) {
      auto pos = min_abs_pivot(a, k);
      if (!pos) goto diagonal_done;
      if (pos->first != k) {
        a.swap_rows(k, pos->first);
        u.swap_rows(k, pos->first);
      }
      if (pos->second != k) {
        a.swap_cols(k, pos->second);
        v.swap_cols(k, pos->second);
      }

      bool exact = true;
      for (std::size_t i = k + 1; i < r && exact; ++i)
        if (a(i, k) % a(k, k) != 0) exact = false;
      for (std::size_t j = k + 1; j < c && exact; ++j)
        if (a(k, j) % a(k, k) != 0) exact = false;

      mpz_class q;
      if (!exact) {
        // Knock every entry down to its remainder and go pick a new pivot.
        for (std::size_t i = k + 1; i < r; ++i) {
          if (a(i, k) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
          for (std::size_t j = k; j < c; ++j) a(i, j) -= q * a(k, j);
          for (std::size_t j = 0; j < r; ++j) u(i, j) -= q * u(k, j);
        }
        for (std::size_t j = k + 1; j < c; ++j) {
          if (a(k, j) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
          for (std::size_t i = k; i < r; ++i) a(i, j) -= q * a(i, k);
          for (std::size_t i = 0; i < c; ++i) v(i, j) -= q * v(i, k);
        }
        continue;
      }

      for (std::size_t i = k + 1; i < r; ++i) {
        if (a(i, k) == 0) continue;
        q = a(i, k) / a(k, k);
        for (std::size_t j = k; j < c; ++j) a(i, j) -= q * a(k, j);
        for (std::size_t j = 0; j < r; ++j) u(i, j) -= q * u(k, j);
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (a(k, j) == 0) continue;
        q = a(k, j) / a(k, k);
        for (std::size_t i = k; i < r; ++i) a(i, j) -= q * a(i, k);
        for (std::size_t i = 0; i < c; ++i) v(i, j) -= q * v(i, k);
      }
      break;
    }
    ++rank;
  }
diagonal_done:

  for (std::size_t k = 0; k < rank; ++k) {
    if (a(k, k) < 0) {
      a.negate_row(k);
      u.negate_row(k);
    }
  }

  // Repair the divisibility chain with 2x2 unimodular blocks that send
  // diag(x, y) to diag(gcd, lcm).  One pass over ordered pairs suffices.
  for (std::size_t i = 0; i + 1 < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      if (a(j, j) % a(i, i) == 0) continue;
      const mpz_class x = a(i, i);
      const mpz_class y = a(j, j);
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
                 y.get_mpz_t());
      const mpz_class xg = x / g;
      const mpz_class yg = y / g;
      // Rows i,j <- [[s, t], [-y/g, x/g]] * rows; dets stay +-1.
      auto row_block = [&](IntegerMatrix& mat) {
        for (std::size_t col = 0; col < mat.cols(); ++col) {
          mpz_class top = s * mat(i, col) + t * mat(j, col);
          mpz_class bot = -yg * mat(i, col) + xg * mat(j, col);
          mat(i, col) = top;
          mat(j, col) = bot;
        }
      };
      // Cols i,j <- cols * [[1, -t*y/g], [1, s*x/g]].
      auto col_block = [&](IntegerMatrix& mat) {
        for (std::size_t row = 0; row < mat.rows(); ++row) {
          mpz_class lft = mat(row, i) + mat(row, j);
          mpz_class rgt = -t * yg * mat(row, i) + s * xg * mat(row, j);
          mat(row, i) = lft;
          mat(row, j) = rgt;
        }
      };
      row_block(a);
      row_block(u);
      col_block(a);
      col_block(v);
    }
  }

  SnfResult out;
  out.diag.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.diag[i] = a(i, i);
  out.rank = rank;
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& u) {
  if (!u.square()) {
    throw std::invalid_argument("inverse_unimodular: matrix is not square");
  }
  // U_l * U * U_r = I for unimodular U, hence U^{-1} = U_r * U_l.
  const SnfResult snf = smith_normal_form(u);
  for (const mpz_class& d : snf.diag) {
    if (d != 1) {
      throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
    }
  }
  return snf.right * snf.left;
}

std::optional<std::vector<mpq_class>> solve_rational(
    const IntegerMatrix& m, const std::vector<mpz_class>& b) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (b.size() != r)
    throw std::invalid_argument("solve_rational: rhs length mismatch");

  // Gauss-Jordan over exact rationals on the augmented matrix.
  std::vector<mpq_class> aug(r * (c + 1));
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& {
    return aug[i * (c + 1) + j];
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) at(i, j) = m(i, j);
    at(i, c) = b[i];
  }

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t pr = row;
    while (pr < r && at(pr, col) == 0) ++pr;
    if (pr == r) continue;
    if (pr != row)
      for (std::size_t j = col; j <= c; ++j) std::swap(at(row, j), at(pr, j));
    const mpq_class inv = 1 / at(row, col);
    for (std::size_t j = col; j <= c; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const mpq_class f = at(i, col);
      for (std::size_t j = col; j <= c; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (at(i, c) != 0) return std::nullopt;  // 0 = nonzero: inconsistent

  std::vector<mpq_class> x(c, mpq_class(0));
  for (auto [pr, pc] : pivots) x[pc] = at(pr, c);
  return x;
}

std::optional<std::vector<mpz_class>> solve_integer(
    const IntegerMatrix& m, const std::vector<mpz_class>& b) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (b.size() != r)
    throw std::invalid_argument("solve_integer: rhs length mismatch");

  const SnfResult snf = smith_normal_form(m);
  const std::vector<mpz_class> ub = snf.left.multiply(b);

  std::vector<mpz_class> y(c, mpz_class(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (i < snf.rank) {
      mpz_class rem;
      mpz_fdiv_qr(y[i].get_mpz_t(), rem.get_mpz_t(), ub[i].get_mpz_t(),
                  snf.diag[i].get_mpz_t());
      if (rem != 0) return std::nullopt;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right.multiply(y);
}

}  // namespace sandpile
