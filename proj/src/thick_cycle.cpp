#include "sandpile/thick_cycle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sandpile/exact_linalg.hpp"

namespace sandpile {

namespace {

// Smallest positive representative of i modulo n, for 1-based indices.
std::size_t wrap_index(long i, std::size_t n) {
  const long m = static_cast<long>(n);
  long r = (i - 1) % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r) + 1;
}

// The first n primes, used as generic pairwise-coprime multiplicities for
// the determinant post-check: a monomial identity in the a_i that holds at
// (2, 3, 5, 7, ...) cannot be an accidental numeric coincidence.
MultiplicityVector generic_prime_vector(std::size_t n) {
  std::vector<mpz_class> primes;
  primes.reserve(n);
  mpz_class p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primes.push_back(p);
  }
  return MultiplicityVector(std::move(primes));
}

std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(i - 1);
  return out;
}

mpz_class selected_product(const MultiplicityVector& a,
                           const std::vector<std::size_t>& subset) {
  mpz_class prod = 1;
  for (std::size_t i : subset) prod *= a[i - 1];
  return prod;
}

void check_selection_determinant(std::size_t n, const IndexSelection& sel,
                                 const std::vector<std::size_t>& subset) {
  const MultiplicityVector generic = generic_prime_vector(n);
  const IntegerMatrix lp = permuted_laplacian(generic);
  const std::vector<std::size_t> rows = to_zero_based(sel.rows);
  const std::vector<std::size_t> cols = to_zero_based(sel.cols);
  const mpz_class d = det(lp.submatrix(rows, cols));
  if (abs(d) != selected_product(generic, subset)) {
    std::ostringstream msg;
    msg << "index selection failed the generic determinant post-check for"
           " n = "
        << n << ", I = {";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i > 0) msg << ",";
      msg << subset[i];
    }
    msg << "}";
    throw std::logic_error(msg.str());
  }
}

}  // namespace

mpz_class order_thick_cycle(const MultiplicityVector& a) {
  const std::size_t n = a.size();
  // prefix[i] = a_1 ... a_i, suffix[i] = a_{i+1} ... a_n (1-based slices).
  std::vector<mpz_class> prefix(n + 1, 1), suffix(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * a[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * a[i];
  mpz_class total = 0;
  for (std::size_t i = 0; i < n; ++i) total += prefix[i] * suffix[i + 1];
  return total;
}

mpz_class gcd_products(const MultiplicityVector& a, std::size_t t) {
  const std::size_t n = a.size();
  if (t < 1 || t > n) {
    throw std::invalid_argument("gcd_products: t must satisfy 1 <= t <= n");
  }
  // G[j] after processing k entries holds gcd over all j-element products
  // drawn from those entries (0 while k < j, since gcd(0, x) = x).
  std::vector<mpz_class> g(t + 1, 0);
  g[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t top = std::min(t, k + 1);
    for (std::size_t j = top; j >= 1; --j) {
      g[j] = gcd(g[j], mpz_class(a[k] * g[j - 1]));
    }
  }
  return g[t];
}

std::vector<mpz_class> gcd_sequence(const MultiplicityVector& a) {
  std::vector<mpz_class> seq;
  const std::size_t n = a.size();
  if (n < 3) return seq;
  seq.reserve(n - 2);
  for (std::size_t t = 1; t + 2 <= n; ++t) seq.push_back(gcd_products(a, t));
  return seq;
}

AbelianGroup thick_cycle_group(const MultiplicityVector& a) {
  const std::size_t n = a.size();
  if (n == 2) {
    return AbelianGroup({mpz_class(a[0] + a[1])});
  }
  const std::vector<mpz_class> g = gcd_sequence(a);
  std::vector<mpz_class> chain;
  chain.reserve(n - 1);
  mpz_class prev = 1;
  for (const mpz_class& gt : g) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), gt.get_mpz_t(),
                prev.get_mpz_t());
    if (r != 0) {
      throw std::logic_error("thick_cycle_group: g_{t-1} does not divide g_t");
    }
    chain.push_back(q);
    prev = gt;
  }
  const mpz_class order = order_thick_cycle(a);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), order.get_mpz_t(),
              prev.get_mpz_t());
  if (r != 0) {
    throw std::logic_error(
        "thick_cycle_group: g_{n-2} does not divide the group order");
  }
  chain.push_back(q);
  return AbelianGroup(std::move(chain));
}

IntegerMatrix permuted_laplacian(const MultiplicityVector& a) {
  const std::size_t n = a.size();
  if (n < 3) {
    throw std::invalid_argument("permuted_laplacian: requires n >= 3");
  }
  const IntegerMatrix l = laplacian(build_thick_cycle(a));
  IntegerMatrix lp(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lp(i, j) = l(i, (j + 1) % n);
    }
  }
  return lp;
}

IndexSelection select_minor_indices(std::size_t n,
                                    const std::vector<std::size_t>& subset) {
  if (n < 3) {
    throw std::invalid_argument("select_minor_indices: requires n >= 3");
  }
  const std::size_t t = subset.size();
  if (t == 0) {
    throw std::invalid_argument("select_minor_indices: empty index subset");
  }
  if (t > n - 2) {
    throw std::invalid_argument(
        "select_minor_indices: subset size must be at most n - 2");
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (subset[i] < 1 || subset[i] > n) {
      throw std::invalid_argument(
          "select_minor_indices: indices must lie in 1..n");
    }
    if (i > 0 && subset[i - 1] >= subset[i]) {
      throw std::invalid_argument(
          "select_minor_indices: indices must be strictly ascending");
    }
  }

  const auto in_subset = [&subset](std::size_t i) {
    return std::binary_search(subset.begin(), subset.end(), i);
  };

  IndexSelection sel;
  sel.rows = subset;
  sel.cols = subset;

  // Step 1: -a_i alone in its row of L'[I, I] means i-1, i-2 are outside I;
  // alone in its column means i+1, i+2 are outside I.  Either way the
  // subset-by-subset submatrix itself is block triangular.
  for (std::size_t i : subset) {
    const long s = static_cast<long>(i);
    const bool row_alone = !in_subset(wrap_index(s - 1, n)) &&
                           !in_subset(wrap_index(s - 2, n));
    const bool col_alone = !in_subset(wrap_index(s + 1, n)) &&
                           !in_subset(wrap_index(s + 2, n));
    if (row_alone || col_alone) {
      sel.step1 = true;
      break;
    }
  }

  if (!sel.step1) {
    // Step 2: walk k downward; a gap of exactly 2 between the current
    // R_k and R_{k-1} moves position k-1 one step along the cycle so its
    // diagonal entry -a_{i_{k-1}} is taken from the lowermost diagonal
    // of L' instead.  A cascade of gap-2 pairs resolves the transient
    // duplicate column indices this creates.
    std::size_t iteration = 0;
    for (std::size_t k = t; k >= 2; --k) {
      MinorSelectionStep step;
      step.iteration = ++iteration;
      step.k = k;
      step.r_k = sel.rows[k - 1];
      step.r_prev = sel.rows[k - 2];
      step.difference =
          static_cast<long>(step.r_k) - static_cast<long>(step.r_prev);
      step.changed = (step.difference == 2);
      if (step.changed) {
        sel.rows[k - 2] += 1;  // stays <= n - 1: R_{k-1} = R_k - 2 <= n - 2
        sel.cols[k - 2] = wrap_index(static_cast<long>(sel.cols[k - 2]) - 1, n);
      }
      step.rows = sel.rows;
      step.cols = sel.cols;
      sel.trace.push_back(std::move(step));
    }

    // The walk never examines the cyclic pair (i_t, i_1).  Each selected
    // index i takes its -a_i either from the main diagonal at (i, i) or,
    // after a move, from the lowermost diagonal at (i+1, i-1) mod n; two
    // selected indices that are adjacent on the cycle (gap 1) collide in a
    // row or column unless they use the same diagonal.  The only way the
    // walk can violate that for the wrap-around pair is subset = {1, ..., n}
    // ends: position t never moves (column n stays taken), while position 1
    // can be moved, wrapping its column to n - a duplicate.  Moving the
    // whole leading run of consecutive indices back to the main diagonal
    // restores a valid selection: runs are separated by gap-2 pairs, across
    // which mixed diagonals are always safe, and with t <= n - 2 there are
    // at least two such separations, so some later position still uses the
    // lowermost diagonal and the selected entries stay block triangular.
    if (subset.front() == 1 && subset.back() == n && sel.rows.front() != 1) {
      sel.wrap_repair = true;
      for (std::size_t p = 0; p < t; ++p) {
        if (p > 0 && subset[p] != subset[p - 1] + 1) break;
        sel.rows[p] = subset[p];
        sel.cols[p] = subset[p];
      }
    }
  }

  check_selection_determinant(n, sel, subset);
  return sel;
}

bool verify_selected_minor(const MultiplicityVector& a,
                           const std::vector<std::size_t>& subset) {
  const IndexSelection sel = select_minor_indices(a.size(), subset);
  const IntegerMatrix lp = permuted_laplacian(a);
  const mpz_class d =
      det(lp.submatrix(to_zero_based(sel.rows), to_zero_based(sel.cols)));
  return abs(d) == selected_product(a, subset);
}

}  // namespace sandpile
