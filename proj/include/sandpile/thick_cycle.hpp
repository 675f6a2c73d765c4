#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "sandpile/abelian_group.hpp"
#include "sandpile/integer_matrix.hpp"
#include "sandpile/multigraph.hpp"

namespace sandpile {

/// Order of the sandpile group of the thick cycle with multiplicities a:
/// the sum over i of the products of all entries except a_i.
mpz_class order_thick_cycle(const MultiplicityVector& a);

/// g_t: gcd of the products a_{i_1}...a_{i_t} over all size-t index
/// subsets, 1 <= t <= n.  Computed by the dynamic program
///   G[t][k] = gcd(G[t][k-1], a_k * G[t-1][k-1]),
/// so the C(n,t) subsets are never enumerated.
mpz_class gcd_products(const MultiplicityVector& a, std::size_t t);

/// The sequence (g_1, ..., g_{n-2}); empty for n = 2.
std::vector<mpz_class> gcd_sequence(const MultiplicityVector& a);

/// Closed-form sandpile group of a thick cycle: invariant factors
/// (g_1, g_2/g_1, ..., g_{n-2}/g_{n-3}, |S|/g_{n-2}) with units dropped.
/// For n = 2 the group is cyclic of order a_1 + a_2.
AbelianGroup thick_cycle_group(const MultiplicityVector& a);

/// The thick-cycle Laplacian with every column shifted one place so that
/// -a_i lands on the main diagonal.  Same minors (up to sign) and the same
/// Smith normal form as the Laplacian itself.  Requires n >= 3.
IntegerMatrix permuted_laplacian(const MultiplicityVector& a);

/// One iteration of the index-reselection loop, for tracing.
struct MinorSelectionStep {
  std::size_t iteration = 0;  // 1-based
  std::size_t k = 0;          // pair (k-1, k) examined, 1-based positions
  std::size_t r_k = 0;        // R_k at examination time
  std::size_t r_prev = 0;     // R_{k-1} at examination time
  long difference = 0;        // r_k - r_prev
  bool changed = false;
  std::vector<std::size_t> rows;  // R after this iteration
  std::vector<std::size_t> cols;  // C after this iteration
};

/// Row and column indices (1-based, into the permuted Laplacian) whose
/// submatrix has determinant +- the product of the selected multiplicities.
struct IndexSelection {
  std::vector<std::size_t> rows;  // R
  std::vector<std::size_t> cols;  // C
  bool step1 = false;             // isolated row/column shortcut applied
  bool wrap_repair = false;       // cyclic end-pair fix applied after the walk
  std::vector<MinorSelectionStep> trace;  // empty when step1
};

/// Selects a minor of the permuted Laplacian equal to +-prod_{i in subset} a_i.
/// `subset` holds 1-based indices, sorted ascending, with 1 <= |subset| <= n-2.
///
/// Step 1: if some selected index has an isolated row or column in the
/// subset-by-subset submatrix, R = C = subset.  Step 2 otherwise walks k
/// from |subset| down to 2 and, whenever the current R_k - R_{k-1} equals 2,
/// bumps R_{k-1} up and C_{k-1} down (indices wrap modulo n into 1..n).
///
/// The walk only examines consecutive positions, never the cyclic pair
/// (last, first).  When the subset contains both 1 and n, those two indices
/// are adjacent on the cycle and must draw their entries from the same
/// diagonal of L'; if the walk has moved position 1 off the main diagonal
/// while position t stayed on it, the leading run of consecutive indices is
/// moved back (wrap_repair).  See select_minor_indices in the .cpp for why
/// this always restores a valid selection.
///
/// Every selection is validated by a determinant check at pairwise-coprime
/// generic multiplicities; a failed check throws std::logic_error rather
/// than returning a wrong answer.
IndexSelection select_minor_indices(std::size_t n,
                                    const std::vector<std::size_t>& subset);

/// True iff |det(L'[R, C])| equals the product of the selected entries of a,
/// for the selection returned by select_minor_indices.
bool verify_selected_minor(const MultiplicityVector& a,
                           const std::vector<std::size_t>& subset);

}  // namespace sandpile
