#pragma once

#include <cstddef>
#include <vector>

#include "sandpile/abelian_group.hpp"
#include "sandpile/multigraph.hpp"

namespace sandpile {

/// Three-way comparison of a planar-dual pair: the thick cycle evaluated
/// by the closed-form product formula and by the generic SNF pipeline, and
/// the dual graph evaluated by SNF.
struct DualComparison {
  MultiplicityVector multiplicities;  ///< thick-cycle side
  AbelianGroup closed_form;           ///< product formula on the thick cycle
  AbelianGroup snf_thick;             ///< SNF on the thick cycle
  AbelianGroup snf_dual;              ///< SNF on the dual graph
  bool thick_sides_match = false;     ///< closed_form == snf_thick
  bool dual_isomorphic = false;       ///< snf_dual == closed_form
};

/// Subdivided banana with the given strand lengths versus the thick cycle
/// whose multiplicities are those lengths.
DualComparison banana_dual(const std::vector<std::size_t>& lengths);

/// Book graph B(n, k) versus the thick (k+1)-cycle C_{(1, n-1, ..., n-1)},
/// plus the published closed form Z_{n-1}^{k-2}, which is reported but not
/// asserted (it disagrees with both computed sides; see the README).
struct BookDualReport {
  std::size_t n = 0;
  std::size_t k = 0;
  DualComparison comparison;
  AbelianGroup published_claim;      ///< Z_{n-1}^{k-2}
  bool claim_matches_book = false;   ///< published_claim == snf_dual
};

BookDualReport book_dual(std::size_t n, std::size_t k);

}  // namespace sandpile
