#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sandpile/integer_matrix.hpp"

namespace sandpile {

/// Ordered edge multiplicities (a_1, ..., a_n) of a thick cycle.
/// Every entry is at least 1 and the length is at least 2.
class MultiplicityVector {
public:
  explicit MultiplicityVector(std::vector<mpz_class> entries);
  MultiplicityVector(std::initializer_list<long> entries);

  /// Parses "3,2,4,2,3".  Throws std::invalid_argument on malformed input.
  static MultiplicityVector parse(const std::string& text);

  std::size_t size() const { return a_.size(); }
  const mpz_class& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<mpz_class>& entries() const { return a_; }

  bool operator==(const MultiplicityVector&) const = default;

  std::string to_string() const;  // "(3,2,4,2,3)"

private:
  std::vector<mpz_class> a_;
};

/// Undirected multigraph: vertex count plus a symmetric nonnegative
/// edge-multiplicity function with zero diagonal.  Vertices are 0-based
/// contiguous indices; 1-based labels appear only in I/O.
class Multigraph {
public:
  explicit Multigraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return n_; }

  const mpz_class& weight(std::size_t i, std::size_t j) const;
  void set_weight(std::size_t i, std::size_t j, const mpz_class& w);
  void add_weight(std::size_t i, std::size_t j, const mpz_class& w);

  mpz_class degree(std::size_t i) const;

  /// Total number of edges counted with multiplicity.
  mpz_class edge_count() const;

  /// Union-find over the positive-weight edges.
  bool connected() const;

  bool operator==(const Multigraph&) const = default;

private:
  void check_pair(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<mpz_class> w_;  // n x n, symmetric, zero diagonal
};

/// Thick cycle on n >= 2 vertices: weight(v_i, v_{i+1}) = a_i, indices mod n.
/// For n = 2 both bundles join the same pair, so weight(v_0, v_1) = a_1 + a_2.
Multigraph build_thick_cycle(const MultiplicityVector& a);

enum class BasicKind { cycle, path, star };

/// Simple named graphs with all multiplicities 1.  `size` is the vertex
/// count: path P_k has k vertices, star S_m has one center and m-1 leaves,
/// cycle C_n needs n >= 3.
Multigraph build_basic(BasicKind kind, std::size_t size);

/// Cartesian product: vertex (g, h) is index g * H.vertex_count() + h.
Multigraph cartesian_product(const Multigraph& g, const Multigraph& h);

/// Book graph B(n, k) = star S_{n+1} x path P_k (Cartesian product).
Multigraph build_book_graph(std::size_t n, std::size_t k);

/// Two pole vertices joined by internally disjoint paths; strand i has
/// length lengths[i], i.e. lengths[i] - 1 interior vertices.  Poles are
/// vertices 0 and 1.
Multigraph build_banana(const std::vector<std::size_t>& lengths);

/// Laplacian: degrees on the diagonal, negated multiplicities off it.
/// Symmetric with zero row and column sums.
IntegerMatrix laplacian(const Multigraph& g);

/// Laplacian with the sink's row and column removed.
IntegerMatrix reduced_laplacian(const Multigraph& g, std::size_t sink);

/// |det(reduced_laplacian)|; the spanning-tree count for connected graphs
/// and 0 for disconnected ones.  Independent of the sink choice.
mpz_class spanning_tree_count(const Multigraph& g);

/// Default ceiling on edges (with multiplicity) for the enumeration oracle.
inline constexpr std::size_t kEnumerationGuard = 16;

/// Spanning trees counted by exhaustive enumeration over (n-1)-edge
/// subsets, parallel edges distinct.  Refuses graphs with more than
/// `guard` edges counted with multiplicity.
mpz_class spanning_tree_enumerate(const Multigraph& g,
                                  std::size_t guard = kEnumerationGuard);

}  // namespace sandpile
