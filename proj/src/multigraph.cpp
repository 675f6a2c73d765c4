#include "sandpile/multigraph.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sandpile/exact_linalg.hpp"

namespace sandpile {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

MultiplicityVector::MultiplicityVector(std::vector<mpz_class> entries)
    : a_(std::move(entries)) {
  if (a_.size() < 2)
    throw std::invalid_argument(
        "multiplicity vector needs at least 2 entries, got " +
        std::to_string(a_.size()));
  for (const auto& v : a_)
    if (v < 1)
      throw std::invalid_argument("invalid multiplicity " + v.get_str() +
                                  ": entries must be >= 1");
}

MultiplicityVector::MultiplicityVector(std::initializer_list<long> entries)
    : MultiplicityVector(std::vector<mpz_class>(entries.begin(), entries.end())) {}

MultiplicityVector MultiplicityVector::parse(const std::string& text) {
  std::vector<mpz_class> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // trim blanks
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty multiplicity in \"" + text + "\"");
    token = token.substr(b, e - b + 1);
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0)
      throw std::invalid_argument("bad multiplicity \"" + token + "\"");
    out.push_back(std::move(v));
  }
  return MultiplicityVector(std::move(out));
}

std::string MultiplicityVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ",";
    s += a_[i].get_str();
  }
  return s + ")";
}

Multigraph::Multigraph(std::size_t vertex_count)
    : n_(vertex_count), w_(vertex_count * vertex_count) {
  if (vertex_count < 1)
    throw std::invalid_argument("multigraph needs at least one vertex");
}

void Multigraph::check_pair(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("vertex index out of range");
}

const mpz_class& Multigraph::weight(std::size_t i, std::size_t j) const {
  check_pair(i, j);
  return w_[i * n_ + j];
}

void Multigraph::set_weight(std::size_t i, std::size_t j, const mpz_class& w) {
  check_pair(i, j);
  if (i == j) throw std::invalid_argument("self-loops are not supported");
  if (w < 0) throw std::invalid_argument("edge multiplicity must be >= 0");
  w_[i * n_ + j] = w;
  w_[j * n_ + i] = w;
}

void Multigraph::add_weight(std::size_t i, std::size_t j, const mpz_class& w) {
  set_weight(i, j, weight(i, j) + w);
}

mpz_class Multigraph::degree(std::size_t i) const {
  check_pair(i, i);
  mpz_class d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += w_[i * n_ + j];
  return d;
}

mpz_class Multigraph::edge_count() const {
  mpz_class total = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) total += w_[i * n_ + j];
  return total;
}

bool Multigraph::connected() const {
  UnionFind uf(n_);
  std::size_t components = n_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (w_[i * n_ + j] > 0 && uf.unite(i, j)) --components;
  return components == 1;
}

Multigraph build_thick_cycle(const MultiplicityVector& a) {
  const std::size_t n = a.size();
  Multigraph g(n);
  if (n == 2) {
    g.set_weight(0, 1, a[0] + a[1]);
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) g.add_weight(i, (i + 1) % n, a[i]);
  return g;
}

Multigraph build_basic(BasicKind kind, std::size_t size) {
  switch (kind) {
    case BasicKind::cycle: {
      if (size < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
      Multigraph g(size);
      for (std::size_t i = 0; i < size; ++i) g.set_weight(i, (i + 1) % size, 1);
      return g;
    }
    case BasicKind::path: {
      if (size < 1) throw std::invalid_argument("path needs at least 1 vertex");
      Multigraph g(size);
      for (std::size_t i = 0; i + 1 < size; ++i) g.set_weight(i, i + 1, 1);
      return g;
    }
    case BasicKind::star: {
      if (size < 1) throw std::invalid_argument("star needs at least 1 vertex");
      Multigraph g(size);
      for (std::size_t i = 1; i < size; ++i) g.set_weight(0, i, 1);
      return g;
    }
  }
  throw std::invalid_argument("unknown basic graph kind");
}

Multigraph cartesian_product(const Multigraph& g, const Multigraph& h) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  Multigraph p(ng * nh);
  auto idx = [nh](std::size_t a, std::size_t b) { return a * nh + b; };
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      for (std::size_t a2 = a + 1; a2 < ng; ++a2)
        if (g.weight(a, a2) > 0)
          p.set_weight(idx(a, b), idx(a2, b), g.weight(a, a2));
      for (std::size_t b2 = b + 1; b2 < nh; ++b2)
        if (h.weight(b, b2) > 0)
          p.set_weight(idx(a, b), idx(a, b2), h.weight(b, b2));
    }
  return p;
}

Multigraph build_book_graph(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1)
    throw std::invalid_argument("book graph needs n >= 2 and k >= 1");
  return cartesian_product(build_basic(BasicKind::star, n + 1),
                           build_basic(BasicKind::path, k));
}

Multigraph build_banana(const std::vector<std::size_t>& lengths) {
  if (lengths.size() < 2)
    throw std::invalid_argument("banana graph needs at least 2 strands");
  std::size_t vertices = 2;
  for (std::size_t len : lengths) {
    if (len < 1) throw std::invalid_argument("strand length must be >= 1");
    vertices += len - 1;
  }
  Multigraph g(vertices);
  std::size_t next = 2;  // poles are 0 and 1
  for (std::size_t len : lengths) {
    if (len == 1) {
      g.add_weight(0, 1, 1);
      continue;
    }
    std::size_t prev = 0;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      g.add_weight(prev, next, 1);
      prev = next++;
    }
    g.add_weight(prev, 1, 1);
  }
  return g;
}

IntegerMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntegerMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = g.degree(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) l(i, j) = -g.weight(i, j);
  }
  return l;
}

IntegerMatrix reduced_laplacian(const Multigraph& g, std::size_t sink) {
  if (sink >= g.vertex_count())
    throw std::out_of_range("sink index out of range");
  return laplacian(g).minor_matrix(sink, sink);
}

mpz_class spanning_tree_count(const Multigraph& g) {
  return abs(det(reduced_laplacian(g, g.vertex_count() - 1)));
}

mpz_class spanning_tree_enumerate(const Multigraph& g, std::size_t guard) {
  const std::size_t n = g.vertex_count();
  const mpz_class total = g.edge_count();
  if (total > guard)
    throw std::invalid_argument(
        "enumeration refused: " + total.get_str() +
        " edges exceed the guard of " + std::to_string(guard));

  // Expand parallel edges into distinct items.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (mpz_class m = g.weight(i, j); m > 0; --m) edges.emplace_back(i, j);

  const std::size_t need = n - 1;
  if (edges.size() < need) return 0;
  if (need == 0) return 1;

  std::vector<std::size_t> pick(need);
  for (std::size_t i = 0; i < need; ++i) pick[i] = i;
  mpz_class count = 0;
  for (;;) {
    UnionFind uf(n);
    bool acyclic = true;
    for (std::size_t i : pick) {
      if (!uf.unite(edges[i].first, edges[i].second)) {
        acyclic = false;
        break;
      }
    }
    // n-1 acyclic edges on n vertices form a spanning tree.
    if (acyclic) ++count;

    std::size_t i = need;
    while (i-- > 0) {
      if (pick[i] + (need - i) < edges.size()) {
        ++pick[i];
        for (std::size_t j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return count;
    }
  }
}

}  // namespace sandpile
