#pragma once

#include <utility>
#include <vector>

#include "maxsym/rational.hpp"

namespace maxsym {

struct NonIntegralGenus : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orders-only graph-of-groups data: vertex/edge group orders plus incidence.
struct AbstractSignature {
  std::vector<long long> vertex_orders;
  std::vector<long long> edge_orders;
  std::vector<std::pair<int, int>> incidence;  // endpoints per edge, loops allowed

  static AbstractSignature one_edge(long long a, long long b, long long c);

  bool connected() const;
  // connectivity plus edge-order divisibility into both endpoints
  void validate() const;
};

// sum of 1/|G_v| minus sum of 1/|G_e|, exact
Rational euler_char(const AbstractSignature& sig);

// g with g - 1 = -chi * order; throws NonIntegralGenus unless that product
// is a positive integer
long long genus(const AbstractSignature& sig, long long order);

// One-edge candidate type (k, n) with trivial edge group.
struct CandidateType {
  long long k, n;
  long long target_order;
  long long genus;
  bool operator==(const CandidateType&) const = default;
};

// All one-edge types that could beat the 2(g+1) baseline for a free action:
// (2,n) for 3 <= n <= g with even integral value, plus (3,3),(3,4),(3,5)
// with integral values above the baseline; descending by target order,
// ties by smaller n.
std::vector<CandidateType> candidate_orders_free_handle(long long g);

// integral values 4n(g-1)/(n-2), n >= 3, down to the 4(g+1) floor
std::vector<long long> candidate_values_handlebody(long long g);

struct GraphDichotomy {
  long long six_value = 0;   // 6(g-1), one-edge type (2,3)
  long long four_value = 0;  // 4(g-1), one-edge type (2,4)
  AbstractSignature six_signature;
  AbstractSignature four_signature;
};
GraphDichotomy graph_trivial_edge_dichotomy(long long g);

// Diagnostic sweep: all connected signatures with trivial edge groups,
// at most max_vertices/max_edges cells and vertex orders <= max_order,
// whose -chi lies in (0, neg_chi_bound).  Used to cross-check that only
// the one-edge types above survive below the baseline threshold.
std::vector<AbstractSignature> enumerate_trivial_edge_signatures(int max_vertices, int max_edges,
                                                                 long long max_order,
                                                                 const Rational& neg_chi_bound);

}  // namespace maxsym
