#pragma once

#include "maxsym/hom.hpp"

namespace maxsym {

// One-edge amalgam A *_C B of concrete finite groups; edge order 1 means
// the free product.
struct AmalgamSpec {
  GroupPtr factor_a, factor_b, edge;
  GroupHom embed_a, embed_b;  // injective, edge into each factor

  static AmalgamSpec free_product(GroupPtr a, GroupPtr b);
  static AmalgamSpec with_edge(GroupPtr a, GroupPtr b, GroupPtr edge, GroupHom embed_a,
                               GroupHom embed_b);

  bool is_free_product() const { return edge->order() == 1; }
  void validate() const;
};

// A surjection of the amalgam onto `target`, injective on both factors and
// agreeing on the amalgamated edge; such surjections have free kernel.
struct EpiWitness {
  GroupHom hom_a, hom_b;
  GroupPtr target;

  bool satisfies_invariants(const AmalgamSpec& spec) const;
};

enum class SearchMode { first, all };

struct EpiSearchOptions {
  SearchMode mode = SearchMode::all;
  int workers = 1;
  bool dedupe_conjugacy = false;
};

// Backtracking over generator images, pruned by exact order preservation
// and bounded fiber-product closures.  Empty result = proven nonexistence
// against this target.  mode=all is exhaustive; output order is canonical
// and thread-count independent.
std::vector<EpiWitness> find_epis(const AmalgamSpec& spec, GroupPtr target,
                                  const EpiSearchOptions& options = {});

// true iff the kernel of the induced surjection is torsion-free, i.e. both
// factor homs are injective; single authority used by callers
bool torsion_free_kernel(const EpiWitness& w);

// test oracle: full Cartesian enumeration of image tuples, no pruning
std::vector<EpiWitness> find_epis_naive(const AmalgamSpec& spec, GroupPtr target);

}  // namespace maxsym
