#pragma once

#include <string>

#include "maxsym/graph_of_groups.hpp"
#include "maxsym/perm_group.hpp"

namespace maxsym {

// Plain multigraph; loops and parallel edges allowed.
struct SimpleGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  bool connected() const;
  int component_count() const;
  // E - V + 1 for connected graphs; throws on disconnected input
  long long rank() const;
};

// iteratively removes valence-1 vertices with their edges; rank unchanged
SimpleGraph prune_free_edges(const SimpleGraph& g);

// one midpoint vertex per edge; avoids edge inversions when importing
// undirected symmetric data
SimpleGraph subdivide(const SimpleGraph& g);

// A subgroup of an enumerated group, stored as element indices.
struct Subgroup {
  std::vector<int> gens;     // generating element indices
  std::vector<int> members;  // sorted element indices, closure of gens

  long long order() const { return static_cast<long long>(members.size()); }
  bool contains(int element_index) const;
};

Subgroup subgroup_from_gens(const PermGroup& G, std::vector<int> gen_indices);
Subgroup subgroup_from_members(const PermGroup& G, std::vector<int> member_indices);
// greedy deterministic generating set for a predicate-defined subgroup
template <typename Pred>
Subgroup subgroup_where(const PermGroup& G, Pred pred) {
  std::vector<int> members;
  for (int i = 0; i < static_cast<int>(G.order()); ++i)
    if (pred(G.element(i))) members.push_back(i);
  return subgroup_from_members(G, std::move(members));
}

// A finite graph of finite groups realized inside a concrete group: vertex
// and edge subgroups of `target` plus a connecting element per edge.
struct RealizedGraphOfGroups {
  GroupPtr target;
  int num_vertices = 0;
  struct Edge {
    int origin = 0, terminus = 0;
  };
  std::vector<Edge> edges;
  std::vector<Subgroup> vertex_subgroups;
  std::vector<Subgroup> edge_subgroups;
  std::vector<int> connecting;  // element index of t_e, identity by default

  // H_e inside H_origin, t_e^-1 H_e t_e inside H_terminus, connected base
  void validate() const;
  AbstractSignature signature() const;
};

// The finite covering defined by the realized data: one vertex per coset of
// each vertex subgroup, one edge per coset of each edge subgroup, with the
// target acting by left multiplication on coset labels.
class CoveringGraph {
public:
  explicit CoveringGraph(const RealizedGraphOfGroups& spec);

  const RealizedGraphOfGroups& base() const { return spec_; }
  const PermGroup& group() const { return *spec_.target; }

  int num_vertices() const { return static_cast<int>(vertex_cells_.size()); }
  int num_edges() const { return static_cast<int>(edge_cells_.size()); }

  struct Cell {
    int base_index;  // base vertex or edge
    int coset_rep;   // canonical (minimal) coset representative, element index
  };
  const std::vector<Cell>& vertices() const { return vertex_cells_; }
  const std::vector<Cell>& edges() const { return edge_cells_; }
  int edge_origin(int covering_edge) const { return edge_origin_[covering_edge]; }
  int edge_terminus(int covering_edge) const { return edge_terminus_[covering_edge]; }

  // left action of target element g on covering cells
  int act_on_vertex(int element_index, int covering_vertex) const;
  int act_on_edge(int element_index, int covering_edge) const;

  SimpleGraph to_simple_graph() const;
  std::string to_dot() const;

private:
  RealizedGraphOfGroups spec_;
  std::vector<Cell> vertex_cells_, edge_cells_;
  std::vector<int> vertex_cell_offset_, edge_cell_offset_;
  // per base cell: element index -> covering cell id
  std::vector<std::vector<int>> vertex_coset_of_, edge_coset_of_;
  std::vector<int> edge_origin_, edge_terminus_;
};

CoveringGraph build_covering(const RealizedGraphOfGroups& spec);

long long graph_rank(const CoveringGraph& c);
long long graph_rank(const SimpleGraph& g);

// elements acting trivially on every covering vertex and edge
PermGroup action_kernel(const CoveringGraph& c);

long long vertex_stabilizer_order(const CoveringGraph& c, int covering_vertex);
long long edge_stabilizer_order(const CoveringGraph& c, int covering_edge);

struct GenusReport {
  Rational chi;
  long long group_order = 0;
  long long covering_vertices = 0, covering_edges = 0;
  long long rank = 0, expected_rank = 0;
  bool ok = false;
};
GenusReport verify_genus_formula(const RealizedGraphOfGroups& spec);

// orbit space of the covering under the group action equals the base graph
bool quotient_matches_base(const CoveringGraph& c);

// per-edge audit of the 6c(g-1) envelope for faithful actions whose base
// has no trivial edges
struct EdgeBoundAudit {
  int base_edge;
  long long edge_order, bound, group_order;
  bool ok;
};
std::vector<EdgeBoundAudit> audit_edge_order_bounds(const RealizedGraphOfGroups& spec);

}  // namespace maxsym
