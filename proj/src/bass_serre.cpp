#include "maxsym/bass_serre.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace maxsym {

namespace {

std::vector<int> uf_components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = find(i);
  return root;
}

}  // namespace

bool SimpleGraph::connected() const { return component_count() <= 1; }

int SimpleGraph::component_count() const {
  if (num_vertices == 0) return 0;
  auto root = uf_components(num_vertices, edges);
  std::vector<int> roots(root.begin(), root.end());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return static_cast<int>(roots.size());
}

long long SimpleGraph::rank() const {
  int comps = component_count();
  if (comps != 1)
    throw std::invalid_argument("graph rank: input has " + std::to_string(comps) +
                                " components, expected a connected graph");
  return static_cast<long long>(edges.size()) - num_vertices + 1;
}

SimpleGraph prune_free_edges(const SimpleGraph& g) {
  std::vector<char> removed_vertex(g.num_vertices, 0);
  std::vector<char> removed_edge(g.edges.size(), 0);
  for (;;) {
    std::vector<int> valence(g.num_vertices, 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (removed_edge[e]) continue;
      auto [u, v] = g.edges[e];
      if (u == v) {
        valence[u] += 2;
      } else {
        ++valence[u];
        ++valence[v];
      }
    }
    int victim = -1;
    for (int v = 0; v < g.num_vertices; ++v)
      if (!removed_vertex[v] && valence[v] == 1) {
        victim = v;
        break;
      }
    if (victim < 0) break;
    removed_vertex[victim] = 1;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (!removed_edge[e] && (g.edges[e].first == victim || g.edges[e].second == victim))
        removed_edge[e] = 1;
  }
  // keep isolated vertices only if everything was pruned away to one point
  SimpleGraph out;
  std::vector<int> remap(g.num_vertices, -1);
  for (int v = 0; v < g.num_vertices; ++v)
    if (!removed_vertex[v]) remap[v] = out.num_vertices++;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!removed_edge[e]) out.edges.emplace_back(remap[g.edges[e].first], remap[g.edges[e].second]);
  return out;
}

SimpleGraph subdivide(const SimpleGraph& g) {
  SimpleGraph out;
  out.num_vertices = g.num_vertices + static_cast<int>(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int mid = g.num_vertices + static_cast<int>(e);
    out.edges.emplace_back(g.edges[e].first, mid);
    out.edges.emplace_back(mid, g.edges[e].second);
  }
  return out;
}

bool Subgroup::contains(int element_index) const {
  return std::binary_search(members.begin(), members.end(), element_index);
}

Subgroup subgroup_from_gens(const PermGroup& G, std::vector<int> gen_indices) {
  std::vector<Permutation> gens;
  gens.reserve(gen_indices.size());
  for (int i : gen_indices) gens.push_back(G.element(i));
  PermGroup H = PermGroup::generate(G.degree(), gens, G.order());
  Subgroup s;
  s.gens = std::move(gen_indices);
  s.members.reserve(H.order());
  for (const auto& h : H.elements()) {
    int idx = G.index_of(h);
    if (idx < 0) throw std::invalid_argument("subgroup generator escapes the parent group");
    s.members.push_back(idx);
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

Subgroup subgroup_from_members(const PermGroup& G, std::vector<int> member_indices) {
  std::sort(member_indices.begin(), member_indices.end());
  // deterministic greedy generators, then verify closure
  std::vector<int> gens;
  Subgroup cur;
  cur.members = {G.identity_index()};
  for (int m : member_indices) {
    if (cur.contains(m)) continue;
    gens.push_back(m);
    cur = subgroup_from_gens(G, gens);
  }
  if (cur.members != member_indices)
    throw std::invalid_argument("member set is not closed under the group operation");
  cur.gens = std::move(gens);
  return cur;
}

void RealizedGraphOfGroups::validate() const {
  if (!target) throw std::invalid_argument("realized graph of groups: missing target group");
  if (num_vertices < 1) throw std::invalid_argument("realized graph of groups: no vertices");
  if (static_cast<int>(vertex_subgroups.size()) != num_vertices ||
      edge_subgroups.size() != edges.size() || connecting.size() != edges.size())
    throw std::invalid_argument("realized graph of groups: inconsistent table sizes");
  const PermGroup& G = *target;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].origin < 0 || edges[e].origin >= num_vertices || edges[e].terminus < 0 ||
        edges[e].terminus >= num_vertices)
      throw std::invalid_argument("realized graph of groups: edge endpoint out of range");
    const Subgroup& He = edge_subgroups[e];
    const Subgroup& Ho = vertex_subgroups[edges[e].origin];
    const Subgroup& Ht = vertex_subgroups[edges[e].terminus];
    for (int m : He.members)
      if (!Ho.contains(m))
        throw std::invalid_argument("edge subgroup not contained in origin vertex subgroup");
    const Permutation& t = G.element(connecting[e]);
    Permutation t_inv = t.inverse();
    for (int m : He.members) {
      int conj = G.index_of(t_inv * G.element(m) * t);
      if (conj < 0 || !Ht.contains(conj))
        throw std::invalid_argument(
            "conjugated edge subgroup not contained in terminus vertex subgroup");
    }
  }
  SimpleGraph base;
  base.num_vertices = num_vertices;
  for (const auto& e : edges) base.edges.emplace_back(e.origin, e.terminus);
  if (!base.connected())
    throw std::invalid_argument("realized graph of groups: base graph must be connected");
}

AbstractSignature RealizedGraphOfGroups::signature() const {
  AbstractSignature sig;
  for (const auto& H : vertex_subgroups) sig.vertex_orders.push_back(H.order());
  for (const auto& H : edge_subgroups) sig.edge_orders.push_back(H.order());
  for (const auto& e : edges) sig.incidence.emplace_back(e.origin, e.terminus);
  return sig;
}

namespace {

// cosets gH for all g, labelled by canonical (minimal) representatives
void enumerate_cosets(const PermGroup& G, const Subgroup& H, int base_index, int& cell_count,
                      std::vector<CoveringGraph::Cell>& cells, std::vector<int>& coset_of) {
  coset_of.assign(G.order(), -1);
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    if (coset_of[g] != -1) continue;  // ascending scan: first hit is minimal
    int cell = cell_count++;
    cells.push_back({base_index, g});
    const Permutation& pg = G.element(g);
    for (int m : H.members) {
      int gm = G.index_of(pg * G.element(m));
      coset_of[gm] = cell;
    }
  }
}

}  // namespace

CoveringGraph::CoveringGraph(const RealizedGraphOfGroups& spec) : spec_(spec) {
  spec_.validate();
  const PermGroup& G = *spec_.target;
  int vcount = 0;
  vertex_coset_of_.resize(spec_.num_vertices);
  vertex_cell_offset_.push_back(0);
  for (int v = 0; v < spec_.num_vertices; ++v) {
    enumerate_cosets(G, spec_.vertex_subgroups[v], v, vcount, vertex_cells_, vertex_coset_of_[v]);
    vertex_cell_offset_.push_back(vcount);
  }
  int ecount = 0;
  edge_coset_of_.resize(spec_.edges.size());
  edge_cell_offset_.push_back(0);
  for (std::size_t e = 0; e < spec_.edges.size(); ++e) {
    enumerate_cosets(G, spec_.edge_subgroups[e], static_cast<int>(e), ecount, edge_cells_,
                     edge_coset_of_[e]);
    edge_cell_offset_.push_back(ecount);
  }
  // edge (e, gH_e) joins (origin, gH_origin) to (terminus, g t_e H_terminus)
  edge_origin_.resize(edge_cells_.size());
  edge_terminus_.resize(edge_cells_.size());
  for (std::size_t ce = 0; ce < edge_cells_.size(); ++ce) {
    int e = edge_cells_[ce].base_index;
    int g = edge_cells_[ce].coset_rep;
    const Permutation& pg = G.element(g);
    edge_origin_[ce] = vertex_coset_of_[spec_.edges[e].origin][g];
    int gt = G.index_of(pg * G.element(spec_.connecting[e]));
    edge_terminus_[ce] = vertex_coset_of_[spec_.edges[e].terminus][gt];
  }
}

CoveringGraph build_covering(const RealizedGraphOfGroups& spec) { return CoveringGraph(spec); }

int CoveringGraph::act_on_vertex(int element_index, int covering_vertex) const {
  const PermGroup& G = *spec_.target;
  const Cell& cell = vertex_cells_[covering_vertex];
  int moved = G.index_of(G.element(element_index) * G.element(cell.coset_rep));
  return vertex_coset_of_[cell.base_index][moved];
}

int CoveringGraph::act_on_edge(int element_index, int covering_edge) const {
  const PermGroup& G = *spec_.target;
  const Cell& cell = edge_cells_[covering_edge];
  int moved = G.index_of(G.element(element_index) * G.element(cell.coset_rep));
  return edge_coset_of_[cell.base_index][moved];
}

SimpleGraph CoveringGraph::to_simple_graph() const {
  SimpleGraph g;
  g.num_vertices = num_vertices();
  for (int e = 0; e < num_edges(); ++e) g.edges.emplace_back(edge_origin_[e], edge_terminus_[e]);
  return g;
}

std::string CoveringGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph covering {\n";
  for (int v = 0; v < num_vertices(); ++v)
    os << "  n" << v << " [label=\"v" << vertex_cells_[v].base_index << ":"
       << vertex_cells_[v].coset_rep << "\"];\n";
  for (int e = 0; e < num_edges(); ++e)
    os << "  n" << edge_origin_[e] << " -> n" << edge_terminus_[e] << " [label=\"e"
       << edge_cells_[e].base_index << ":" << edge_cells_[e].coset_rep << "\"];\n";
  os << "}\n";
  return os.str();
}

long long graph_rank(const CoveringGraph& c) { return c.to_simple_graph().rank(); }
long long graph_rank(const SimpleGraph& g) { return g.rank(); }

PermGroup action_kernel(const CoveringGraph& c) {
  const PermGroup& G = c.group();
  std::vector<Permutation> kernel_gens;
  for (int g = 0; g < static_cast<int>(G.order()); ++g) {
    bool fixes = true;
    for (int v = 0; fixes && v < c.num_vertices(); ++v)
      if (c.act_on_vertex(g, v) != v) fixes = false;
    for (int e = 0; fixes && e < c.num_edges(); ++e)
      if (c.act_on_edge(g, e) != e) fixes = false;
    if (fixes) kernel_gens.push_back(G.element(g));
  }
  return PermGroup::generate(G.degree(), std::move(kernel_gens), G.order());
}

long long vertex_stabilizer_order(const CoveringGraph& c, int covering_vertex) {
  const PermGroup& G = c.group();
  long long count = 0;
  for (int g = 0; g < static_cast<int>(G.order()); ++g)
    if (c.act_on_vertex(g, covering_vertex) == covering_vertex) ++count;
  return count;
}

long long edge_stabilizer_order(const CoveringGraph& c, int covering_edge) {
  const PermGroup& G = c.group();
  long long count = 0;
  for (int g = 0; g < static_cast<int>(G.order()); ++g)
    if (c.act_on_edge(g, covering_edge) == covering_edge) ++count;
  return count;
}

GenusReport verify_genus_formula(const RealizedGraphOfGroups& spec) {
  GenusReport report;
  CoveringGraph cover(spec);
  report.chi = euler_char(spec.signature());
  report.group_order = spec.target->order();
  report.covering_vertices = cover.num_vertices();
  report.covering_edges = cover.num_edges();
  report.rank = graph_rank(cover);
  Rational expected = -report.chi * report.group_order + 1;
  report.expected_rank = is_integral(expected) ? to_ll(numerator(expected)) : -1;
  report.ok = report.rank == report.expected_rank;
  return report;
}

bool quotient_matches_base(const CoveringGraph& c) {
  const PermGroup& G = c.group();
  const auto& spec = c.base();
  // orbits of vertices and edges, then compare the induced incidence
  auto orbit_id = [&](auto act, int count) {
    std::vector<int> id(count, -1);
    int next = 0;
    for (int x = 0; x < count; ++x) {
      if (id[x] != -1) continue;
      int o = next++;
      std::vector<int> stack{x};
      id[x] = o;
      while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (int g = 0; g < static_cast<int>(G.order()); ++g) {
          int z = act(g, y);
          if (id[z] == -1) {
            id[z] = o;
            stack.push_back(z);
          }
        }
      }
    }
    return std::pair(id, next);
  };
  auto [vid, vorbits] = orbit_id([&](int g, int v) { return c.act_on_vertex(g, v); },
                                 c.num_vertices());
  auto [eid, eorbits] = orbit_id([&](int g, int e) { return c.act_on_edge(g, e); }, c.num_edges());
  if (vorbits != spec.num_vertices || eorbits != static_cast<int>(spec.edges.size())) return false;
  // each cell's orbit must be its base cell's fiber
  for (int v = 0; v < c.num_vertices(); ++v)
    if (vid[v] != c.vertices()[v].base_index) return false;
  for (int e = 0; e < c.num_edges(); ++e) {
    if (eid[e] != c.edges()[e].base_index) return false;
    int base_e = c.edges()[e].base_index;
    if (vid[c.edge_origin(e)] != spec.edges[base_e].origin) return false;
    if (vid[c.edge_terminus(e)] != spec.edges[base_e].terminus) return false;
  }
  return true;
}

std::vector<EdgeBoundAudit> audit_edge_order_bounds(const RealizedGraphOfGroups& spec) {
  std::vector<EdgeBoundAudit> out;
  CoveringGraph cover(spec);
  long long g = graph_rank(cover);
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    EdgeBoundAudit audit;
    audit.base_edge = static_cast<int>(e);
    audit.edge_order = spec.edge_subgroups[e].order();
    audit.group_order = spec.target->order();
    audit.bound = 6 * audit.edge_order * (g - 1);
    audit.ok = audit.group_order <= audit.bound;
    out.push_back(audit);
  }
  return out;
}

}  // namespace maxsym
