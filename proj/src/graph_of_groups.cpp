#include "maxsym/graph_of_groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxsym {

AbstractSignature AbstractSignature::one_edge(long long a, long long b, long long c) {
  AbstractSignature sig;
  sig.vertex_orders = {a, b};
  sig.edge_orders = {c};
  sig.incidence = {{0, 1}};
  return sig;
}

bool AbstractSignature::connected() const {
  if (vertex_orders.empty()) return false;
  std::vector<int> parent(vertex_orders.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : incidence) parent[find(u)] = find(v);
  for (std::size_t v = 1; v < vertex_orders.size(); ++v)
    if (find(static_cast<int>(v)) != find(0)) return false;
  return true;
}

void AbstractSignature::validate() const {
  if (edge_orders.size() != incidence.size())
    throw std::invalid_argument("signature: one incidence pair per edge required");
  for (long long o : vertex_orders)
    if (o < 1) throw std::invalid_argument("signature: vertex orders must be >= 1");
  for (std::size_t e = 0; e < edge_orders.size(); ++e) {
    auto [u, v] = incidence[e];
    if (u < 0 || v < 0 || u >= static_cast<int>(vertex_orders.size()) ||
        v >= static_cast<int>(vertex_orders.size()))
      throw std::invalid_argument("signature: edge endpoint out of range");
    long long c = edge_orders[e];
    if (c < 1) throw std::invalid_argument("signature: edge orders must be >= 1");
    if (vertex_orders[u] % c != 0 || vertex_orders[v] % c != 0)
      throw std::invalid_argument("signature: edge order must divide both endpoint orders");
  }
  if (!connected()) throw std::invalid_argument("signature: underlying graph must be connected");
}

Rational euler_char(const AbstractSignature& sig) {
  Rational chi = 0;
  for (long long o : sig.vertex_orders) chi += Rational(1, o);
  for (long long o : sig.edge_orders) chi -= Rational(1, o);
  return chi;
}

long long genus(const AbstractSignature& sig, long long order) {
  Rational gm1 = -euler_char(sig) * order;
  if (gm1 <= 0 || !is_integral(gm1))
    throw NonIntegralGenus("order " + std::to_string(order) +
                           " does not give a positive integral genus");
  return to_ll(numerator(gm1)) + 1;
}

std::vector<CandidateType> candidate_orders_free_handle(long long g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  std::vector<CandidateType> out;
  const long long baseline = 2 * (g + 1);
  for (long long n = 3; n <= g; ++n) {
    long long num = 2 * n * (g - 1);
    if (num % (n - 2) != 0) continue;
    long long v = num / (n - 2);
    if (v % 2 != 0) continue;  // a group with an order-2 element has even order
    if (v <= baseline) continue;
    out.push_back({2, n, v, g});
  }
  const std::pair<long long, long long> three_types[] = {{3, 3}, {3, 4}, {3, 5}};
  for (auto [k, n] : three_types) {
    long long den = k * n - k - n;
    long long num = k * n * (g - 1);
    if (num % den != 0) continue;
    long long v = num / den;
    if (v <= baseline) continue;
    out.push_back({k, n, v, g});
  }
  std::sort(out.begin(), out.end(), [](const CandidateType& a, const CandidateType& b) {
    if (a.target_order != b.target_order) return a.target_order > b.target_order;
    if (a.n != b.n) return a.n < b.n;
    return a.k < b.k;
  });
  return out;
}

std::vector<long long> candidate_values_handlebody(long long g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  std::vector<long long> out;
  for (long long n = 3; n <= g + 1; ++n) {
    long long num = 4 * n * (g - 1);
    if (num % (n - 2) != 0) continue;
    out.push_back(num / (n - 2));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GraphDichotomy graph_trivial_edge_dichotomy(long long g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  GraphDichotomy d;
  d.six_value = 6 * (g - 1);
  d.four_value = 4 * (g - 1);
  d.six_signature = AbstractSignature::one_edge(2, 3, 1);
  d.four_signature = AbstractSignature::one_edge(2, 4, 1);
  return d;
}

namespace {

void sweep_orders(AbstractSignature& sig, std::size_t v, long long max_order,
                  const Rational& bound, std::vector<AbstractSignature>& out) {
  if (v == sig.vertex_orders.size()) {
    Rational neg_chi = -euler_char(sig);
    if (neg_chi > 0 && neg_chi < bound) out.push_back(sig);
    return;
  }
  // orders nondecreasing along the vertex list cuts relabellings
  long long lo = v == 0 ? 1 : sig.vertex_orders[v - 1];
  for (long long o = lo; o <= max_order; ++o) {
    sig.vertex_orders[v] = o;
    sweep_orders(sig, v + 1, max_order, bound, out);
  }
}

}  // namespace

std::vector<AbstractSignature> enumerate_trivial_edge_signatures(int max_vertices, int max_edges,
                                                                 long long max_order,
                                                                 const Rational& neg_chi_bound) {
  std::vector<AbstractSignature> out;
  for (int V = 1; V <= max_vertices; ++V) {
    // all unordered endpoint pairs, loops included
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < V; ++i)
      for (int j = i; j < V; ++j) pairs.emplace_back(i, j);
    // choose a multiset of E edges over the pairs
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int remaining) -> void {
      if (remaining == 0) {
        AbstractSignature sig;
        sig.vertex_orders.assign(V, 1);
        for (int pi : pick) {
          sig.incidence.push_back(pairs[pi]);
          sig.edge_orders.push_back(1);
        }
        if (!sig.connected()) return;
        sweep_orders(sig, 0, max_order, neg_chi_bound, out);
        return;
      }
      for (int pi = from; pi < static_cast<int>(pairs.size()); ++pi) {
        pick.push_back(pi);
        self(self, pi, remaining - 1);
        pick.pop_back();
      }
    };
    for (int E = 0; E <= max_edges; ++E) rec(rec, 0, E);
  }
  return out;
}

}  // namespace maxsym
