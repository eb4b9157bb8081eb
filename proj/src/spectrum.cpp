#include "maxsym/spectrum.hpp"

#include <algorithm>

namespace maxsym {

std::string to_string(SpectrumStatus s) {
  switch (s) {
    case SpectrumStatus::proved_exhaustive: return "proved-exhaustive";
    case SpectrumStatus::lower_bound_only: return "lower-bound-only";
    case SpectrumStatus::cap_exceeded: return "cap-exceeded";
  }
  return "?";
}

std::string to_string(NValueStatus s) {
  switch (s) {
    case NValueStatus::occurs: return "occurs";
    case NValueStatus::occurs_claimed: return "occurs-claimed";
    case NValueStatus::excluded: return "excluded";
    case NValueStatus::unknown: return "unknown";
  }
  return "?";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace {

CensusQuery make_query(long long k, long long n, long long order, CensusMode mode,
                       const SpectrumConfig& config) {
  CensusQuery q;
  q.k = k;
  q.n = n;
  q.order = order;
  q.mode = mode;
  q.degree_cap = config.degree_cap;
  q.budget_ms = config.budget_ms;
  q.workers = config.workers;
  return q;
}

std::string pair_witness_id(long long k, long long n, long long order) {
  return "regular_" + std::to_string(k) + "_" + std::to_string(n) + "_" + std::to_string(order);
}

void attach_prime_caveat(SpectrumEntry& entry) {
  long long n = entry.g + 1;
  if (is_prime(n) && n >= 5 && entry.m > 2 * (entry.g + 1)) {
    entry.notes.push_back(
        "n=" + std::to_string(n) +
        " prime-occurrence caveat: the closed-form candidate 2(g+1) = " +
        std::to_string(2 * (entry.g + 1)) + " is not maximal at g = " + std::to_string(entry.g) +
        "; exhaustive census gives m = " + std::to_string(entry.m));
  }
}

}  // namespace

RealizedGraphOfGroups realized_from_census_pair(const RegularPair& pair, long long order) {
  GroupPtr W = make_group(pair.a.degree(), {pair.a, pair.b}, order);
  RealizedGraphOfGroups spec;
  spec.target = W;
  spec.num_vertices = 2;
  spec.edges = {{0, 1}};
  spec.vertex_subgroups = {subgroup_from_gens(*W, {W->index_of(pair.a)}),
                           subgroup_from_gens(*W, {W->index_of(pair.b)})};
  spec.edge_subgroups = {subgroup_from_gens(*W, {})};
  spec.connecting = {W->identity_index()};
  spec.validate();
  return spec;
}

RealizedGraphOfGroups realized_from_epi(const AmalgamSpec& amalgam, const EpiWitness& w) {
  const PermGroup& T = *w.target;
  auto indices_of = [&](const std::vector<Permutation>& images) {
    std::vector<int> idx;
    for (const auto& p : images) idx.push_back(T.index_of(p));
    return idx;
  };
  RealizedGraphOfGroups spec;
  spec.target = w.target;
  spec.num_vertices = 2;
  spec.edges = {{0, 1}};
  spec.vertex_subgroups = {subgroup_from_gens(T, indices_of(w.hom_a.gen_images())),
                           subgroup_from_gens(T, indices_of(w.hom_b.gen_images()))};
  std::vector<Permutation> edge_images;
  for (const auto& c : amalgam.embed_a.gen_images()) edge_images.push_back(w.hom_a.apply(c));
  spec.edge_subgroups = {subgroup_from_gens(T, indices_of(edge_images))};
  spec.connecting = {T.identity_index()};
  spec.validate();
  return spec;
}

SpectrumEntry m_free(long long g, const SpectrumConfig& config) {
  if (g < 2) throw std::invalid_argument("m_free: genus must be >= 2");
  SpectrumEntry entry;
  entry.g = g;
  bool undecided_above = false;
  for (const CandidateType& cand : candidate_orders_free_handle(g)) {
    CensusResult res =
        census_regular(make_query(cand.k, cand.n, cand.target_order, CensusMode::all, config));
    entry.candidates_checked.push_back({cand.k, cand.n, cand.target_order, res.status});
    if (res.status == CensusStatus::exists) {
      entry.m = cand.target_order;
      entry.winner = std::move(res);
      entry.witness_id = pair_witness_id(cand.k, cand.n, cand.target_order);
      entry.status = undecided_above ? SpectrumStatus::lower_bound_only
                                     : SpectrumStatus::proved_exhaustive;
      attach_prime_caveat(entry);
      return entry;
    }
    if (res.status == CensusStatus::cap_exceeded) undecided_above = true;
  }
  // the dihedral baseline: a reflection and a rotation generate D_{g+1}
  long long baseline = 2 * (g + 1);
  CensusResult res = census_regular(make_query(2, g + 1, baseline, CensusMode::all, config));
  entry.candidates_checked.push_back({2, g + 1, baseline, res.status});
  entry.m = baseline;
  entry.witness_id = pair_witness_id(2, g + 1, baseline);
  if (res.status == CensusStatus::none)
    throw std::logic_error("m_free: baseline census contradicts the dihedral witness");
  if (res.status == CensusStatus::cap_exceeded) {
    entry.status = SpectrumStatus::cap_exceeded;
    entry.notes.push_back("baseline census exceeded the configured cap/budget");
  } else {
    entry.winner = std::move(res);
    entry.status = undecided_above ? SpectrumStatus::lower_bound_only
                                   : SpectrumStatus::proved_exhaustive;
  }
  attach_prime_caveat(entry);
  return entry;
}

SpectrumEntry m_graph_trivial_edges(long long g, const SpectrumConfig& config) {
  if (g < 2) throw std::invalid_argument("m_graph_trivial_edges: genus must be >= 2");
  SpectrumEntry entry;
  entry.g = g;
  GraphDichotomy dichotomy = graph_trivial_edge_dichotomy(g);
  CensusResult res =
      census_regular(make_query(2, 3, dichotomy.six_value, CensusMode::all, config));
  entry.candidates_checked.push_back({2, 3, dichotomy.six_value, res.status});
  if (res.status == CensusStatus::exists) {
    entry.m = dichotomy.six_value;
    entry.witness_id = pair_witness_id(2, 3, dichotomy.six_value);
    entry.winner = std::move(res);
    entry.status = SpectrumStatus::proved_exhaustive;
    return entry;
  }
  // 4(g-1) fallback: surject Z2 * D2 onto Z2 x D_{g-1} and realize the action
  entry.m = dichotomy.four_value;
  entry.status = res.status == CensusStatus::cap_exceeded ? SpectrumStatus::cap_exceeded
                                                          : SpectrumStatus::proved_exhaustive;
  if (res.status == CensusStatus::cap_exceeded)
    entry.notes.push_back("6(g-1) census undecided under the configured cap/budget");
  GroupPtr target = build(NamedGroupSpec::direct_product(NamedGroupSpec::cyclic(2),
                                                         NamedGroupSpec::dihedral(g - 1)));
  AmalgamSpec amalgam = AmalgamSpec::free_product(build(NamedGroupSpec::cyclic(2)),
                                                  build(NamedGroupSpec::dihedral(2)));
  EpiSearchOptions options;
  options.mode = SearchMode::first;
  options.workers = config.workers;
  auto witnesses = find_epis(amalgam, target, options);
  if (witnesses.empty())
    throw std::logic_error("m_graph_trivial_edges: no surjection onto the order-4(g-1) witness");
  RealizedGraphOfGroups realized = realized_from_epi(amalgam, witnesses.front());
  GenusReport report = verify_genus_formula(realized);
  if (!report.ok || report.rank != g)
    throw std::logic_error("m_graph_trivial_edges: witness covering has wrong rank");
  entry.epi_witness = std::move(witnesses.front());
  entry.witness_id = "epi_Z2*D2_onto_Z2xD" + std::to_string(g - 1);
  return entry;
}

BoundSet bounds(int bound_id, long long g, std::optional<long long> c) {
  if (g < 2) throw std::invalid_argument("bounds: genus must be >= 2");
  BoundSet out;
  switch (bound_id) {
    case 1: {
      out.lower = 4 * (g + 1);
      out.upper = 12 * (g - 1);
      out.values = {{"lower", *out.lower}, {"upper", *out.upper}};
      if (g % 2 == 1) {
        out.values.emplace_back("odd_genus_alternative", 8 * (g - 1));
        out.notes.push_back("for odd genus the maximum is 8(g-1) or 12(g-1)");
      }
      break;
    }
    case 3: {
      out.lower = g % 2 == 0 ? 2 * g * g : (g + 1) * (g + 1);
      out.values.emplace_back("lower", *out.lower);
      if (g >= 15) {
        out.upper = 24 * g * (g - 1);
        out.values.emplace_back("upper", *out.upper);
      } else {
        out.notes.push_back("quadratic upper bound applies for genus >= 15 only");
        if (g == 2 || g == 3 || g == 4) {
          long long reported = g == 2 ? 12 : g == 3 ? 48 : 192;
          out.values.emplace_back("reported", reported);
          out.notes.push_back("small-genus value reported as documentation, not computed here");
        }
      }
      break;
    }
    case 4: {
      out.lower = 2 * (g + 1);
      out.upper = 6 * (g - 1);
      out.values = {{"lower", *out.lower}, {"upper", *out.upper}};
      if (g % 2 == 1) {
        out.values.emplace_back("odd_genus_alternative", 4 * (g - 1));
        out.notes.push_back("for odd genus the maximum is 4(g-1) or 6(g-1)");
      }
      break;
    }
    case 6: {
      if (!c) throw std::invalid_argument("bounds: edge stabilizer order c required for id 6");
      if (*c < 1) throw std::invalid_argument("bounds: c must be >= 1");
      out.upper = 6 * *c * (g - 1);
      out.values = {{"upper", *out.upper}};
      break;
    }
    default: throw std::invalid_argument("bounds: unknown bound-set id");
  }
  return out;
}

NValueStatus n_value_status(long long n) {
  if (n < 3) throw std::invalid_argument("n_value_status: n >= 3 required");
  if (n % 8 == 2) return NValueStatus::excluded;
  if (n == 3) return NValueStatus::occurs;
  if (is_prime(n)) return NValueStatus::occurs_claimed;
  return NValueStatus::unknown;
}

ZpZ6Data zp_z6_data(long long p) {
  if (!is_prime(p) || p % 6 != 1)
    throw std::invalid_argument("zp_z6: p must be a prime congruent to 1 mod 6");
  ZpZ6Data data;
  data.p = p;
  for (long long x = 2; x < p; ++x) {
    long long pow = 1;
    int ord = 0;
    do {
      pow = pow * x % p;
      ++ord;
    } while (pow != 1);
    if (ord == 6) {
      data.r = x;
      break;
    }
  }
  long long r2 = data.r * data.r % p;
  data.b = (r2 - 1 + p) % p;
  long long r4 = r2 * r2 % p;
  data.alpha_identity = data.b * ((1 + r2 + r4) % p) % p == 0;
  return data;
}

namespace {

Subgroup cyclic_subgroup(const PermGroup& G, const Permutation& gen) {
  return subgroup_from_gens(G, {G.index_of(gen)});
}

RealizedGraphOfGroups one_edge_realized(GroupPtr target, Subgroup v0, Subgroup v1, Subgroup e) {
  RealizedGraphOfGroups spec;
  spec.num_vertices = 2;
  spec.edges = {{0, 1}};
  spec.vertex_subgroups = {std::move(v0), std::move(v1)};
  spec.edge_subgroups = {std::move(e)};
  spec.connecting = {target->identity_index()};
  spec.target = std::move(target);
  spec.validate();
  return spec;
}

EpiWitness direct_witness(const AmalgamSpec& amalgam, GroupPtr target,
                          std::vector<Permutation> images_a, std::vector<Permutation> images_b) {
  EpiWitness w{GroupHom::create(amalgam.factor_a, target, std::move(images_a)),
               GroupHom::create(amalgam.factor_b, target, std::move(images_b)), target};
  if (!w.satisfies_invariants(amalgam))
    throw std::logic_error("witness family produced an invalid surjection");
  return w;
}

WitnessFamilyResult family_dihedral_baseline(long long g) {
  if (g < 2) throw std::invalid_argument("dihedral_baseline: g >= 2 required");
  WitnessFamilyResult out;
  out.family = "dihedral_baseline";
  out.param = g;
  GroupPtr D = build(NamedGroupSpec::dihedral(g + 1));
  const Permutation& rot = D->generators()[0];
  const Permutation& refl = D->generators()[1];
  out.realized = one_edge_realized(D, cyclic_subgroup(*D, refl), cyclic_subgroup(*D, rot),
                                   subgroup_from_gens(*D, {}));
  out.expected_order = 2 * (g + 1);
  out.expected_genus = g;
  AmalgamSpec amalgam = AmalgamSpec::free_product(build(NamedGroupSpec::cyclic(2)),
                                                  build(NamedGroupSpec::cyclic(g + 1)));
  out.epi = direct_witness(amalgam, D, {refl}, {rot});
  return out;
}

WitnessFamilyResult family_quad_twist(long long g) {
  WitnessFamilyResult out;
  out.family = "quad_twist";
  out.param = g;
  GroupPtr G = build(NamedGroupSpec::quad_twist(g));  // validates odd g >= 3
  const Permutation& y = G->generators()[1];
  const Permutation& t = G->generators()[2];
  out.realized = one_edge_realized(G, cyclic_subgroup(*G, t), cyclic_subgroup(*G, y),
                                   subgroup_from_gens(*G, {}));
  out.expected_order = 4 * (g - 1);
  out.expected_genus = g;
  AmalgamSpec amalgam = AmalgamSpec::free_product(build(NamedGroupSpec::cyclic(2)),
                                                  build(NamedGroupSpec::cyclic(4)));
  out.epi = direct_witness(amalgam, G, {t}, {y});
  return out;
}

WitnessFamilyResult family_zp_z6(long long p) {
  WitnessFamilyResult out;
  out.family = "zp_z6";
  out.param = p;
  ZpZ6Data data = zp_z6_data(p);
  GroupPtr G = build(NamedGroupSpec::semidirect_cyclic(p, 6, data.r));
  const Permutation& a = G->generators()[0];
  const Permutation& t = G->generators()[1];
  Permutation bt3 = a.power(data.b) * t.power(3);
  Permutation bt2 = a.power(data.b) * t.power(2);
  out.realized = one_edge_realized(G, cyclic_subgroup(*G, bt3), cyclic_subgroup(*G, bt2),
                                   subgroup_from_gens(*G, {}));
  out.expected_order = 6 * p;
  out.expected_genus = p + 1;
  AmalgamSpec amalgam = AmalgamSpec::free_product(build(NamedGroupSpec::cyclic(2)),
                                                  build(NamedGroupSpec::cyclic(3)));
  out.epi = direct_witness(amalgam, G, {bt3}, {bt2});
  out.notes.push_back("b = r^2 - 1 = " + std::to_string(data.b) + ", r = " + std::to_string(data.r) +
                      ", b + a(b) + a^2(b) = 0 holds: " + (data.alpha_identity ? "yes" : "no"));
  return out;
}

WitnessFamilyResult family_graph_baseline(long long g) {
  if (g < 2) throw std::invalid_argument("graph_baseline: g >= 2 required");
  WitnessFamilyResult out;
  out.family = "graph_baseline";
  out.param = g;
  GroupPtr target = build(NamedGroupSpec::direct_product(NamedGroupSpec::cyclic(2),
                                                         NamedGroupSpec::dihedral(g - 1)));
  AmalgamSpec amalgam = AmalgamSpec::free_product(build(NamedGroupSpec::cyclic(2)),
                                                  build(NamedGroupSpec::dihedral(2)));
  EpiSearchOptions options;
  options.mode = SearchMode::first;
  auto witnesses = find_epis(amalgam, target, options);
  if (witnesses.empty())
    throw std::logic_error("graph_baseline: no surjection onto Z2 x D_(g-1)");
  out.realized = realized_from_epi(amalgam, witnesses.front());
  out.epi = std::move(witnesses.front());
  out.expected_order = 4 * (g - 1);
  out.expected_genus = g;
  return out;
}

WitnessFamilyResult family_signed_bouquet(long long g) {
  if (g < 2) throw std::invalid_argument("signed_bouquet: g >= 2 required");
  WitnessFamilyResult out;
  out.family = "signed_bouquet";
  out.param = g;
  GroupPtr G = build(NamedGroupSpec::signed_perm(g));
  int hi = static_cast<int>(2 * g - 2);  // the pair of points of the last coordinate
  Subgroup whole = subgroup_where(*G, [](const Permutation&) { return true; });
  Subgroup setwise = subgroup_where(*G, [&](const Permutation& x) {
    return (x(hi) == hi && x(hi + 1) == hi + 1) || (x(hi) == hi + 1 && x(hi + 1) == hi);
  });
  Subgroup pointwise =
      subgroup_where(*G, [&](const Permutation& x) { return x(hi) == hi && x(hi + 1) == hi + 1; });
  out.expected_order = G->order();
  out.expected_genus = g;

  // abstract copies for the surjection data
  GroupPtr A = G;
  std::vector<Permutation> b_gens, e_gens;
  for (int i : setwise.gens) b_gens.push_back(G->element(i));
  for (int i : pointwise.gens) e_gens.push_back(G->element(i));
  GroupPtr B = make_group(G->degree(), b_gens);
  GroupPtr E = make_group(G->degree(), e_gens);
  AmalgamSpec amalgam = AmalgamSpec::with_edge(A, B, E, GroupHom::create(E, A, e_gens),
                                               GroupHom::create(E, B, e_gens));
  out.realized = one_edge_realized(G, std::move(whole), std::move(setwise), std::move(pointwise));
  out.epi = direct_witness(amalgam, G, A->generators(), b_gens);
  return out;
}

WitnessFamilyResult family_sym_edge(long long g) {
  if (g < 2) throw std::invalid_argument("sym_edge: g >= 2 required");
  WitnessFamilyResult out;
  out.family = "sym_edge";
  out.param = g;
  GroupPtr G = build(NamedGroupSpec::direct_product(NamedGroupSpec::symmetric(g + 1),
                                                    NamedGroupSpec::cyclic(2)));
  int fix = static_cast<int>(g);        // last point of the symmetric block
  int zpt = static_cast<int>(g) + 1;    // first point of the order-2 block
  Subgroup v0 = subgroup_where(*G, [&](const Permutation& x) { return x(zpt) == zpt; });
  Subgroup v1 = subgroup_where(*G, [&](const Permutation& x) { return x(fix) == fix; });
  Subgroup e = subgroup_where(
      *G, [&](const Permutation& x) { return x(fix) == fix && x(zpt) == zpt; });
  out.expected_order = G->order();
  out.expected_genus = g;

  std::vector<Permutation> b_gens, e_gens;
  for (int i : v1.gens) b_gens.push_back(G->element(i));
  for (int i : e.gens) e_gens.push_back(G->element(i));
  GroupPtr A = make_group(G->degree(), [&] {
    std::vector<Permutation> a_gens;
    for (int i : v0.gens) a_gens.push_back(G->element(i));
    return a_gens;
  }());
  GroupPtr B = make_group(G->degree(), b_gens);
  GroupPtr E = make_group(G->degree(), e_gens);
  AmalgamSpec amalgam = AmalgamSpec::with_edge(A, B, E, GroupHom::create(E, A, e_gens),
                                               GroupHom::create(E, B, e_gens));
  out.epi = direct_witness(amalgam, G, A->generators(), b_gens);
  out.realized = one_edge_realized(G, std::move(v0), std::move(v1), std::move(e));
  return out;
}

struct HandlebodyAmalgamRow {
  NamedGroupSpec factor_a, factor_b, edge;
  std::vector<NamedGroupSpec> targets;
};

std::vector<HandlebodyAmalgamRow> handlebody_rows() {
  using S = NamedGroupSpec;
  return {
      {S::dihedral(2), S::symmetric(3), S::cyclic(2),
       {S::alternating(4), S::dihedral(6), S::direct_product(S::cyclic(2), S::dihedral(3)),
        S::cyclic(12), S::semidirect_cyclic(3, 4, 2)}},
      {S::dihedral(3), S::alternating(4), S::cyclic(3), {S::symmetric(4)}},
      {S::dihedral(4), S::symmetric(4), S::cyclic(4), {S::symmetric(4)}},
      {S::dihedral(5), S::alternating(5), S::cyclic(5), {S::alternating(5)}},
  };
}

AmalgamSpec build_amalgam(const NamedGroupSpec& a, const NamedGroupSpec& b,
                          const NamedGroupSpec& e) {
  GroupPtr A = build(a), B = build(b), E = build(e);
  return AmalgamSpec::with_edge(A, B, E, standard_embedding(e, a, E, A),
                                standard_embedding(e, b, E, B));
}

WitnessFamilyResult family_handlebody_amalgam(long long which) {
  if (which < 1 || which > 4)
    throw std::invalid_argument("handlebody_amalgam: parameter in 1..4 required");
  auto rows = handlebody_rows();
  const HandlebodyAmalgamRow& row = rows[which - 1];
  WitnessFamilyResult out;
  out.family = "handlebody_amalgam";
  out.param = which;
  AmalgamSpec amalgam = build_amalgam(row.factor_a, row.factor_b, row.edge);
  EpiSearchOptions options;
  options.mode = SearchMode::first;
  for (const NamedGroupSpec& tspec : row.targets) {
    GroupPtr target = build(tspec);
    auto witnesses = find_epis(amalgam, target, options);
    if (witnesses.empty()) continue;
    out.realized = realized_from_epi(amalgam, witnesses.front());
    out.epi = std::move(witnesses.front());
    out.expected_order = target->order();
    out.expected_genus = target->order() / 12 + 1;
    out.notes.push_back("target " + tspec.name() + ", order 12(g-1) at g = " +
                        std::to_string(out.expected_genus));
    if (which > 1)
      out.notes.push_back(
          "order-12 targets are impossible for this amalgam: the larger factor embeds "
          "injectively, so the minimal realization is at order " +
          std::to_string(out.expected_order));
    return out;
  }
  throw std::logic_error("handlebody_amalgam: no surjection found onto any catalog target");
}

}  // namespace

std::vector<std::string> witness_family_names() {
  return {"dihedral_baseline", "quad_twist",  "zp_z6",           "graph_baseline",
          "signed_bouquet",    "sym_edge",    "handlebody_amalgam"};
}

WitnessFamilyResult witness_family(const std::string& name, long long param) {
  if (name == "dihedral_baseline") return family_dihedral_baseline(param);
  if (name == "quad_twist") return family_quad_twist(param);
  if (name == "zp_z6") return family_zp_z6(param);
  if (name == "graph_baseline") return family_graph_baseline(param);
  if (name == "signed_bouquet") return family_signed_bouquet(param);
  if (name == "sym_edge") return family_sym_edge(param);
  if (name == "handlebody_amalgam") return family_handlebody_amalgam(param);
  throw std::invalid_argument("unknown witness family: " + name);
}

std::vector<AmalgamRecord> effective_amalgams() {
  using S = NamedGroupSpec;
  std::vector<AmalgamRecord> out;
  auto add = [&](std::string name, bool two_three, std::optional<S> a, std::optional<S> b,
                 std::optional<S> e, long long edge_order) {
    AmalgamRecord rec;
    rec.name = std::move(name);
    rec.two_three = two_three;
    rec.edge_order = edge_order;
    rec.factor_a = std::move(a);
    rec.factor_b = std::move(b);
    rec.edge = std::move(e);
    rec.constructible = rec.factor_a && rec.factor_b && rec.edge;
    if (rec.constructible) {
      rec.built = build_amalgam(*rec.factor_a, *rec.factor_b, *rec.edge);
      if (rec.built->edge->order() != edge_order)
        throw std::logic_error("amalgam registry: edge order mismatch for " + rec.name);
      rec.index_a = rec.built->factor_a->order() / edge_order;
      rec.index_b = rec.built->factor_b->order() / edge_order;
    }
    out.push_back(std::move(rec));
  };
  // the seven effective (2,3)-amalgams
  add("Z2 * Z3", true, S::cyclic(2), S::cyclic(3), S::cyclic(1), 1);
  add("Z4 *_Z2 D3", true, S::cyclic(4), S::dihedral(3), S::cyclic(2), 2);
  add("D2 *_Z2 D3", true, S::dihedral(2), S::dihedral(3), S::cyclic(2), 2);
  add("D4 *_D2 D6", true, S::dihedral(4), S::dihedral(6), S::dihedral(2), 4);
  add("D8 *_D4 S4", true, S::dihedral(8), S::symmetric(4), S::dihedral(4), 8);
  add("QD16 *_D4 S4", true, S::quasidihedral16(), S::symmetric(4), S::dihedral(4), 8);
  add("K32 *_(D4xZ2) (S4xZ2)", true, std::nullopt, S::direct_product(S::symmetric(4), S::cyclic(2)),
      S::direct_product(S::dihedral(4), S::cyclic(2)), 16);
  // the four maximal handlebody amalgams
  add("D2 *_Z2 S3", false, S::dihedral(2), S::symmetric(3), S::cyclic(2), 2);
  add("D3 *_Z3 A4", false, S::dihedral(3), S::alternating(4), S::cyclic(3), 3);
  add("D4 *_Z4 S4", false, S::dihedral(4), S::symmetric(4), S::cyclic(4), 4);
  add("D5 *_Z5 A5", false, S::dihedral(5), S::alternating(5), S::cyclic(5), 5);
  return out;
}

}  // namespace maxsym
