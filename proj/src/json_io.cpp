#include "maxsym/json_io.hpp"

namespace maxsym {

json to_json(const Permutation& p) {
  return json{{"degree", p.degree()}, {"images", p.images()}};
}

Permutation permutation_from_json(const json& j) {
  std::vector<int> images = j.at("images").get<std::vector<int>>();
  if (j.contains("degree") && j.at("degree").get<int>() != static_cast<int>(images.size()))
    throw std::invalid_argument("permutation json: degree does not match images length");
  return Permutation(std::move(images));
}

json to_json(const PermGroup& G) {
  json gens = json::array();
  for (const auto& g : G.generators()) gens.push_back(g.images());
  return json{{"degree", G.degree()}, {"generators", gens}};
}

GroupPtr group_from_json(const json& j, long long cap) {
  int degree = j.at("degree").get<int>();
  std::vector<Permutation> gens;
  for (const auto& images : j.at("generators"))
    gens.push_back(Permutation(images.get<std::vector<int>>()));
  return make_group(degree, std::move(gens), cap);
}

namespace {

const char* kind_name(NamedGroupSpec::Kind k) {
  using Kind = NamedGroupSpec::Kind;
  switch (k) {
    case Kind::cyclic: return "cyclic";
    case Kind::dihedral: return "dihedral";
    case Kind::symmetric: return "symmetric";
    case Kind::alternating: return "alternating";
    case Kind::quasidihedral16: return "quasidihedral16";
    case Kind::direct_product: return "direct_product";
    case Kind::semidirect_cyclic: return "semidirect_cyclic";
    case Kind::quad_twist: return "quad_twist";
    case Kind::signed_perm: return "signed_perm";
  }
  return "?";
}

}  // namespace

json to_json(const NamedGroupSpec& spec) {
  using Kind = NamedGroupSpec::Kind;
  json params = json::object();
  switch (spec.kind) {
    case Kind::direct_product:
      params["a"] = to_json(spec.factors[0]);
      params["b"] = to_json(spec.factors[1]);
      break;
    case Kind::semidirect_cyclic:
      params["m"] = spec.m;
      params["k"] = spec.k;
      params["r"] = spec.r;
      break;
    case Kind::quasidihedral16: break;
    case Kind::quad_twist:
    case Kind::signed_perm: params["g"] = spec.n; break;
    default: params["n"] = spec.n; break;
  }
  return json{{"kind", kind_name(spec.kind)}, {"params", params}};
}

NamedGroupSpec group_spec_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  const json& p = j.value("params", json::object());
  if (kind == "cyclic") return NamedGroupSpec::cyclic(p.at("n").get<long long>());
  if (kind == "dihedral") return NamedGroupSpec::dihedral(p.at("n").get<long long>());
  if (kind == "symmetric") return NamedGroupSpec::symmetric(p.at("n").get<long long>());
  if (kind == "alternating") return NamedGroupSpec::alternating(p.at("n").get<long long>());
  if (kind == "quasidihedral16") return NamedGroupSpec::quasidihedral16();
  if (kind == "direct_product")
    return NamedGroupSpec::direct_product(group_spec_from_json(p.at("a")),
                                          group_spec_from_json(p.at("b")));
  if (kind == "semidirect_cyclic")
    return NamedGroupSpec::semidirect_cyclic(p.at("m").get<long long>(), p.at("k").get<long long>(),
                                             p.at("r").get<long long>());
  if (kind == "quad_twist") return NamedGroupSpec::quad_twist(p.at("g").get<long long>());
  if (kind == "signed_perm") return NamedGroupSpec::signed_perm(p.at("g").get<long long>());
  throw std::invalid_argument("unknown group kind: " + kind);
}

json to_json(const AbstractSignature& sig) {
  json edges = json::array();
  for (std::size_t e = 0; e < sig.edge_orders.size(); ++e)
    edges.push_back(json{{"order", sig.edge_orders[e]},
                         {"ends", {sig.incidence[e].first, sig.incidence[e].second}}});
  return json{{"vertices", sig.vertex_orders}, {"edges", edges}};
}

AbstractSignature signature_from_json(const json& j) {
  AbstractSignature sig;
  sig.vertex_orders = j.at("vertices").get<std::vector<long long>>();
  for (const auto& e : j.at("edges")) {
    sig.edge_orders.push_back(e.at("order").get<long long>());
    auto ends = e.at("ends").get<std::vector<int>>();
    if (ends.size() != 2) throw std::invalid_argument("signature json: ends must have 2 entries");
    sig.incidence.emplace_back(ends[0], ends[1]);
  }
  sig.validate();
  return sig;
}

json to_json(const Fingerprint& fp) {
  json orders = json::array();
  for (auto [o, c] : fp.element_orders) orders.push_back(json{{"order", o}, {"count", c}});
  return json{{"order", fp.order},
              {"element_orders", orders},
              {"center_order", fp.center_order},
              {"abelianization", fp.abelianization}};
}

json to_json(const CensusResult& res) {
  json witnesses = json::array();
  for (const auto& w : res.witnesses)
    witnesses.push_back(json{{"a", to_json(w.a)}, {"b", to_json(w.b)}});
  json fps = json::array();
  for (const auto& fp : res.fingerprints) fps.push_back(to_json(fp));
  return json{{"status", to_string(res.status)},
              {"witnesses", witnesses},
              {"fingerprints", fps},
              {"stats", {{"nodes", res.nodes}}}};
}

json to_json(const EpiWitness& w) {
  json a_images = json::array(), b_images = json::array();
  for (const auto& p : w.hom_a.gen_images()) a_images.push_back(to_json(p));
  for (const auto& p : w.hom_b.gen_images()) b_images.push_back(to_json(p));
  return json{{"target", to_json(*w.target)},
              {"factor_a_images", a_images},
              {"factor_b_images", b_images}};
}

json to_json(const RealizedGraphOfGroups& spec) {
  json vertices = json::array();
  for (const auto& H : spec.vertex_subgroups) vertices.push_back(json{{"subgroup", H.gens}});
  json edges = json::array();
  for (std::size_t e = 0; e < spec.edges.size(); ++e)
    edges.push_back(json{{"ends", {spec.edges[e].origin, spec.edges[e].terminus}},
                         {"subgroup", spec.edge_subgroups[e].gens},
                         {"connecting", spec.connecting[e]}});
  return json{{"target", to_json(*spec.target)}, {"vertices", vertices}, {"edges", edges}};
}

RealizedGraphOfGroups realized_from_json(const json& j, long long cap) {
  RealizedGraphOfGroups spec;
  spec.target = group_from_json(j.at("target"), cap);
  const json& vertices = j.at("vertices");
  spec.num_vertices = static_cast<int>(vertices.size());
  for (const auto& v : vertices)
    spec.vertex_subgroups.push_back(
        subgroup_from_gens(*spec.target, v.at("subgroup").get<std::vector<int>>()));
  for (const auto& e : j.at("edges")) {
    auto ends = e.at("ends").get<std::vector<int>>();
    if (ends.size() != 2)
      throw std::invalid_argument("realized graph json: ends must have 2 entries");
    spec.edges.push_back({ends[0], ends[1]});
    spec.edge_subgroups.push_back(
        subgroup_from_gens(*spec.target, e.at("subgroup").get<std::vector<int>>()));
    spec.connecting.push_back(e.value("connecting", spec.target->identity_index()));
  }
  spec.validate();
  return spec;
}

json to_json(const GenusReport& report) {
  return json{{"chi", to_string(report.chi)},
              {"group_order", report.group_order},
              {"covering_vertices", report.covering_vertices},
              {"covering_edges", report.covering_edges},
              {"rank", report.rank},
              {"expected_rank", report.expected_rank},
              {"ok", report.ok}};
}

json to_json(const SpectrumEntry& entry) {
  json candidates = json::array();
  for (const auto& c : entry.candidates_checked)
    candidates.push_back(json{
        {"k", c.k}, {"n", c.n}, {"order", c.order}, {"status", to_string(c.status)}});
  json out{{"g", entry.g},
           {"m", entry.m},
           {"status", to_string(entry.status)},
           {"witness_id", entry.witness_id},
           {"candidates_checked", candidates},
           {"notes", entry.notes}};
  json fps = json::array();
  for (const auto& fp : entry.winner.fingerprints) fps.push_back(to_json(fp));
  out["winner_fingerprints"] = fps;
  if (entry.epi_witness) out["epi_witness"] = to_json(*entry.epi_witness);
  return out;
}

json to_json(const BoundSet& bounds) {
  json values = json::object();
  for (const auto& [name, value] : bounds.values) values[name] = value;
  json out{{"values", values}, {"notes", bounds.notes}};
  if (bounds.lower) out["lower"] = *bounds.lower;
  if (bounds.upper) out["upper"] = *bounds.upper;
  return out;
}

json to_json(const AmalgamRecord& record) {
  json out{{"name", record.name},
           {"two_three", record.two_three},
           {"edge_order", record.edge_order},
           {"constructible", record.constructible}};
  if (record.factor_a) out["factor_a"] = to_json(*record.factor_a);
  if (record.factor_b) out["factor_b"] = to_json(*record.factor_b);
  if (record.edge) out["edge"] = to_json(*record.edge);
  if (record.constructible) {
    out["index_a"] = record.index_a;
    out["index_b"] = record.index_b;
  }
  return out;
}

json to_json(const WitnessFamilyResult& result) {
  return json{{"family", result.family},
              {"param", result.param},
              {"expected_order", result.expected_order},
              {"expected_genus", result.expected_genus},
              {"realized", to_json(result.realized)},
              {"notes", result.notes}};
}

std::string spectrum_csv(const std::vector<SpectrumEntry>& entries) {
  std::string out = "g,m,status,witness_id,candidates_checked\n";
  for (const auto& e : entries) {
    std::string cands;
    for (const auto& c : e.candidates_checked) {
      if (!cands.empty()) cands += ";";
      cands += std::to_string(c.k) + "." + std::to_string(c.n) + ":" + std::to_string(c.order) +
               "=" + to_string(c.status);
    }
    out += std::to_string(e.g) + "," + std::to_string(e.m) + "," + to_string(e.status) + "," +
           e.witness_id + "," + cands + "\n";
  }
  return out;
}

}  // namespace maxsym
