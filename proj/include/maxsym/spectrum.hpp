#pragma once

#include <optional>

#include "maxsym/bass_serre.hpp"
#include "maxsym/catalog.hpp"
#include "maxsym/census.hpp"
#include "maxsym/epi_search.hpp"

namespace maxsym {

enum class SpectrumStatus { proved_exhaustive, lower_bound_only, cap_exceeded };
std::string to_string(SpectrumStatus s);

struct CandidateCheck {
  long long k, n, order;
  CensusStatus status;
};

struct SpectrumEntry {
  long long g = 0;
  long long m = 0;
  SpectrumStatus status = SpectrumStatus::proved_exhaustive;
  std::string witness_id;
  CensusResult winner;                    // census data behind m, when census-backed
  std::optional<EpiWitness> epi_witness;  // surjection witness for the graph fallback
  std::vector<CandidateCheck> candidates_checked;
  std::vector<std::string> notes;
};

struct SpectrumConfig {
  long long degree_cap = 72;
  long long budget_ms = 0;
  int workers = 1;
};

// Maximum order of a free action on the closed handle of genus g: walk the
// one-edge candidate orders descending, first census hit wins, and the
// 2(g+1) dihedral baseline catches everything else.
SpectrumEntry m_free(long long g, const SpectrumConfig& config = {});

// Maximum order of a trivial-edge-stabilizer action on a hyperbolic graph
// of rank g: 6(g-1) exactly when the (2,3) census succeeds there, else
// 4(g-1) witnessed by a surjection of Z2 * D2.
SpectrumEntry m_graph_trivial_edges(long long g, const SpectrumConfig& config = {});

struct BoundSet {
  std::optional<long long> lower, upper;
  std::vector<std::pair<std::string, long long>> values;
  std::vector<std::string> notes;
};
// bound-set ids: 1 = handlebody, 3 = closed handle (faithful), 4 = closed
// handle (free), 6 = graph with edge stabilizer order c
BoundSet bounds(int bound_id, long long g, std::optional<long long> c = std::nullopt);

enum class NValueStatus { occurs, occurs_claimed, excluded, unknown };
std::string to_string(NValueStatus s);
// status of the candidate type parameter n in the value form 2n(g-1)/(n-2)
NValueStatus n_value_status(long long n);

struct WitnessFamilyResult {
  std::string family;
  long long param = 0;
  RealizedGraphOfGroups realized;
  long long expected_order = 0;
  long long expected_genus = 0;
  std::optional<EpiWitness> epi;
  std::vector<std::string> notes;
};

// Families: dihedral_baseline(g), quad_twist(odd g), zp_z6(prime p = 1 mod 6),
// graph_baseline(g), signed_bouquet(g), sym_edge(g), handlebody_amalgam(1..4).
WitnessFamilyResult witness_family(const std::string& name, long long param);
std::vector<std::string> witness_family_names();

struct AmalgamRecord {
  std::string name;
  bool two_three = false;  // member of the seven (2,3)-amalgams
  long long edge_order = 0;
  bool constructible = false;
  std::optional<NamedGroupSpec> factor_a, factor_b, edge;
  std::optional<AmalgamSpec> built;
  long long index_a = 0, index_b = 0;  // |A|/c, |B|/c when constructible
};
// the seven effective (2,3)-amalgams plus the four maximal handlebody
// amalgams; the order-32 factor of the last (2,3) entry is not determined
// here, so that record is metadata only
std::vector<AmalgamRecord> effective_amalgams();

struct ZpZ6Data {
  long long p = 0, r = 0, b = 0;
  bool alpha_identity = false;  // b + r^2 b + r^4 b = 0 (mod p)
};
ZpZ6Data zp_z6_data(long long p);

bool is_prime(long long n);

// one-edge realization with trivial edge group from a census pair
RealizedGraphOfGroups realized_from_census_pair(const RegularPair& pair, long long order);
// one-edge realization from an amalgam surjection witness
RealizedGraphOfGroups realized_from_epi(const AmalgamSpec& spec, const EpiWitness& w);

}  // namespace maxsym
