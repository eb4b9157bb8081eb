#pragma once

#include <string>
#include <vector>

#include "maxsym/perm_group.hpp"

namespace maxsym {

enum class CensusStatus { exists, none, cap_exceeded };
std::string to_string(CensusStatus s);

// Isomorphism-class invariants: equal fingerprints are necessary (not
// sufficient) for isomorphism.
struct Fingerprint {
  long long order = 0;
  std::vector<std::pair<long long, long long>> element_orders;  // (order, count), ascending
  long long center_order = 0;
  std::vector<long long> abelianization;  // invariant factors d1 | d2 | ..., ascending
  auto operator<=>(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint iso_fingerprint(const PermGroup& G);

enum class CensusMode { exists, all };

// Does a group of order N generated by elements of orders exactly k and n
// exist?  Decided by backtracking over regular permutation pairs on N
// points: a is fixed in canonical form (consecutive k-cycles), b is built
// cycle by cycle with each new cycle led by the least unplaced point, and
// partial products of the tracked words must have uniform cycle lengths
// dividing N.
struct CensusQuery {
  long long k = 2, n = 3;
  long long order = 0;
  CensusMode mode = CensusMode::exists;
  long long degree_cap = 72;
  long long budget_ms = 0;  // 0 = no deadline
  int workers = 1;
  // letters 'a','A','b','B' (capitals = inverses), applied right to left
  std::vector<std::string> tracked_words = {"ab", "aB"};
};

struct RegularPair {
  Permutation a, b;
  auto operator<=>(const RegularPair&) const = default;
};

struct CensusResult {
  CensusStatus status = CensusStatus::none;
  std::vector<RegularPair> witnesses;    // canonical order; one per completion
  std::vector<Fingerprint> fingerprints;  // sorted, deduplicated
  long long nodes = 0;
  long long millis = 0;
};

CensusResult census_regular(const CensusQuery& q);

// independently re-verify a witness: exact generator orders, transitivity,
// group order exactly N
bool verify_regular_pair(const RegularPair& w, long long k, long long n, long long N);

bool is_squarefree(long long N);

// all groups of squarefree order N up to isomorphism, as split metacyclic
// builds; cross-check material for the census
std::vector<PermGroup> squarefree_enum(long long N);

// exhaustive generator-image search; intended for small groups
bool isomorphic(const PermGroup& G, const PermGroup& H);

}  // namespace maxsym
