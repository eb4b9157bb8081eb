#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "maxsym/perm.hpp"

namespace maxsym {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultGroupCap = 200'000;

// A finite permutation group, fully enumerated.  Elements are kept in
// ascending lexicographic order; each element carries a word in the
// generators recorded during the closure enumeration (index list into
// generators(), applied left to right as a product g_{w0} * g_{w1} * ...).
class PermGroup {
public:
  static PermGroup generate(int degree, std::vector<Permutation> gens,
                            long long cap = kDefaultGroupCap);
  // nullopt instead of throwing when the closure grows past `limit`
  static std::optional<PermGroup> try_generate(int degree, std::vector<Permutation> gens,
                                               long long limit);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  int index_of(const Permutation& p) const;            // -1 if absent
  const std::vector<int>& word_for(int element_index) const { return words_[element_index]; }
  int identity_index() const { return identity_index_; }

  // index-space arithmetic
  int compose_idx(int i, int j) const { return index_of(elements_[i] * elements_[j]); }
  int inverse_idx(int i) const { return index_of(elements_[i].inverse()); }

  bool is_abelian() const;
  long long center_order() const;

  // orbit of a point under the group's generators
  std::vector<int> point_orbit(int x) const;
  bool transitive() const;

private:
  int degree_ = 0;
  int identity_index_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<Permutation, int, PermHash> index_;

  static std::optional<PermGroup> enumerate(int degree, std::vector<Permutation> gens,
                                            long long limit, bool throw_on_cap);
};

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr make_group(int degree, std::vector<Permutation> gens,
                    long long cap = kDefaultGroupCap);

// order of the subgroup generated by `gens` inside the symmetric group on
// `degree` points, bailing out (nullopt) once the closure exceeds `limit`
std::optional<long long> subgroup_order_bounded(int degree, const std::vector<Permutation>& gens,
                                                long long limit);

}  // namespace maxsym
