#pragma once

#include <optional>

#include "maxsym/perm_group.hpp"

namespace maxsym {

struct NotAHomomorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A homomorphism between two enumerated permutation groups, given by the
// images of the domain generators.  Well-definedness is checked on
// construction with the fiber-product criterion: juxtapose domain and
// codomain on disjoint point sets and enumerate H = <(g_i, h_i)>; the
// assignment extends to a homomorphism iff |H| = |domain|.
class GroupHom {
public:
  static GroupHom create(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> gen_images);
  static std::optional<GroupHom> try_create(GroupPtr domain, GroupPtr codomain,
                                            std::vector<Permutation> gen_images);

  // cheap necessary check used by searches before the full fiber product:
  // image orders must divide generator orders
  static bool orders_compatible(const PermGroup& domain, const std::vector<Permutation>& images);

  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  const std::vector<Permutation>& gen_images() const { return gen_images_; }

  // evaluate on an arbitrary element via its stored generator word
  Permutation apply(const Permutation& x) const;

  long long image_order() const;
  bool is_injective() const { return image_order() == domain_->order(); }
  bool is_surjective() const { return image_order() == codomain_->order(); }

  // image as an enumerated subgroup of the codomain
  PermGroup image_group() const;

private:
  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<Permutation> gen_images_;
};

// spec-facing names
GroupHom hom_from_images(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> gen_images);
bool is_injective(const GroupHom& h);

}  // namespace maxsym
