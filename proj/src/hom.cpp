#include "maxsym/hom.hpp"

namespace maxsym {

bool GroupHom::orders_compatible(const PermGroup& domain, const std::vector<Permutation>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    long long go = domain.generators()[i].order();
    if (go % images[i].order() != 0) return false;
  }
  return true;
}

std::optional<GroupHom> GroupHom::try_create(GroupPtr domain, GroupPtr codomain,
                                             std::vector<Permutation> gen_images) {
  if (gen_images.size() != domain->generators().size())
    throw std::invalid_argument("one image per domain generator required");
  for (const auto& h : gen_images)
    if (!codomain->contains(h))
      throw std::invalid_argument("image element not in codomain");

  if (!orders_compatible(*domain, gen_images)) return std::nullopt;

  // fiber-product criterion; H projects onto the domain, so enumeration
  // either completes at exactly |domain| or overruns the bound
  std::vector<Permutation> fiber_gens;
  fiber_gens.reserve(gen_images.size());
  for (std::size_t i = 0; i < gen_images.size(); ++i)
    fiber_gens.push_back(juxtapose(domain->generators()[i], gen_images[i]));
  auto h_order =
      subgroup_order_bounded(domain->degree() + codomain->degree(), fiber_gens, domain->order());
  if (!h_order || *h_order != domain->order()) return std::nullopt;

  GroupHom hom;
  hom.domain_ = std::move(domain);
  hom.codomain_ = std::move(codomain);
  hom.gen_images_ = std::move(gen_images);
  return hom;
}

GroupHom GroupHom::create(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> gen_images) {
  auto h = try_create(std::move(domain), std::move(codomain), std::move(gen_images));
  if (!h) throw NotAHomomorphism("generator images do not extend to a homomorphism");
  return *std::move(h);
}

Permutation GroupHom::apply(const Permutation& x) const {
  int i = domain_->index_of(x);
  if (i < 0) throw std::invalid_argument("element not in hom domain");
  Permutation y(codomain_->degree());
  for (int gi : domain_->word_for(i)) y = y * gen_images_[gi];
  return y;
}

long long GroupHom::image_order() const {
  auto n = subgroup_order_bounded(codomain_->degree(), gen_images_, codomain_->order());
  return *n;  // image is a subgroup of the codomain, bound can't overrun
}

PermGroup GroupHom::image_group() const {
  return PermGroup::generate(codomain_->degree(), gen_images_, codomain_->order());
}

GroupHom hom_from_images(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> gen_images) {
  return GroupHom::create(std::move(domain), std::move(codomain), std::move(gen_images));
}

bool is_injective(const GroupHom& h) { return h.is_injective(); }

}  // namespace maxsym
