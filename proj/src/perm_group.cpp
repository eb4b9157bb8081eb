#include "maxsym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace maxsym {

std::optional<PermGroup> PermGroup::enumerate(int degree, std::vector<Permutation> gens,
                                              long long limit, bool throw_on_cap) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (limit < 1) throw std::invalid_argument("cap must be >= 1");
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  PermGroup G;
  G.degree_ = degree;
  G.generators_ = std::move(gens);

  std::unordered_map<Permutation, int, PermHash> idx;
  std::vector<Permutation> elems;
  std::vector<std::vector<int>> words;

  Permutation id(degree);
  idx.emplace(id, 0);
  elems.push_back(id);
  words.push_back({});

  // BFS closure; right-multiplying keeps words in generator order
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < G.generators_.size(); ++gi) {
      Permutation next = elems[head] * G.generators_[gi];
      if (idx.count(next)) continue;
      if (static_cast<long long>(elems.size()) >= limit) {
        if (throw_on_cap) throw CapExceeded("group enumeration cap exceeded");
        return std::nullopt;
      }
      idx.emplace(next, static_cast<int>(elems.size()));
      std::vector<int> w = words[head];
      w.push_back(static_cast<int>(gi));
      elems.push_back(std::move(next));
      words.push_back(std::move(w));
    }
  }

  // canonical order: sort elements, remap words
  std::vector<int> perm(elems.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return elems[a] < elems[b]; });
  G.elements_.reserve(elems.size());
  G.words_.reserve(elems.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    G.elements_.push_back(std::move(elems[perm[pos]]));
    G.words_.push_back(std::move(words[perm[pos]]));
    G.index_.emplace(G.elements_.back(), static_cast<int>(pos));
  }
  G.identity_index_ = G.index_.at(Permutation(degree));
  return G;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> gens, long long cap) {
  return *enumerate(degree, std::move(gens), cap, /*throw_on_cap=*/true);
}

std::optional<PermGroup> PermGroup::try_generate(int degree, std::vector<Permutation> gens,
                                                 long long limit) {
  return enumerate(degree, std::move(gens), limit, /*throw_on_cap=*/false);
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

long long PermGroup::center_order() const {
  long long z = 0;
  for (const auto& x : elements_) {
    bool central = true;
    for (const auto& g : generators_) {
      if (x * g != g * x) {
        central = false;
        break;
      }
    }
    if (central) ++z;
  }
  return z;
}

std::vector<int> PermGroup::point_orbit(int x) const {
  std::vector<char> seen(degree_, 0);
  std::deque<int> queue{x};
  seen[x] = 1;
  std::vector<int> orbit;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    orbit.push_back(p);
    for (const auto& g : generators_) {
      int q = g(p);
      if (!seen[q]) {
        seen[q] = 1;
        queue.push_back(q);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool PermGroup::transitive() const {
  return static_cast<int>(point_orbit(0).size()) == degree_;
}

GroupPtr make_group(int degree, std::vector<Permutation> gens, long long cap) {
  return std::make_shared<const PermGroup>(PermGroup::generate(degree, std::move(gens), cap));
}

std::optional<long long> subgroup_order_bounded(int degree, const std::vector<Permutation>& gens,
                                                long long limit) {
  std::unordered_map<Permutation, char, PermHash> seen;
  Permutation id(degree);
  seen.emplace(id, 1);
  std::vector<Permutation> elems{id};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = elems[head] * g;
      if (seen.count(next)) continue;
      if (static_cast<long long>(elems.size()) >= limit) return std::nullopt;
      seen.emplace(next, 1);
      elems.push_back(std::move(next));
    }
  }
  return static_cast<long long>(elems.size());
}

}  // namespace maxsym
