#include "maxsym/epi_search.hpp"

#include <algorithm>

#include "maxsym/parallel.hpp"

namespace maxsym {

AmalgamSpec AmalgamSpec::free_product(GroupPtr a, GroupPtr b) {
  GroupPtr edge = make_group(1, {});
  GroupHom ea = GroupHom::create(edge, a, {});
  GroupHom eb = GroupHom::create(edge, b, {});
  AmalgamSpec spec{std::move(a), std::move(b), std::move(edge), std::move(ea), std::move(eb)};
  spec.validate();
  return spec;
}

AmalgamSpec AmalgamSpec::with_edge(GroupPtr a, GroupPtr b, GroupPtr edge, GroupHom embed_a,
                                   GroupHom embed_b) {
  AmalgamSpec spec{std::move(a), std::move(b), std::move(edge), std::move(embed_a),
                   std::move(embed_b)};
  spec.validate();
  return spec;
}

void AmalgamSpec::validate() const {
  if (embed_a.domain()->order() != edge->order() || embed_b.domain()->order() != edge->order())
    throw std::invalid_argument("amalgam: embeddings must have the edge group as domain");
  if (!embed_a.is_injective() || !embed_b.is_injective())
    throw std::invalid_argument("amalgam: edge embeddings must be injective");
  if (!is_free_product()) {
    if (factor_a->order() / edge->order() < 2 || factor_b->order() / edge->order() < 2)
      throw std::invalid_argument("amalgam: edge must have index >= 2 in both factors");
  }
}

bool EpiWitness::satisfies_invariants(const AmalgamSpec& spec) const {
  if (!hom_a.is_injective() || !hom_b.is_injective()) return false;
  for (std::size_t j = 0; j < spec.edge->generators().size(); ++j) {
    Permutation via_a = hom_a.apply(spec.embed_a.gen_images()[j]);
    Permutation via_b = hom_b.apply(spec.embed_b.gen_images()[j]);
    if (via_a != via_b) return false;
  }
  std::vector<Permutation> joint = hom_a.gen_images();
  joint.insert(joint.end(), hom_b.gen_images().begin(), hom_b.gen_images().end());
  auto n = subgroup_order_bounded(target->degree(), joint, target->order());
  return n && *n == target->order();
}

bool torsion_free_kernel(const EpiWitness& w) {
  return w.hom_a.is_injective() && w.hom_b.is_injective();
}

namespace {

std::vector<std::vector<int>> candidates_by_order(const PermGroup& domain, const PermGroup& target) {
  std::vector<std::vector<int>> cands(domain.generators().size());
  for (std::size_t i = 0; i < domain.generators().size(); ++i) {
    long long want = domain.generators()[i].order();
    for (int t = 0; t < static_cast<int>(target.order()); ++t)
      if (target.element(t).order() == want) cands[i].push_back(t);
  }
  return cands;
}

// words (in factor generators) of the edge generators' images under an
// embedding, plus the largest generator index each word touches
struct EdgeWords {
  std::vector<std::vector<int>> words;
  std::vector<int> max_letter;
};

EdgeWords edge_words(const GroupHom& embed, const PermGroup& factor) {
  EdgeWords ew;
  for (const auto& img : embed.gen_images()) {
    const auto& w = factor.word_for(factor.index_of(img));
    int maxl = -1;
    for (int l : w) maxl = std::max(maxl, l);
    ew.words.push_back(w);
    ew.max_letter.push_back(maxl);
  }
  return ew;
}

Permutation eval_word(const std::vector<int>& word, const std::vector<Permutation>& images,
                      int degree) {
  Permutation p(degree);
  for (int l : word) p = p * images[l];
  return p;
}

// closure of the juxtaposed (generator, image) pairs stays within |factor|
bool fiber_prefix_ok(const PermGroup& factor, const PermGroup& target,
                     const std::vector<Permutation>& images, std::size_t depth) {
  std::vector<Permutation> pairs;
  pairs.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i)
    pairs.push_back(juxtapose(factor.generators()[i], images[i]));
  auto n = subgroup_order_bounded(factor.degree() + target.degree(), pairs, factor.order());
  return n.has_value();
}

struct SearchCtx {
  const AmalgamSpec& spec;
  const GroupPtr& target;
  SearchMode mode;
  std::vector<std::vector<int>> a_cands, b_cands;
  EdgeWords ea, eb;
};

void search_b(SearchCtx& ctx, const GroupHom& hom_a, const std::vector<Permutation>& edge_targets,
              std::vector<Permutation>& b_images, std::size_t depth,
              std::vector<EpiWitness>& out, bool& stop) {
  if (stop) return;
  const PermGroup& B = *ctx.spec.factor_b;
  const PermGroup& T = *ctx.target;
  // edge constraints whose words are fully assigned at this depth
  for (std::size_t j = 0; j < ctx.eb.words.size(); ++j) {
    if (ctx.eb.max_letter[j] + 1 != static_cast<int>(depth)) continue;
    if (eval_word(ctx.eb.words[j], b_images, T.degree()) != edge_targets[j]) return;
  }
  if (depth == B.generators().size()) {
    auto hom_b = GroupHom::try_create(ctx.spec.factor_b, ctx.target, b_images);
    if (!hom_b || !hom_b->is_injective()) return;
    std::vector<Permutation> joint = hom_a.gen_images();
    joint.insert(joint.end(), b_images.begin(), b_images.end());
    auto n = subgroup_order_bounded(T.degree(), joint, T.order());
    if (!n || *n != T.order()) return;
    out.push_back(EpiWitness{hom_a, *std::move(hom_b), ctx.target});
    if (ctx.mode == SearchMode::first) stop = true;
    return;
  }
  for (int cand : ctx.b_cands[depth]) {
    b_images[depth] = T.element(cand);
    if (!fiber_prefix_ok(B, T, b_images, depth + 1)) continue;
    search_b(ctx, hom_a, edge_targets, b_images, depth + 1, out, stop);
    if (stop) return;
  }
}

void search_a(SearchCtx& ctx, std::vector<Permutation>& a_images, std::size_t depth,
              std::vector<EpiWitness>& out, bool& stop) {
  if (stop) return;
  const PermGroup& A = *ctx.spec.factor_a;
  const PermGroup& T = *ctx.target;
  if (depth == A.generators().size()) {
    auto hom_a = GroupHom::try_create(ctx.spec.factor_a, ctx.target, a_images);
    if (!hom_a || !hom_a->is_injective()) return;
    std::vector<Permutation> edge_targets;
    edge_targets.reserve(ctx.ea.words.size());
    for (const auto& w : ctx.ea.words) edge_targets.push_back(eval_word(w, a_images, T.degree()));
    std::vector<Permutation> b_images(ctx.spec.factor_b->generators().size(),
                                      Permutation(T.degree()));
    search_b(ctx, *hom_a, edge_targets, b_images, 0, out, stop);
    return;
  }
  for (int cand : ctx.a_cands[depth]) {
    a_images[depth] = T.element(cand);
    if (!fiber_prefix_ok(A, T, a_images, depth + 1)) continue;
    search_a(ctx, a_images, depth + 1, out, stop);
    if (stop) return;
  }
}

std::vector<EpiWitness> dedupe_by_conjugacy(const std::vector<EpiWitness>& witnesses) {
  std::vector<EpiWitness> kept;
  std::vector<std::vector<int>> seen_keys;
  for (const auto& w : witnesses) {
    const PermGroup& T = *w.target;
    std::vector<int> key;
    bool first = true;
    for (const auto& t : T.elements()) {
      Permutation ti = t.inverse();
      std::vector<int> cur;
      for (const auto& img : w.hom_a.gen_images()) cur.push_back(T.index_of(t * img * ti));
      for (const auto& img : w.hom_b.gen_images()) cur.push_back(T.index_of(t * img * ti));
      if (first || cur < key) {
        key = std::move(cur);
        first = false;
      }
    }
    if (std::find(seen_keys.begin(), seen_keys.end(), key) == seen_keys.end()) {
      seen_keys.push_back(key);
      kept.push_back(w);
    }
  }
  return kept;
}

}  // namespace

std::vector<EpiWitness> find_epis(const AmalgamSpec& spec, GroupPtr target,
                                  const EpiSearchOptions& options) {
  spec.validate();
  if (target->order() % spec.factor_a->order() != 0 ||
      target->order() % spec.factor_b->order() != 0)
    return {};

  SearchCtx ctx{spec, target, options.mode,
                candidates_by_order(*spec.factor_a, *target),
                candidates_by_order(*spec.factor_b, *target),
                edge_words(spec.embed_a, *spec.factor_a),
                edge_words(spec.embed_b, *spec.factor_b)};

  std::vector<EpiWitness> all;
  if (spec.factor_a->generators().empty()) {
    std::vector<Permutation> a_images;
    bool stop = false;
    search_a(ctx, a_images, 0, all, stop);
  } else {
    // fan out over the first generator's candidates
    const auto& first_cands = ctx.a_cands[0];
    std::function<std::vector<EpiWitness>(int)> task = [&](int i) {
      SearchCtx local = ctx;
      local.a_cands[0] = {first_cands[i]};
      std::vector<EpiWitness> found;
      std::vector<Permutation> a_images(spec.factor_a->generators().size(),
                                        Permutation(target->degree()));
      bool stop = false;
      search_a(local, a_images, 0, found, stop);
      return found;
    };
    std::function<bool(const std::vector<EpiWitness>&)> hit = nullptr;
    if (options.mode == SearchMode::first)
      hit = [](const std::vector<EpiWitness>& r) { return !r.empty(); };
    auto per_task = detail::run_tasks_ordered<std::vector<EpiWitness>>(
        options.workers, static_cast<int>(first_cands.size()), task, hit);
    for (auto& chunk : per_task) {
      for (auto& w : chunk) {
        all.push_back(std::move(w));
        if (options.mode == SearchMode::first) break;
      }
      if (options.mode == SearchMode::first && !all.empty()) break;
    }
  }
  if (options.dedupe_conjugacy) all = dedupe_by_conjugacy(all);
  return all;
}

std::vector<EpiWitness> find_epis_naive(const AmalgamSpec& spec, GroupPtr target) {
  spec.validate();
  const PermGroup& T = *target;
  std::size_t ra = spec.factor_a->generators().size();
  std::size_t rb = spec.factor_b->generators().size();
  std::vector<EpiWitness> out;

  std::vector<Permutation> a_images(ra, Permutation(T.degree()));
  std::vector<Permutation> b_images(rb, Permutation(T.degree()));
  auto rec_b = [&](auto&& self, std::size_t depth, const GroupHom& hom_a) -> void {
    if (depth == rb) {
      auto hom_b = GroupHom::try_create(spec.factor_b, target, b_images);
      if (!hom_b || !hom_b->is_injective()) return;
      EpiWitness w{hom_a, *std::move(hom_b), target};
      if (w.satisfies_invariants(spec)) out.push_back(std::move(w));
      return;
    }
    for (const auto& t : T.elements()) {
      b_images[depth] = t;
      self(self, depth + 1, hom_a);
    }
  };
  auto rec_a = [&](auto&& self, std::size_t depth) -> void {
    if (depth == ra) {
      auto hom_a = GroupHom::try_create(spec.factor_a, target, a_images);
      if (!hom_a || !hom_a->is_injective()) return;
      rec_b(rec_b, 0, *hom_a);
      return;
    }
    for (const auto& t : T.elements()) {
      a_images[depth] = t;
      self(self, depth + 1);
    }
  };
  rec_a(rec_a, 0);
  return out;
}

}  // namespace maxsym
