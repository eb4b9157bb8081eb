#include "maxsym/census.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "maxsym/hom.hpp"
#include "maxsym/parallel.hpp"

namespace maxsym {

std::string to_string(CensusStatus s) {
  switch (s) {
    case CensusStatus::exists: return "exists";
    case CensusStatus::none: return "none";
    case CensusStatus::cap_exceeded: return "cap_exceeded";
  }
  return "?";
}

std::string Fingerprint::str() const {
  std::string s = "order=" + std::to_string(order) + " orders{";
  for (std::size_t i = 0; i < element_orders.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(element_orders[i].first) + "^" + std::to_string(element_orders[i].second);
  }
  s += "} center=" + std::to_string(center_order) + " ab=[";
  for (std::size_t i = 0; i < abelianization.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(abelianization[i]);
  }
  return s + "]";
}

namespace {

// conjugates of the seeds under the full group, then subgroup closure
std::vector<Permutation> normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds) {
  std::vector<Permutation> conj;
  for (const auto& s : seeds) {
    if (s.is_identity()) continue;
    for (const auto& g : G.elements()) conj.push_back(g * s * g.inverse());
  }
  auto H = PermGroup::generate(G.degree(), std::move(conj), G.order());
  return H.elements();
}

std::vector<long long> abelian_invariant_factors(const std::vector<long long>& coset_orders) {
  long long M = static_cast<long long>(coset_orders.size());
  if (M <= 1) return {};
  std::vector<long long> primes;
  long long rest = M;
  for (long long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  std::vector<std::vector<long long>> partitions;  // descending parts per prime
  for (long long p : primes) {
    // s_i = log_p #{x : x^(p^i) = e}; the differences count parts >= i
    std::vector<long long> s{0};
    long long pi = 1;
    for (;;) {
      pi *= p;
      long long count = 0;
      for (long long o : coset_orders)
        if (pi % o == 0) ++count;
      long long exp = 0;
      for (long long c = count; c > 1; c /= p) ++exp;
      if (exp == s.back()) break;
      s.push_back(exp);
    }
    std::vector<long long> m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(s[i] - s[i - 1]);
    std::vector<long long> parts;
    for (long long j = 1; j <= (m.empty() ? 0 : m[0]); ++j) {
      long long val = 0;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] >= j) val = static_cast<long long>(i + 1);
      parts.push_back(val);
    }
    partitions.push_back(std::move(parts));
  }
  std::size_t width = 0;
  for (const auto& parts : partitions) width = std::max(width, parts.size());
  std::vector<long long> factors;  // built descending, reported ascending
  for (std::size_t i = 0; i < width; ++i) {
    long long d = 1;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      long long e = i < partitions[pi].size() ? partitions[pi][i] : 0;
      for (long long t = 0; t < e; ++t) d *= primes[pi];
    }
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

Fingerprint iso_fingerprint(const PermGroup& G) {
  Fingerprint fp;
  fp.order = G.order();
  std::map<long long, long long> counts;
  for (const auto& x : G.elements()) ++counts[x.order()];
  fp.element_orders.assign(counts.begin(), counts.end());
  fp.center_order = G.center_order();

  // derived subgroup = normal closure of the generator commutators
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < G.generators().size(); ++i)
    for (std::size_t j = i + 1; j < G.generators().size(); ++j) {
      const auto& a = G.generators()[i];
      const auto& b = G.generators()[j];
      comms.push_back(a.inverse() * b.inverse() * a * b);
    }
  std::vector<Permutation> derived = normal_closure(G, comms);
  std::set<Permutation> in_derived(derived.begin(), derived.end());

  std::set<Permutation> seen;
  std::vector<long long> coset_orders;
  for (const auto& x : G.elements()) {
    if (seen.count(x)) continue;
    for (const auto& d : derived) seen.insert(x * d);
    long long t = 1;
    Permutation p = x;
    while (!in_derived.count(p)) {
      p = p * x;
      ++t;
    }
    coset_orders.push_back(t);
  }
  fp.abelianization = abelian_invariant_factors(coset_orders);
  return fp;
}

bool verify_regular_pair(const RegularPair& w, long long k, long long n, long long N) {
  if (w.a.degree() != N || w.b.degree() != N) return false;
  if (w.a.order() != k || w.b.order() != n) return false;
  for (const auto& cyc : w.a.cycles())
    if (static_cast<long long>(cyc.size()) != k) return false;
  for (const auto& cyc : w.b.cycles())
    if (static_cast<long long>(cyc.size()) != n) return false;
  auto G = PermGroup::try_generate(static_cast<int>(N), {w.a, w.b}, N);
  return G && G->order() == N && G->transitive();
}

namespace {

using Clock = std::chrono::steady_clock;

struct WordSpec {
  std::vector<char> steps;  // application order: steps[0] applied first
};

// Isomorph-free table search.  Points are labelled in breadth-first
// discovery order: point 0's a-cycle is the first block, b-images are
// assigned to points 0,1,2,... in order, and whenever b needs a point
// outside the labelled range it receives the least open slot, the start of
// the next a-block.  Up to relabelling, every regular pair then has exactly
// one canonical table, so completions enumerate (group, generator pair)
// isomorphism classes.
//
// Regularity is propagated through right-translation tables: in a regular
// action, right multiplication T_u by the element labelling point u
// commutes with a and b, is injective, and fixes a point only for u = 0.
// Each T_u spreads along defined edges from T_u(0) = u; conflicts prune the
// branch, and T-entries force b-values ahead of the search frontier.
struct CensusSearch {
  int N, k, n;
  CensusMode mode;
  std::vector<int> a, a_inv;
  std::vector<int> b_img, b_pre;
  int labelled = 0;  // points 0..labelled-1 carry labels, a multiple of k

  std::vector<WordSpec> words;  // words[0] is "b" itself, pre-established at n
  struct WordState {
    std::vector<int> img, pre;
    int established = 0;
  };
  std::vector<WordState> wstates;
  struct UndoEntry {
    int word, x, y, prev_established;
  };
  std::vector<UndoEntry> journal;

  std::vector<int> T, Tpre;        // T[u*N+x] = right translation by u at x
  std::vector<int> forced;         // forced b-image per point, -1 if free
  std::vector<std::pair<int, int>> tjournal;  // (u, x) entries to undo
  std::vector<int> fjournal;                  // forced slots to undo
  std::vector<std::array<int, 3>> tqueue;     // propagation worklist

  // replay of a recorded choice sequence (prefix), then free search
  std::vector<int> script;
  std::size_t script_pos = 0;
  // prefix collection: record trails of exactly this many assignments
  int collect_assignments = 0;
  std::vector<int> trail;
  std::vector<std::vector<int>>* collected = nullptr;
  int assignments_made = 0;

  std::vector<RegularPair> witnesses;
  bool stop = false;
  bool budget_hit = false;
  long long nodes = 0;
  bool has_deadline = false;
  Clock::time_point deadline;

  CensusSearch(long long N_, long long k_, long long n_, CensusMode mode_,
               const std::vector<std::string>& tracked)
      : N(static_cast<int>(N_)), k(static_cast<int>(k_)), n(static_cast<int>(n_)), mode(mode_) {
    a.resize(N);
    a_inv.resize(N);
    for (int i = 0; i < N; ++i) a[i] = i - i % k + (i % k + 1) % k;
    for (int i = 0; i < N; ++i) a_inv[a[i]] = i;
    b_img.assign(N, -1);
    b_pre.assign(N, -1);
    labelled = k;
    words.push_back({{'b'}});
    wstates.push_back({std::vector<int>(N, -1), std::vector<int>(N, -1), n});
    for (const auto& s : tracked) {
      if (s == "b") continue;
      WordSpec w;
      for (auto it = s.rbegin(); it != s.rend(); ++it) w.steps.push_back(*it);
      words.push_back(std::move(w));
      wstates.push_back({std::vector<int>(N, -1), std::vector<int>(N, -1), 0});
    }
    T.assign(static_cast<std::size_t>(N) * N, -1);
    Tpre.assign(static_cast<std::size_t>(N) * N, -1);
    forced.assign(N, -1);
    for (int j = 0; j < k; ++j) set_T(j, 0, j);
    drain_tqueue();  // fills T within block 0; cannot fail at init
  }

  bool collecting() const { return collect_assignments > 0; }
  bool scripted() const { return script_pos < script.size(); }

  bool out_of_budget() {
    if (!has_deadline || budget_hit) return budget_hit;
    if ((nodes & 0xfff) == 0 && Clock::now() > deadline) budget_hit = true;
    return budget_hit;
  }

  bool set_T(int u, int x, int y) {
    int& slot = T[static_cast<std::size_t>(u) * N + x];
    if (slot != -1) return slot == y;
    if (u != 0 && x == y) return false;  // right translations are fixed-point free
    int& pslot = Tpre[static_cast<std::size_t>(u) * N + y];
    if (pslot != -1) return false;  // injectivity
    slot = y;
    pslot = x;
    tjournal.emplace_back(u, x);
    tqueue.push_back({u, x, y});
    return true;
  }

  bool force_b(int v, int z) {
    if (b_img[v] != -1) return b_img[v] == z;
    if (forced[v] != -1) return forced[v] == z;
    if (b_pre[z] != -1) return false;
    forced[v] = z;
    fjournal.push_back(v);
    return true;
  }

  // propagate queued T-entries along the defined a- and b-edges
  bool drain_tqueue() {
    while (!tqueue.empty()) {
      auto [u, x, y] = tqueue.back();
      tqueue.pop_back();
      if (!set_T(u, a[x], a[y])) return false;
      int q = b_img[x];
      if (q != -1) {
        int by = b_img[y];
        if (by != -1) {
          if (!set_T(u, q, by)) return false;
        } else {
          int z = T[static_cast<std::size_t>(u) * N + q];
          if (z != -1 && !force_b(y, z)) return false;
        }
      }
      int p = b_pre[x];
      if (p != -1) {
        int py = b_pre[y];
        if (py != -1) {
          if (!set_T(u, p, py)) return false;
        } else {
          int w = T[static_cast<std::size_t>(u) * N + p];
          if (w != -1 && !force_b(w, y)) return false;
        }
      }
    }
    return true;
  }

  // derivations triggered by the new edge b(c) = q
  bool propagate_b_edge(int c, int q) {
    for (int u = 0; u < labelled; ++u) {
      int y = T[static_cast<std::size_t>(u) * N + c];
      if (y != -1) {
        int by = b_img[y];
        if (by != -1) {
          if (!set_T(u, q, by)) return false;
        } else {
          int z = T[static_cast<std::size_t>(u) * N + q];
          if (z != -1 && !force_b(y, z)) return false;
        }
      }
      int x = Tpre[static_cast<std::size_t>(u) * N + c];
      if (x != -1) {
        int bx = b_img[x];
        if (bx != -1) {
          if (!set_T(u, bx, q)) return false;
        } else {
          int t = Tpre[static_cast<std::size_t>(u) * N + q];
          if (t != -1 && !force_b(x, t)) return false;
        }
      }
    }
    return drain_tqueue();
  }

  int step(int x, char c) const {
    switch (c) {
      case 'a': return a[x];
      case 'A': return a_inv[x];
      case 'b': return b_img[x];
      default: return b_pre[x];  // 'B'
    }
  }
  int step_back(int x, char c) const {
    switch (c) {
      case 'a': return a_inv[x];
      case 'A': return a[x];
      case 'b': return b_pre[x];
      default: return b_img[x];  // 'B'
    }
  }

  // record w(x) = y; false on a pruning contradiction
  bool insert_word_edge(int wi, int x, int y) {
    WordState& s = wstates[wi];
    if (s.img[x] != -1) return true;  // rederived; value agrees by construction
    journal.push_back({wi, x, y, s.established});
    s.img[x] = y;
    s.pre[y] = x;
    int len = 1;
    bool closed = false;
    if (x == y) {
      closed = true;
    } else {
      for (int cur = y;;) {
        if (cur == x) {
          closed = true;
          break;
        }
        cur = s.img[cur];
        if (cur == -1) break;
        ++len;
      }
    }
    if (closed) {
      // every closed cycle of a tracked word must share one length dividing N
      if (s.established) return len == s.established;
      if (N % len != 0) return false;
      s.established = len;
      return true;
    }
    if (s.established) {
      int back = 0;
      for (int cur = x; s.pre[cur] != -1;) {
        cur = s.pre[cur];
        ++back;
      }
      if (back + len + 1 > s.established) return false;  // open chain can no longer close at L
    }
    return true;
  }

  struct Marks {
    std::size_t wj, tj, fj;
    bool fresh;
  };

  void rollback(const Marks& m) {
    while (journal.size() > m.wj) {
      const UndoEntry& u = journal.back();
      wstates[u.word].img[u.x] = -1;
      wstates[u.word].pre[u.y] = -1;
      wstates[u.word].established = u.prev_established;
      journal.pop_back();
    }
    while (tjournal.size() > m.tj) {
      auto [u, x] = tjournal.back();
      int y = T[static_cast<std::size_t>(u) * N + x];
      T[static_cast<std::size_t>(u) * N + x] = -1;
      Tpre[static_cast<std::size_t>(u) * N + y] = -1;
      tjournal.pop_back();
    }
    while (fjournal.size() > m.fj) {
      forced[fjournal.back()] = -1;
      fjournal.pop_back();
    }
    tqueue.clear();
    if (m.fresh) labelled -= k;
  }

  bool word_updates(int c, int q) {
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      const auto& steps = words[wi].steps;
      for (std::size_t j = 0; j < steps.size(); ++j) {
        if (steps[j] != 'b' && steps[j] != 'B') continue;
        // start points whose evaluation first crosses the new edge at step j
        int x = steps[j] == 'b' ? c : q;
        bool ok = true;
        for (std::size_t t = j; t-- > 0;) {
          x = step_back(x, steps[t]);
          if (x == -1) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        int y = x;
        for (char st : steps) {
          y = step(y, st);
          if (y == -1) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (!insert_word_edge(static_cast<int>(wi), x, y)) return false;
      }
    }
    return true;
  }

  // transactional b(v) = w, including fresh-block creation and propagation
  bool assign(int v, int w, bool fresh, Marks& m) {
    m = {journal.size(), tjournal.size(), fjournal.size(), fresh};
    if (forced[v] != -1 && forced[v] != w) return false;
    if (b_pre[w] != -1 && !fresh) return false;
    if (fresh) {
      labelled += k;
      for (int j = 0; j < k; ++j)
        if (!set_T(w + j, 0, w + j)) {
          rollback(m);
          return false;
        }
    }
    b_img[v] = w;
    b_pre[w] = v;
    ++nodes;
    ++assignments_made;
    if (word_updates(v, w) && propagate_b_edge(v, w)) return true;
    b_img[v] = -1;
    b_pre[w] = -1;
    --assignments_made;
    rollback(m);
    return false;
  }

  void unassign(int v, int w, const Marks& m) {
    b_img[v] = -1;
    b_pre[w] = -1;
    --assignments_made;
    rollback(m);
  }

  void complete() {
    std::vector<int> ia(a.begin(), a.end()), ib(b_img.begin(), b_img.end());
    RegularPair pair{Permutation(std::move(ia)), Permutation(std::move(ib))};
    if (!verify_regular_pair(pair, k, n, N)) return;
    witnesses.push_back(std::move(pair));
    if (mode == CensusMode::exists) stop = true;
  }

  void apply_choice(int v, int w) {
    bool fresh = w == labelled;
    if (collecting()) trail.push_back(w);
    Marks m;
    if (assign(v, w, fresh, m)) {
      if (collecting() && assignments_made == collect_assignments) {
        collected->push_back(trail);
      } else {
        rec(v + 1);
      }
      unassign(v, w, m);
    }
    if (collecting()) trail.pop_back();
  }

  void rec(int v) {
    if (stop || out_of_budget()) return;
    if (v == labelled) {
      // every labelled point processed; anything unlabelled is unreachable
      if (labelled == N) complete();
      return;
    }
    if (scripted()) {
      int w = script[script_pos++];
      apply_choice(v, w);
      return;
    }
    if (forced[v] != -1) {
      apply_choice(v, forced[v]);
      return;
    }
    for (int w = 0; w < labelled; ++w) {
      if (stop || budget_hit) return;
      if (b_pre[w] == -1) apply_choice(v, w);
    }
    if (labelled < N && !(stop || budget_hit)) apply_choice(v, labelled);
  }

  void run() { rec(0); }
};

struct CacheEntry {
  std::optional<CensusResult> exists_run, all_run;
};
std::map<std::tuple<long long, long long, long long>, CacheEntry> g_cache;
std::mutex g_cache_mutex;

CensusResult finish_result(const CensusQuery& q, std::vector<RegularPair> witnesses,
                           bool budget_hit, long long nodes, long long millis) {
  CensusResult res;
  res.nodes = nodes;
  res.millis = millis;
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  if (!witnesses.empty()) {
    res.status = budget_hit && q.mode == CensusMode::all ? CensusStatus::cap_exceeded
                                                         : CensusStatus::exists;
    if (q.mode == CensusMode::exists) witnesses.resize(1);
    res.witnesses = std::move(witnesses);
    std::set<Fingerprint> fps;
    for (const auto& w : res.witnesses) {
      auto G = PermGroup::generate(w.a.degree(), {w.a, w.b}, q.order);
      fps.insert(iso_fingerprint(G));
    }
    res.fingerprints.assign(fps.begin(), fps.end());
  } else {
    res.status = budget_hit ? CensusStatus::cap_exceeded : CensusStatus::none;
  }
  return res;
}

}  // namespace

CensusResult census_regular(const CensusQuery& q) {
  if (q.k < 2 || q.n < 2) throw std::invalid_argument("census: generator orders must be >= 2");
  if (q.order < 1) throw std::invalid_argument("census: order must be >= 1");
  if (q.order > q.degree_cap) {
    CensusResult res;
    res.status = CensusStatus::cap_exceeded;
    return res;
  }
  // a free cyclic action forces uniform cycles, so k and n must divide N
  if (q.order % q.k != 0 || q.order % q.n != 0) {
    CensusResult res;
    res.status = CensusStatus::none;
    return res;
  }

  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find({q.k, q.n, q.order});
    if (it != g_cache.end()) {
      if (q.mode == CensusMode::all && it->second.all_run) return *it->second.all_run;
      if (q.mode == CensusMode::exists) {
        if (it->second.exists_run) return *it->second.exists_run;
        if (it->second.all_run) {
          CensusResult res = *it->second.all_run;
          if (!res.witnesses.empty()) {
            res.witnesses.resize(1);
            auto G = PermGroup::generate(res.witnesses[0].a.degree(),
                                         {res.witnesses[0].a, res.witnesses[0].b}, q.order);
            res.fingerprints = {iso_fingerprint(G)};
          }
          return res;
        }
      }
    }
  }

  auto t0 = Clock::now();
  bool has_deadline = q.budget_ms > 0;
  auto deadline = t0 + std::chrono::milliseconds(q.budget_ms);

  // enumerate branch prefixes, then fan the subtrees out across workers
  std::vector<std::vector<int>> prefixes;
  {
    CensusSearch collector(q.order, q.k, q.n, q.mode, q.tracked_words);
    collector.collect_assignments = q.order >= 8 ? 2 : 1;
    collector.collected = &prefixes;
    collector.run();
  }

  struct TaskResult {
    std::vector<RegularPair> witnesses;
    long long nodes = 0;
    bool budget_hit = false;
  };
  std::function<TaskResult(int)> task = [&](int i) {
    CensusSearch search(q.order, q.k, q.n, q.mode, q.tracked_words);
    search.script = prefixes[i];
    search.has_deadline = has_deadline;
    search.deadline = deadline;
    search.run();
    return TaskResult{std::move(search.witnesses), search.nodes, search.budget_hit};
  };
  std::function<bool(const TaskResult&)> hit = nullptr;
  if (q.mode == CensusMode::exists)
    hit = [](const TaskResult& r) { return !r.witnesses.empty(); };
  auto results =
      detail::run_tasks_ordered<TaskResult>(q.workers, static_cast<int>(prefixes.size()), task, hit);

  long long total_nodes = 0;
  bool budget_hit = false;
  std::vector<RegularPair> witnesses;
  for (auto& r : results) {
    total_nodes += r.nodes;
    budget_hit = budget_hit || r.budget_hit;
    if (q.mode == CensusMode::exists && !witnesses.empty()) continue;
    for (auto& w : r.witnesses) {
      witnesses.push_back(std::move(w));
      if (q.mode == CensusMode::exists) break;
    }
  }

  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  CensusResult res = finish_result(q, std::move(witnesses), budget_hit, total_nodes, millis);

  if (res.status != CensusStatus::cap_exceeded) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& entry = g_cache[{q.k, q.n, q.order}];
    if (q.mode == CensusMode::all) entry.all_run = res;
    else entry.exists_run = res;
  }
  return res;
}

bool is_squarefree(long long N) {
  if (N < 1) return false;
  for (long long p = 2; p * p <= N; ++p)
    if (N % (p * p) == 0) return false;
  return true;
}

std::vector<PermGroup> squarefree_enum(long long N) {
  if (!is_squarefree(N)) throw std::invalid_argument("squarefree_enum: N must be squarefree");
  std::vector<PermGroup> reps;
  for (long long d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    long long e = N / d;
    std::vector<long long> rs;
    if (d == 1) {
      rs.push_back(0);
    } else {
      for (long long r = 1; r < d; ++r) {
        if (std::gcd(r, d) != 1) continue;
        long long pow = 1;
        for (long long t = 0; t < e; ++t) pow = pow * r % d;
        if (pow == 1) rs.push_back(r);
      }
    }
    for (long long r : rs) {
      std::vector<int> a_im(d + e), t_im(d + e);
      for (long long x = 0; x < d; ++x) {
        a_im[x] = static_cast<int>((x + 1) % d);
        t_im[x] = static_cast<int>(d == 1 ? 0 : r * x % d);
      }
      for (long long j = 0; j < e; ++j) {
        a_im[d + j] = static_cast<int>(d + j);
        t_im[d + j] = static_cast<int>(d + (j + 1) % e);
      }
      PermGroup G = PermGroup::generate(
          static_cast<int>(d + e),
          {Permutation(std::move(a_im)), Permutation(std::move(t_im))}, N + 1);
      if (G.order() != N)
        throw std::logic_error("squarefree_enum: split metacyclic build has wrong order");
      bool dup = false;
      for (const auto& H : reps)
        if (isomorphic(G, H)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(std::move(G));
    }
  }
  return reps;
}

bool isomorphic(const PermGroup& G, const PermGroup& H) {
  if (G.order() != H.order()) return false;
  if (iso_fingerprint(G) != iso_fingerprint(H)) return false;
  std::size_t r = G.generators().size();
  std::vector<Permutation> images(r, Permutation(H.degree()));
  GroupPtr Hp = std::make_shared<const PermGroup>(H);
  GroupPtr Gp = std::make_shared<const PermGroup>(G);
  bool found = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == r) {
      auto h = GroupHom::try_create(Gp, Hp, images);
      if (h && h->is_injective()) found = true;
      return;
    }
    long long want = G.generators()[depth].order();
    for (const auto& cand : H.elements()) {
      if (cand.order() != want) continue;
      images[depth] = cand;
      std::vector<Permutation> pairs;
      for (std::size_t i = 0; i <= depth; ++i)
        pairs.push_back(juxtapose(G.generators()[i], images[i]));
      if (!subgroup_order_bounded(G.degree() + H.degree(), pairs, G.order())) continue;
      self(self, depth + 1);
      if (found) return;
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace maxsym
