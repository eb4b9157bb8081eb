#include "maxsym/catalog.hpp"

#include <numeric>

namespace maxsym {

namespace {

long long factorial(long long n) {
  long long f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

long long mod_pow(long long base, long long exp, long long mod) {
  long long acc = 1 % mod;
  base %= mod;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
  }
  return acc;
}

Permutation cycle_perm(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = (i + 1) % degree;
  return Permutation(std::move(im));
}

}  // namespace

NamedGroupSpec NamedGroupSpec::cyclic(long long n) { return {Kind::cyclic, n}; }
NamedGroupSpec NamedGroupSpec::dihedral(long long n) { return {Kind::dihedral, n}; }
NamedGroupSpec NamedGroupSpec::symmetric(long long n) { return {Kind::symmetric, n}; }
NamedGroupSpec NamedGroupSpec::alternating(long long n) { return {Kind::alternating, n}; }
NamedGroupSpec NamedGroupSpec::quasidihedral16() { return {Kind::quasidihedral16, 16}; }
NamedGroupSpec NamedGroupSpec::direct_product(NamedGroupSpec a, NamedGroupSpec b) {
  NamedGroupSpec s{Kind::direct_product, 0};
  s.factors = {std::move(a), std::move(b)};
  return s;
}
NamedGroupSpec NamedGroupSpec::semidirect_cyclic(long long m, long long k, long long r) {
  NamedGroupSpec s{Kind::semidirect_cyclic, 0};
  s.m = m;
  s.k = k;
  s.r = r;
  return s;
}
NamedGroupSpec NamedGroupSpec::quad_twist(long long g) { return {Kind::quad_twist, g}; }
NamedGroupSpec NamedGroupSpec::signed_perm(long long g) { return {Kind::signed_perm, g}; }

bool operator==(const NamedGroupSpec& a, const NamedGroupSpec& b) {
  return a.kind == b.kind && a.n == b.n && a.m == b.m && a.k == b.k && a.r == b.r &&
         a.factors == b.factors;
}

long long NamedGroupSpec::expected_order() const {
  switch (kind) {
    case Kind::cyclic: return n;
    case Kind::dihedral: return 2 * n;
    case Kind::symmetric: return factorial(n);
    case Kind::alternating: return n <= 2 ? 1 : factorial(n) / 2;
    case Kind::quasidihedral16: return 16;
    case Kind::direct_product:
      return factors[0].expected_order() * factors[1].expected_order();
    case Kind::semidirect_cyclic: return m * k;
    case Kind::quad_twist: return 4 * (n - 1);
    case Kind::signed_perm: return (1ll << n) * factorial(n);
  }
  return 0;
}

std::string NamedGroupSpec::name() const {
  switch (kind) {
    case Kind::cyclic: return "Z" + std::to_string(n);
    case Kind::dihedral: return "D" + std::to_string(n);
    case Kind::symmetric: return "S" + std::to_string(n);
    case Kind::alternating: return "A" + std::to_string(n);
    case Kind::quasidihedral16: return "QD16";
    case Kind::direct_product: return factors[0].name() + "x" + factors[1].name();
    case Kind::semidirect_cyclic:
      return "Z" + std::to_string(m) + ":Z" + std::to_string(k) + "(r=" + std::to_string(r) + ")";
    case Kind::quad_twist: return "QT" + std::to_string(n);
    case Kind::signed_perm: return "W" + std::to_string(n);
  }
  return "?";
}

namespace {

GroupPtr build_cyclic(long long n, long long cap) {
  if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
  if (n == 1) return make_group(1, {}, cap);
  return make_group(static_cast<int>(n), {cycle_perm(static_cast<int>(n))}, cap);
}

GroupPtr build_dihedral(long long n, long long cap) {
  if (n < 1) throw std::invalid_argument("dihedral: n >= 1 required");
  if (n == 1)
    return make_group(2, {Permutation(2), Permutation::from_cycles(2, {{0, 1}})}, cap);
  if (n == 2)
    return make_group(
        4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}, cap);
  int d = static_cast<int>(n);
  std::vector<int> refl(d);
  for (int i = 0; i < d; ++i) refl[i] = (d - i) % d;
  return make_group(d, {cycle_perm(d), Permutation(std::move(refl))}, cap);
}

GroupPtr build_symmetric(long long n, long long cap) {
  if (n < 1) throw std::invalid_argument("symmetric: n >= 1 required");
  if (n == 1) return make_group(1, {Permutation(1), Permutation(1)}, cap);
  int d = static_cast<int>(n);
  return make_group(d, {Permutation::from_cycles(d, {{0, 1}}), cycle_perm(d)}, cap);
}

GroupPtr build_alternating(long long n, long long cap) {
  if (n < 1) throw std::invalid_argument("alternating: n >= 1 required");
  int d = static_cast<int>(n);
  if (n <= 2) return make_group(d, {}, cap);
  Permutation three = Permutation::from_cycles(d, {{0, 1, 2}});
  if (n == 3) return make_group(d, {three, three}, cap);
  Permutation big;
  if (n % 2 == 1) {
    big = cycle_perm(d);
  } else {
    std::vector<int> cyc;
    for (int i = 1; i < d; ++i) cyc.push_back(i);
    big = Permutation::from_cycles(d, {cyc});
  }
  return make_group(d, {three, big}, cap);
}

GroupPtr build_semidirect(long long m, long long k, long long r, long long cap) {
  if (m < 1 || k < 1) throw std::invalid_argument("semidirect_cyclic: m,k >= 1 required");
  r = ((r % m) + m) % m;
  if (m == 1) r = 0;
  if (m > 1) {
    if (std::gcd(r, m) != 1 || mod_pow(r, k, m) != 1)
      throw std::invalid_argument("semidirect_cyclic: need r^k = 1 (mod m), gcd(r,m) = 1");
  }
  int d = static_cast<int>(m + k);
  // a: x -> x+1 on the m affine points; t: x -> r*x, plus a k-cycle marker block
  std::vector<int> a_im(d), t_im(d);
  for (int x = 0; x < m; ++x) {
    a_im[x] = static_cast<int>((x + 1) % m);
    t_im[x] = static_cast<int>(r * x % m);
  }
  for (int j = 0; j < k; ++j) {
    a_im[m + j] = static_cast<int>(m + j);
    t_im[m + j] = static_cast<int>(m + (j + 1) % k);
  }
  return make_group(d, {Permutation(std::move(a_im)), Permutation(std::move(t_im))}, cap);
}

// normal-form triples (i, j, e) for x^i y^j t^e, converted to permutations
// through the left regular representation
GroupPtr build_quad_twist(long long g, long long cap) {
  if (g < 3 || g % 2 == 0) throw std::invalid_argument("quad_twist: odd g >= 3 required");
  const long long m = (g - 1) / 2;
  const long long order = 8 * m;
  auto idx = [&](long long i, long long j, long long e) { return (i * 4 + j) * 2 + e; };
  auto mul = [&](long long i1, long long j1, long long e1, long long i2, long long j2,
                 long long e2) {
    long long i2eff = e1 ? ((j2 & 1) - i2) : i2;
    if (j1 & 1) i2eff = -i2eff;
    long long i = ((i1 + i2eff) % m + m) % m;
    return idx(i, (j1 + j2) % 4, e1 ^ e2);
  };
  auto left_mult = [&](long long gi, long long gj, long long ge) {
    std::vector<int> im(order);
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < 4; ++j)
        for (long long e = 0; e < 2; ++e)
          im[idx(i, j, e)] = static_cast<int>(mul(gi, gj, ge, i, j, e));
    return Permutation(std::move(im));
  };
  return make_group(static_cast<int>(order),
                    {left_mult(1 % m, 0, 0), left_mult(0, 1, 0), left_mult(0, 0, 1)}, cap);
}

GroupPtr build_signed_perm(long long g, long long cap) {
  if (g < 1) throw std::invalid_argument("signed_perm: g >= 1 required");
  int d = static_cast<int>(2 * g);
  Permutation flip = Permutation::from_cycles(d, {{0, 1}});
  Permutation swap01 =
      g >= 2 ? Permutation::from_cycles(d, {{0, 2}, {1, 3}}) : Permutation(d);
  std::vector<int> cyc_im(d);
  for (int c = 0; c < g; ++c) {
    int cn = (c + 1) % static_cast<int>(g);
    cyc_im[2 * c] = 2 * cn;
    cyc_im[2 * c + 1] = 2 * cn + 1;
  }
  return make_group(d, {flip, swap01, Permutation(std::move(cyc_im))}, cap);
}

GroupPtr build_product(const NamedGroupSpec& spec, long long cap) {
  GroupPtr A = build(spec.factors[0], cap);
  GroupPtr B = build(spec.factors[1], cap);
  if (A->order() * B->order() > cap) throw CapExceeded("direct product exceeds cap");
  std::vector<Permutation> gens;
  Permutation idA(A->degree()), idB(B->degree());
  for (const auto& ga : A->generators()) gens.push_back(juxtapose(ga, idB));
  for (const auto& gb : B->generators()) gens.push_back(juxtapose(idA, gb));
  return make_group(A->degree() + B->degree(), std::move(gens), cap);
}

}  // namespace

GroupPtr build(const NamedGroupSpec& spec, long long cap) {
  GroupPtr G;
  switch (spec.kind) {
    case NamedGroupSpec::Kind::cyclic: G = build_cyclic(spec.n, cap); break;
    case NamedGroupSpec::Kind::dihedral: G = build_dihedral(spec.n, cap); break;
    case NamedGroupSpec::Kind::symmetric: G = build_symmetric(spec.n, cap); break;
    case NamedGroupSpec::Kind::alternating: G = build_alternating(spec.n, cap); break;
    case NamedGroupSpec::Kind::quasidihedral16: G = build_semidirect(8, 2, 3, cap); break;
    case NamedGroupSpec::Kind::direct_product: G = build_product(spec, cap); break;
    case NamedGroupSpec::Kind::semidirect_cyclic:
      G = build_semidirect(spec.m, spec.k, spec.r, cap);
      break;
    case NamedGroupSpec::Kind::quad_twist: G = build_quad_twist(spec.n, cap); break;
    case NamedGroupSpec::Kind::signed_perm: G = build_signed_perm(spec.n, cap); break;
  }
  if (G->order() != spec.expected_order())
    throw std::logic_error("catalog: built order mismatch for " + spec.name());
  return G;
}

namespace {

using Kind = NamedGroupSpec::Kind;

// image list for the supported inclusion, or empty if the pair is unsupported
std::vector<Permutation> embedding_images(const NamedGroupSpec& sub, const NamedGroupSpec& over,
                                          const PermGroup& overG) {
  const auto& og = overG.generators();
  if (sub.kind == Kind::cyclic) {
    long long n = sub.n;
    if (n == 1) return {};  // trivial group has no generators... handled by caller
    switch (over.kind) {
      case Kind::cyclic:
        if (over.n % n == 0) return {og[0].power(over.n / n)};
        break;
      case Kind::dihedral:
        if (n == over.n) return {og[0]};
        if (n == 2) return {og[1]};
        break;
      case Kind::symmetric:
        if (n == over.n) return {og[1]};
        if (n == 2) return {og[0]};
        break;
      case Kind::alternating:
        if (n == over.n && n % 2 == 1 && n >= 3) return {og[1]};
        if (n == 3 && over.n >= 4) return {og[0]};
        break;
      case Kind::quasidihedral16:
        if (n == 8) return {og[0]};
        break;
      default: break;
    }
  }
  if (sub.kind == Kind::dihedral) {
    long long k = sub.n;
    switch (over.kind) {
      case Kind::dihedral:
        if (over.n % k == 0) return {og[0].power(over.n / k), og[1]};
        break;
      case Kind::symmetric:
        if (k == over.n && k >= 3) {
          int d = overG.degree();
          std::vector<int> refl(d);
          for (int i = 0; i < d; ++i) refl[i] = (d - i) % d;
          return {og[1], Permutation(std::move(refl))};
        }
        break;
      case Kind::quasidihedral16:
        if (k == 4) return {og[0].power(2), og[1]};
        break;
      default: break;
    }
  }
  if (sub.kind == Kind::alternating && over.kind == Kind::symmetric && sub.n == over.n &&
      sub.n >= 3) {
    auto subG = build(sub);
    return subG->generators();
  }
  if (over.kind == Kind::direct_product) {
    // factor inclusions
    auto A = build(over.factors[0]);
    auto B = build(over.factors[1]);
    Permutation idA(A->degree()), idB(B->degree());
    if (sub == over.factors[0]) {
      std::vector<Permutation> ims;
      for (const auto& g : A->generators()) ims.push_back(juxtapose(g, idB));
      return ims;
    }
    if (sub == over.factors[1]) {
      std::vector<Permutation> ims;
      for (const auto& g : B->generators()) ims.push_back(juxtapose(idA, g));
      return ims;
    }
  }
  throw std::invalid_argument("standard_embedding: unsupported pair " + sub.name() + " <= " +
                              over.name());
}

}  // namespace

GroupHom standard_embedding(const NamedGroupSpec& sub, const NamedGroupSpec& over,
                            GroupPtr sub_group, GroupPtr over_group) {
  std::vector<Permutation> images;
  if (sub.kind == Kind::cyclic && sub.n == 1) {
    images = {};
    for (std::size_t i = 0; i < sub_group->generators().size(); ++i)
      images.push_back(Permutation(over_group->degree()));
  } else {
    images = embedding_images(sub, over, *over_group);
  }
  GroupHom h = GroupHom::create(std::move(sub_group), std::move(over_group), std::move(images));
  if (!h.is_injective())
    throw std::logic_error("standard_embedding: inclusion not injective for " + sub.name());
  return h;
}

GroupHom standard_embedding(const NamedGroupSpec& sub, const NamedGroupSpec& over) {
  return standard_embedding(sub, over, build(sub), build(over));
}

}  // namespace maxsym
