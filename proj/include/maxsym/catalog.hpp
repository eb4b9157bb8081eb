#pragma once

#include <string>
#include <vector>

#include "maxsym/hom.hpp"

namespace maxsym {

// Constructors for the named finite groups used across the library.
//
// Generator conventions (relied on by embeddings and witness builders):
//   cyclic n            [c]        c = (0 1 ... n-1)
//   dihedral n          [r, s]     r = rotation of order n, s = reflection; order 2n
//   symmetric n         [t, c]     t = (0 1), c = (0 1 ... n-1)
//   alternating n       [u, c]     u = (0 1 2); c = n-cycle (n odd) or (1 ... n-1)-cycle (n even)
//   quasidihedral16     [r, s]     r^8 = s^2 = 1, s r s = r^3
//   direct_product a b  gens of a extended, then gens of b shifted
//   semidirect_cyclic   [a, t]     a = translation on Z_m, t acts by x -> r*x; order m*k
//   quad_twist g        [x, y, t]  y x y^-1 = x^-1, t x t^-1 = x^-1, t y t^-1 = x y;
//                                  x of order (g-1)/2, y of order 4, t of order 2; order 4(g-1)
//   signed_perm g       [f, w, c]  signed coordinate permutations of Z^g on 2g points;
//                                  f = sign flip of coordinate 0, w = swap of coordinates 0,1,
//                                  c = coordinate cycle; order 2^g g!
struct NamedGroupSpec {
  enum class Kind {
    cyclic,
    dihedral,
    symmetric,
    alternating,
    quasidihedral16,
    direct_product,
    semidirect_cyclic,
    quad_twist,
    signed_perm,
  };
  Kind kind;
  long long n = 0;            // cyclic/dihedral/symmetric/alternating degree, quad_twist genus,
                              // signed_perm genus
  long long m = 0, k = 0, r = 0;  // semidirect_cyclic parameters
  std::vector<NamedGroupSpec> factors;  // direct_product

  static NamedGroupSpec cyclic(long long n);
  static NamedGroupSpec dihedral(long long n);
  static NamedGroupSpec symmetric(long long n);
  static NamedGroupSpec alternating(long long n);
  static NamedGroupSpec quasidihedral16();
  static NamedGroupSpec direct_product(NamedGroupSpec a, NamedGroupSpec b);
  static NamedGroupSpec semidirect_cyclic(long long m, long long k, long long r);
  static NamedGroupSpec quad_twist(long long g);
  static NamedGroupSpec signed_perm(long long g);

  long long expected_order() const;
  std::string name() const;
};

GroupPtr build(const NamedGroupSpec& spec, long long cap = kDefaultGroupCap);

// The canonical inclusion for a supported (sub, over) pair:
//   Z_n  <= Z_mn          generator -> generator^m
//   Z_n  <= D_n           rotation subgroup
//   Z_2  <= D_n           reflection subgroup (n >= 1); for D_2 the first generator
//   Z_n  <= S_n           the n-cycle; Z_2 <= S_n the transposition (0 1)
//   Z_n  <= A_n (n odd)   the n-cycle;  Z_3 <= A_n the 3-cycle (0 1 2)
//   D_k  <= D_mk          rotation -> rotation^m, reflection -> reflection
//   D_n  <= S_n           natural action
//   A_n  <= S_n           natural inclusion
//   D_4  <= quasidihedral16   rotation -> r^2, reflection -> s
//   factor inclusions into direct products
// Throws std::invalid_argument for unsupported pairs.
GroupHom standard_embedding(const NamedGroupSpec& sub, const NamedGroupSpec& over);

// same, reusing prebuilt copies of the two groups
GroupHom standard_embedding(const NamedGroupSpec& sub, const NamedGroupSpec& over,
                            GroupPtr sub_group, GroupPtr over_group);

bool operator==(const NamedGroupSpec& a, const NamedGroupSpec& b);

}  // namespace maxsym
