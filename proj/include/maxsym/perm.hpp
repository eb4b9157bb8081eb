#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace maxsym {

// A permutation of {0,...,degree-1}, stored as its image vector.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);                 // identity
  explicit Permutation(std::vector<int> images);    // validates bijection

  // cycles given as point lists, e.g. {{0,1,2},{3,4}}; omitted points are fixed
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation power(long long e) const;

  // (p * q)(x) = p(q(x))
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  // least k >= 1 with p^k = id; the lcm of the cycle lengths
  long long order() const;
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// p acting on the first block and q on the second, side by side
Permutation juxtapose(const Permutation& p, const Permutation& q);

long long lcm_ll(long long a, long long b);

}  // namespace maxsym
