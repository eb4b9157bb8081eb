#include "maxsym/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace maxsym {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      p.images_[from] = to;
    }
  }
  return Permutation(std::move(p.images_));  // re-validate
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::power(long long e) const {
  if (e < 0) return inverse().power(-e);
  Permutation acc(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  Permutation r;
  r.images_.resize(p.images_.size());
  for (int i = 0; i < p.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long Permutation::order() const {
  long long ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = lcm_ll(ord, len);
  }
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = 1;
      continue;
    }
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cs) {
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cyc[i]);
    }
    s += ')';
  }
  return s;
}

Permutation juxtapose(const Permutation& p, const Permutation& q) {
  std::vector<int> im(p.degree() + q.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p(i);
  for (int i = 0; i < q.degree(); ++i) im[p.degree() + i] = p.degree() + q(i);
  return Permutation(std::move(im));
}

}  // namespace maxsym
