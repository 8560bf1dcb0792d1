// Node relabelings as validated bijections on {0, ..., n-1}.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sieveforge/random.hpp"

namespace sieveforge {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<char> seen(map_.size(), 0);
    for (int x : map_) {
      if (x < 0 || static_cast<std::size_t>(x) >= map_.size() || seen[x])
        throw std::invalid_argument("permutation is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return Permutation(std::move(m));
  }

  static Permutation random(int n, Rng& rng) {
    return Permutation(random_permutation(n, rng));
  }

  int size() const { return static_cast<int>(map_.size()); }

  int operator()(int i) const { return map_[i]; }

  Permutation inverse() const {
    std::vector<int> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  // (a.then(b))(i) = b(a(i))
  Permutation then(const Permutation& b) const {
    if (size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> m(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) m[i] = b.map_[map_[i]];
    return Permutation(std::move(m));
  }

  const std::vector<int>& mapping() const { return map_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

}  // namespace sieveforge
