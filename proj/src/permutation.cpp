#include "eckardt/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace eckardt {

Permutation Permutation::inverse() const {
  Permutation inv;
  for (std::uint8_t i = 0; i < 5; ++i) inv.image[image[i]] = i;
  return inv;
}

int Permutation::sign() const {
  int cycles = 0;
  std::array<bool, 5> seen{};
  for (std::size_t start = 0; start < 5; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = image[i]) seen[i] = true;
  }
  return (5 - cycles) % 2 == 0 ? 1 : -1;
}

int Permutation::order() const {
  int result = 1;
  std::array<bool, 5> seen{};
  for (std::size_t start = 0; start < 5; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = image[i]) {
      seen[i] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) s += ",";
    s += std::to_string(image[i]);
  }
  return s + "]";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out;
  for (std::size_t i = 0; i < 5; ++i) out.image[i] = a(b(i));
  return out;
}

const std::vector<Permutation>& all_permutations() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    Permutation p;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return out;
  }();
  return perms;
}

}  // namespace eckardt
