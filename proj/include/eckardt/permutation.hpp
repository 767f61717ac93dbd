#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eckardt {

/// Permutation of {0,...,4}; image[i] is where i is sent.
struct Permutation {
  std::array<std::uint8_t, 5> image{0, 1, 2, 3, 4};

  static Permutation identity() { return {}; }
  std::uint8_t operator()(std::size_t i) const { return image[i]; }
  bool is_identity() const { return *this == identity(); }
  Permutation inverse() const;
  /// Element order in S5.
  int order() const;
  /// +1 for even, -1 for odd.
  int sign() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// All 120 elements of S5 in lexicographic order of their images.
const std::vector<Permutation>& all_permutations();

/// Moves entry i to position pi(i).
template <typename T>
std::array<T, 5> permute(const std::array<T, 5>& values, const Permutation& pi) {
  std::array<T, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[pi(i)] = values[i];
  return out;
}

}  // namespace eckardt
