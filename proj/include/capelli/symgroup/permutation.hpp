#pragma once

#include <compare>
#include <string>
#include <vector>

namespace capelli {

// A permutation of {1..r}, stored as its image list. Composition is (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int r);
  // 1-based images; throws UsageError unless they form a bijection of {1..r}.
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int r, int a, int b);
  // Adjacent transposition s_i = (i, i+1).
  static Permutation simple(int r, int i) { return transposition(r, i, i + 1); }
  // All of S_r, lexicographic in the image list.
  static std::vector<Permutation> all(int r);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  bool is_identity() const;

  // Cycle notation, fixed points omitted: "(1,3)(2,4)"; the identity prints as "()".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

// (-1)^{inversions of the concatenated blocks}; throws UsageError when blocks overlap.
int block_sign(const std::vector<std::vector<int>>& blocks);

// One 2-shuffle of an index list: the reordered list (i_{σ1}, ..., i_{σ2m}) with pairs increasing
// and pair leaders increasing, and its sign (-1)^{inversions of σ}.
struct TwoShuffle {
  std::vector<int> order;
  int sign = 1;
};

// All 2-shuffles of I in lexicographic order; (|I|-1)!! of them. Throws UsageError for odd |I|.
std::vector<TwoShuffle> two_shuffles(const std::vector<int>& indices);

}  // namespace capelli
