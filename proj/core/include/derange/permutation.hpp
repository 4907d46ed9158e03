#pragma once

// Permutations, compositions and fixed point coloured permutations.
//
// Positions and values are 1-based everywhere in the public interface: a
// permutation of size n is the one-line word p[1] .. p[n] over {1, .., n}.

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace derange {

class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `image` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> image);
  Permutation(std::initializer_list<int> image);

  static Permutation identity(int n);

  /// Parses a digit word such as "326451". Only meaningful for n <= 9.
  static Permutation from_word(std::string_view digits);

  int size() const { return static_cast<int>(image_.size()); }
  bool empty() const { return image_.empty(); }

  /// 1-based access; no bounds check.
  int operator[](int position) const { return image_[position - 1]; }
  int at(int position) const;

  std::span<const int> image() const { return image_; }

  /// Digit word for n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Ordered block lengths a_1..a_k (zero parts allowed). Block j occupies the
/// positions [c_{j-1} + 1, c_j] where c_j is the j-th prefix sum.
class Composition {
 public:
  struct Block {
    int first;  // 1-based, inclusive
    int last;   // inclusive; last < first for an empty block
    int size() const { return last - first + 1; }
    bool contains(int position) const { return first <= position && position <= last; }
  };

  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  /// The all-ones composition of n, for which S_a is all of S_n.
  static Composition ones(int n);

  int blocks() const { return static_cast<int>(parts_.size()); }
  int total() const { return boundaries_.back(); }
  int part(int j) const { return parts_.at(j - 1); }
  std::span<const int> parts() const { return parts_; }

  /// c_j for 0 <= j <= k.
  int boundary(int j) const { return boundaries_.at(j); }
  Block block(int j) const { return {boundaries_.at(j - 1) + 1, boundaries_.at(j)}; }

  /// Index of the block containing a position in [1, n].
  int block_of(int position) const;

  Composition with_part(int j, int value) const;

  /// Parts sorted in decreasing order with zeros dropped.
  std::vector<int> sorted_parts() const;

  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> boundaries_{0};
};

/// Positive-part compositions of n in lexicographic order (2^(n-1) of them,
/// one for n = 0).
std::vector<Composition> compositions_of(int n);

/// A permutation whose fixed points inside a designated scope each carry a
/// colour in [1, lambda]. Colour 1 is the default colour; a fixed point with
/// colour > 1 is essential. With lambda = 0, fixed points in scope are
/// forbidden.
class ColouredPermutation {
 public:
  ColouredPermutation() = default;

  /// `colours` maps positions to colours. In-scope fixed points missing from
  /// the map take the default colour. Throws std::invalid_argument when a key
  /// is not an in-scope fixed point or a colour lies outside [1, lambda].
  ColouredPermutation(Permutation perm, std::vector<bool> scope, const std::map<int, int>& colours,
                      int lambda);

  /// Empty scope, lambda = 1: an ordinary permutation.
  static ColouredPermutation uncoloured(Permutation perm);

  /// Scope is the tail (k, n], the convention for the difference-table sets.
  static ColouredPermutation with_tail_scope(Permutation perm, int k, int lambda,
                                             const std::map<int, int>& colours = {});

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  int lambda() const { return lambda_; }
  bool in_scope(int position) const { return scope_.at(position - 1); }
  const std::vector<bool>& scope() const { return scope_; }

  /// Colour of an in-scope fixed point, 0 for every other position.
  int colour(int position) const { return colour_.at(position - 1); }

  /// Every coloured position, default colours included.
  std::map<int, int> colours() const;

  /// Positions whose colour is > 1, increasing.
  std::vector<int> essential_fixed_points() const;

  /// Word followed by essential colours as "pos:colour", e.g. "2134 3:2".
  std::string to_string() const;

  friend bool operator==(const ColouredPermutation&, const ColouredPermutation&) = default;
  friend auto operator<=>(const ColouredPermutation& a, const ColouredPermutation& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    return a.colour_ <=> b.colour_;
  }

 private:
  Permutation perm_;
  std::vector<bool> scope_;
  std::vector<int> colour_;
  int lambda_ = 1;
};

enum class PositionKind { excedance, deficiency, fixed };

std::vector<int> descent_set(const Permutation& p);
std::vector<int> fixed_points(const Permutation& p);
int fixed_point_count(const Permutation& p);

/// Throws std::out_of_range unless 1 <= i <= n.
PositionKind classify_position(const Permutation& p, int i);

/// True iff p strictly decreases inside every block of a.
bool is_member(const Permutation& p, const Composition& a);

/// Inserts the value k at position j, bumping values >= k. Requires
/// 1 <= j, k <= n + 1.
Permutation phi_insert(const Permutation& p, int j, int k);

/// Removes position j and its value, closing the gap in both. Requires
/// 1 <= j <= n.
Permutation psi_remove(const Permutation& p, int j);

/// Inserts fixed points at the positions of F in increasing order. Existing
/// colours travel with their fixed points; inserted points join the scope and
/// take their colour from `new_colours` (default colour 1).
ColouredPermutation phi_fixed_set(const ColouredPermutation& p, const std::set<int>& F,
                                  const std::map<int, int>& new_colours = {});
Permutation phi_fixed_set(const Permutation& p, const std::set<int>& F);

/// Removes the fixed points at the positions of F in decreasing order.
/// Throws std::invalid_argument if some f in F is not a fixed point.
ColouredPermutation psi_fixed_set(const ColouredPermutation& p, const std::set<int>& F);
Permutation psi_fixed_set(const Permutation& p, const std::set<int>& F);

/// Phi_a: sorts every block of a decreasingly.
Permutation sort_blocks(const Permutation& p, const Composition& a);

}  // namespace derange
