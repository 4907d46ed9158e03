#include "derange/permutation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace derange {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> image) : Permutation(std::vector<int>(image)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  return Permutation(std::move(image));
}

Permutation Permutation::from_word(std::string_view digits) {
  std::vector<int> image;
  image.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw std::invalid_argument("bad digit in permutation word");
    image.push_back(ch - '0');
  }
  return Permutation(std::move(image));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) throw std::out_of_range("position out of range");
  return image_[position - 1];
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  boundaries_.reserve(parts_.size() + 1);
  for (int part : parts_) {
    if (part < 0) throw std::invalid_argument("composition parts must be nonnegative");
    boundaries_.push_back(boundaries_.back() + part);
  }
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition Composition::ones(int n) { return Composition(std::vector<int>(n, 1)); }

int Composition::block_of(int position) const {
  if (position < 1 || position > total()) throw std::out_of_range("position out of range");
  auto it = std::lower_bound(boundaries_.begin() + 1, boundaries_.end(), position);
  return static_cast<int>(it - boundaries_.begin());
}

Composition Composition::with_part(int j, int value) const {
  std::vector<int> parts = parts_;
  parts.at(j - 1) = value;
  return Composition(std::move(parts));
}

std::vector<int> Composition::sorted_parts() const {
  std::vector<int> sorted;
  for (int part : parts_) {
    if (part > 0) sorted.push_back(part);
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative total");
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      parts.push_back(part);
      extend(remaining - part);
      parts.pop_back();
    }
  };
  extend(n);
  return out;
}

// ------------------------------------------------------- ColouredPermutation

ColouredPermutation::ColouredPermutation(Permutation perm, std::vector<bool> scope,
                                         const std::map<int, int>& colours, int lambda)
    : perm_(std::move(perm)), scope_(std::move(scope)), colour_(perm_.size(), 0), lambda_(lambda) {
  const int n = perm_.size();
  if (static_cast<int>(scope_.size()) != n) throw std::invalid_argument("scope size mismatch");
  if (lambda_ < 0) throw std::invalid_argument("negative colour count");
  for (const auto& [pos, c] : colours) {
    if (pos < 1 || pos > n || !scope_[pos - 1] || perm_[pos] != pos) {
      throw std::invalid_argument("colour assigned to a position that is not an in-scope fixed point");
    }
    if (c < 1 || c > lambda_) throw std::invalid_argument("colour outside [1, lambda]");
    colour_[pos - 1] = c;
  }
  for (int i = 1; i <= n; ++i) {
    if (scope_[i - 1] && perm_[i] == i && colour_[i - 1] == 0) {
      if (lambda_ == 0) throw std::invalid_argument("fixed point in scope with zero colours");
      colour_[i - 1] = 1;
    }
  }
}

ColouredPermutation ColouredPermutation::uncoloured(Permutation perm) {
  std::vector<bool> scope(perm.size(), false);
  return ColouredPermutation(std::move(perm), std::move(scope), {}, 1);
}

ColouredPermutation ColouredPermutation::with_tail_scope(Permutation perm, int k, int lambda,
                                                         const std::map<int, int>& colours) {
  std::vector<bool> scope(perm.size(), false);
  for (int i = std::max(k, 0); i < perm.size(); ++i) scope[i] = true;
  return ColouredPermutation(std::move(perm), std::move(scope), colours, lambda);
}

std::map<int, int> ColouredPermutation::colours() const {
  std::map<int, int> out;
  for (int i = 0; i < size(); ++i) {
    if (colour_[i] > 0) out.emplace(i + 1, colour_[i]);
  }
  return out;
}

std::vector<int> ColouredPermutation::essential_fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (colour_[i] > 1) out.push_back(i + 1);
  }
  return out;
}

std::string ColouredPermutation::to_string() const {
  std::string out = perm_.to_string();
  for (int pos : essential_fixed_points()) {
    out += ' ' + std::to_string(pos) + ':' + std::to_string(colour(pos));
  }
  return out;
}

// ----------------------------------------------------------------- statistics

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.push_back(i);
  }
  return out;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p[i] == i) out.push_back(i);
  }
  return out;
}

int fixed_point_count(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) count += p[i] == i;
  return count;
}

PositionKind classify_position(const Permutation& p, int i) {
  const int v = p.at(i);
  if (v > i) return PositionKind::excedance;
  if (v < i) return PositionKind::deficiency;
  return PositionKind::fixed;
}

bool is_member(const Permutation& p, const Composition& a) {
  if (p.size() != a.total()) throw std::invalid_argument("size mismatch between permutation and composition");
  for (int j = 1; j <= a.blocks(); ++j) {
    const auto b = a.block(j);
    for (int i = b.first; i < b.last; ++i) {
      if (p[i] < p[i + 1]) return false;
    }
  }
  return true;
}

// ------------------------------------------------------- insertion / deletion

Permutation phi_insert(const Permutation& p, int j, int k) {
  const int n = p.size();
  if (j < 1 || j > n + 1 || k < 1 || k > n + 1) throw std::out_of_range("phi_insert index out of range");
  std::vector<int> image;
  image.reserve(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (i == j) image.push_back(k);
    image.push_back(p[i] >= k ? p[i] + 1 : p[i]);
  }
  if (j == n + 1) image.push_back(k);
  return Permutation(std::move(image));
}

Permutation psi_remove(const Permutation& p, int j) {
  const int n = p.size();
  if (j < 1 || j > n) throw std::out_of_range("psi_remove index out of range");
  const int removed = p[j];
  std::vector<int> image;
  image.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    if (i == j) continue;
    image.push_back(p[i] > removed ? p[i] - 1 : p[i]);
  }
  return Permutation(std::move(image));
}

ColouredPermutation phi_fixed_set(const ColouredPermutation& p, const std::set<int>& F,
                                  const std::map<int, int>& new_colours) {
  for (const auto& [pos, c] : new_colours) {
    if (!F.contains(pos)) throw std::invalid_argument("colour given for a position not being inserted");
    if (c < 1 || c > p.lambda()) throw std::invalid_argument("colour outside [1, lambda]");
  }
  // Inserting a fixed point never creates or destroys another fixed point, so
  // colours can be carried entry by entry.
  Permutation perm = p.perm();
  std::vector<bool> scope = p.scope();
  std::vector<int> colour(p.size());
  for (int i = 1; i <= p.size(); ++i) colour[i - 1] = p.colour(i);
  for (int f : F) {
    perm = phi_insert(perm, f, f);
    scope.insert(scope.begin() + (f - 1), true);
    auto it = new_colours.find(f);
    colour.insert(colour.begin() + (f - 1), it == new_colours.end() ? 1 : it->second);
  }
  std::map<int, int> colours;
  for (int i = 0; i < perm.size(); ++i) {
    if (colour[i] > 0) colours.emplace(i + 1, colour[i]);
  }
  return ColouredPermutation(std::move(perm), std::move(scope), colours, p.lambda());
}

Permutation phi_fixed_set(const Permutation& p, const std::set<int>& F) {
  Permutation out = p;
  for (int f : F) out = phi_insert(out, f, f);
  return out;
}

ColouredPermutation psi_fixed_set(const ColouredPermutation& p, const std::set<int>& F) {
  Permutation perm = p.perm();
  std::vector<bool> scope = p.scope();
  std::vector<int> colour(p.size());
  for (int i = 1; i <= p.size(); ++i) colour[i - 1] = p.colour(i);
  for (auto it = F.rbegin(); it != F.rend(); ++it) {
    const int f = *it;
    if (f < 1 || f > perm.size() || perm[f] != f) {
      throw std::invalid_argument("psi_fixed_set: position is not a fixed point");
    }
    perm = psi_remove(perm, f);
    scope.erase(scope.begin() + (f - 1));
    colour.erase(colour.begin() + (f - 1));
  }
  std::map<int, int> colours;
  for (int i = 0; i < perm.size(); ++i) {
    if (colour[i] > 0) colours.emplace(i + 1, colour[i]);
  }
  return ColouredPermutation(std::move(perm), std::move(scope), colours, p.lambda());
}

Permutation psi_fixed_set(const Permutation& p, const std::set<int>& F) {
  Permutation out = p;
  for (auto it = F.rbegin(); it != F.rend(); ++it) {
    if (*it < 1 || *it > out.size() || out[*it] != *it) {
      throw std::invalid_argument("psi_fixed_set: position is not a fixed point");
    }
    out = psi_remove(out, *it);
  }
  return out;
}

Permutation sort_blocks(const Permutation& p, const Composition& a) {
  if (p.size() != a.total()) throw std::invalid_argument("size mismatch between permutation and composition");
  std::vector<int> image(p.image().begin(), p.image().end());
  for (int j = 1; j <= a.blocks(); ++j) {
    const auto b = a.block(j);
    std::sort(image.begin() + (b.first - 1), image.begin() + b.last, std::greater<>());
  }
  return Permutation(std::move(image));
}

}  // namespace derange
