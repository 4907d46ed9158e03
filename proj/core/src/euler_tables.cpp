#include "derange/euler_tables.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace derange::euler {

// ------------------------------------------------------------------- tables

DifferenceTable DifferenceTable::build(int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative table size");
  DifferenceTable t;
  t.n_max_ = n_max;
  const LambdaPolynomial lambda_minus_one = LambdaPolynomial::shifted_power(-1, 1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<LambdaPolynomial> row(n + 1);
    row[n] = LambdaPolynomial(factorial(n));
    for (int k = n; k >= 1; --k) row[k - 1] = row[k] + lambda_minus_one * t.e_[n - 1][k - 1];
    t.e_.push_back(std::move(row));
  }
  for (int n = 0; n <= n_max; ++n) {
    std::vector<LambdaPolynomial> row;
    for (int k = 0; k <= n; ++k) {
      try {
        row.push_back(t.e_[n][k].divide_exact(factorial(k)));
      } catch (const std::domain_error&) {
        throw std::logic_error("e^k_n not divisible by k! at n=" + std::to_string(n) + ", k=" + std::to_string(k));
      }
    }
    t.d_.push_back(std::move(row));
  }
  return t;
}

const LambdaPolynomial& DifferenceTable::e(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > n) throw std::out_of_range("table index out of range");
  return e_[n][k];
}

const LambdaPolynomial& DifferenceTable::d(int n, int k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > n) throw std::out_of_range("table index out of range");
  return d_[n][k];
}

LambdaPolynomial DifferenceTable::d_extended(int n, int k) const {
  if (n > n_max_) throw std::out_of_range("table index out of range");
  if (k == -1) return n >= -1 ? LambdaPolynomial::shifted_power(-1, n + 1) : LambdaPolynomial();
  if (n < 0 || k < -1 || k > n) return {};
  return d_[n][k];
}

DifferenceTable build_tables(int n_max) { return DifferenceTable::build(n_max); }

// -------------------------------------------------------------- membership

bool in_Dkn(const ColouredPermutation& p, int n, int k, int lambda) {
  if (p.size() != n || p.lambda() != lambda || k < 0 || k > n) return false;
  for (int i = 1; i < k; ++i) {
    if (p.perm()[i] < p.perm()[i + 1]) return false;
  }
  for (int i = 1; i <= n; ++i) {
    if (p.in_scope(i) != (i > k)) return false;
  }
  return true;
}

std::vector<ColouredPermutation> enumerate_Dkn(int n, int k, int lambda) {
  if (n < 0 || k < 0 || k > n || lambda < 0) throw std::invalid_argument("enumerate_Dkn needs 0 <= k <= n, lambda >= 0");
  std::vector<ColouredPermutation> out;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    bool decreasing = true;
    for (int i = 1; i < k && decreasing; ++i) decreasing = word[i - 1] > word[i];
    if (!decreasing) continue;
    std::vector<int> tail_fixed;
    for (int i = k + 1; i <= n; ++i) {
      if (word[i - 1] == i) tail_fixed.push_back(i);
    }
    if (lambda == 0 && !tail_fixed.empty()) continue;
    const Permutation perm(word);
    // Odometer over colourings of the tail fixed points.
    std::vector<int> colour(tail_fixed.size(), 1);
    while (true) {
      std::map<int, int> colours;
      for (std::size_t t = 0; t < tail_fixed.size(); ++t) colours.emplace(tail_fixed[t], colour[t]);
      out.push_back(ColouredPermutation::with_tail_scope(perm, k, lambda, colours));
      std::size_t t = 0;
      while (t < colour.size() && colour[t] == lambda) colour[t++] = 1;
      if (t == colour.size()) break;
      ++colour[t];
    }
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- bijections

namespace {

// A word whose entries carry their essential colour (0 for none) through
// insertions and deletions. Default colours are not tracked: they are
// re-derived from the fixed points of the finished permutation.
struct TaggedWord {
  std::vector<int> value;
  std::vector<int> tag;

  int size() const { return static_cast<int>(value.size()); }
  int at(int position) const { return value.at(position - 1); }
  int tag_at(int position) const { return tag.at(position - 1); }

  void insert(int position, int v, int colour = 0) {
    if (position < 1 || position > size() + 1 || v < 1 || v > size() + 1) {
      throw std::logic_error("tagged insertion out of range");
    }
    for (int& x : value) {
      if (x >= v) ++x;
    }
    value.insert(value.begin() + (position - 1), v);
    tag.insert(tag.begin() + (position - 1), colour);
  }

  void insert_fixed(int position, int colour = 0) { insert(position, position, colour); }

  // Removes a position; returns its tag.
  int remove(int position) {
    if (position < 1 || position > size()) throw std::logic_error("tagged removal out of range");
    const int removed = value[position - 1];
    const int colour = tag[position - 1];
    value.erase(value.begin() + (position - 1));
    tag.erase(tag.begin() + (position - 1));
    for (int& x : value) {
      if (x > removed) --x;
    }
    return colour;
  }

  // Moves an entry between positions without touching any value.
  void move(int from, int to) {
    const int v = value.at(from - 1);
    const int c = tag.at(from - 1);
    value.erase(value.begin() + (from - 1));
    tag.erase(tag.begin() + (from - 1));
    value.insert(value.begin() + (to - 1), v);
    tag.insert(tag.begin() + (to - 1), c);
  }
};

TaggedWord tagged(const ColouredPermutation& p) {
  TaggedWord w;
  for (int i = 1; i <= p.size(); ++i) {
    w.value.push_back(p.perm()[i]);
    w.tag.push_back(p.colour(i) > 1 ? p.colour(i) : 0);
  }
  return w;
}

// Turns a tagged word into a member of D^k_n(lambda). A tag stranded on a
// position that is no longer an in-scope fixed point means a map broke its
// contract.
ColouredPermutation finish(const TaggedWord& w, int k, int lambda) {
  std::map<int, int> colours;
  for (int i = 1; i <= w.size(); ++i) {
    if (w.tag_at(i) == 0) continue;
    if (i <= k || w.at(i) != i) throw std::logic_error("essential colour separated from its fixed point");
    colours.emplace(i, w.tag_at(i));
  }
  for (int i = 1; i < k; ++i) {
    if (w.at(i) < w.at(i + 1)) throw std::logic_error("initial segment not decreasing");
  }
  return ColouredPermutation::with_tail_scope(Permutation(w.value), k, lambda, colours);
}

void require_member(const ColouredPermutation& p, int n, int k, const char* what) {
  if (p.lambda() < 1) throw std::invalid_argument(std::string(what) + ": bijections need lambda >= 1");
  if (!in_Dkn(p, n, k, p.lambda())) {
    throw std::invalid_argument(std::string(what) + ": argument is not in D^" + std::to_string(k) + "_" +
                                std::to_string(n));
  }
}

void require_colour(int c, int lambda, const char* what) {
  if (c < 2 || c > lambda) throw std::invalid_argument(std::string(what) + ": colour must lie in [2, lambda]");
}

// Length of the run of essential fixed points starting at k + 1.
int essential_run(const ColouredPermutation& q, int k) {
  int length = 0;
  while (k + length + 1 <= q.size() && q.colour(k + length + 1) > 1) ++length;
  return length;
}

// True when the run at k + 1 is empty or followed by an entry on or above
// the diagonal: exactly the image of the index branch of eta.
bool index_branch_image(const ColouredPermutation& q, int k) {
  const int run = essential_run(q, k);
  const int next = k + run + 1;
  if (run == 0) return next <= q.size();
  return next <= q.size() && q.perm()[next] >= next;
}

// Index branch shared by eta and zeta1: phi_F . phi_{k+1, j-|F|} . psi_F.
ColouredPermutation insert_after_prefix(int j, const ColouredPermutation& p, int k) {
  const int n = p.size() + 1;
  if (j < 1 || j > n) throw std::invalid_argument("index outside [1, n]");
  TaggedWord w = tagged(p);
  std::vector<std::pair<int, int>> removed;  // (position, colour), increasing
  for (int f : p.essential_fixed_points()) {
    if (f < j) removed.emplace_back(f, p.colour(f));
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) w.remove(it->first);
  w.insert(k + 1, j - static_cast<int>(removed.size()));
  for (const auto& [f, c] : removed) w.insert_fixed(f, c);
  return finish(w, k, p.lambda());
}

IndexArg remove_after_prefix(const ColouredPermutation& q, int k) {
  const int run = essential_run(q, k);
  const int j = q.perm()[k + run + 1];
  TaggedWord w = tagged(q);
  std::vector<std::pair<int, int>> removed;
  for (int f : q.essential_fixed_points()) {
    if (f < j) removed.emplace_back(f, q.colour(f));
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) w.remove(it->first);
  w.remove(k + 1);
  for (const auto& [f, c] : removed) w.insert_fixed(f, c);
  return {j, finish(w, k, q.lambda())};
}

}  // namespace

ColouredPermutation theta(const BranchArg& arg, int k) {
  if (const auto* index = std::get_if<IndexArg>(&arg)) {
    const auto& p = index->perm;
    const int n = p.size();
    if (k < 1 || k > n) throw std::invalid_argument("theta: k outside [1, n]");
    require_member(p, n, k, "theta");
    const int j = index->index;
    if (j < 1 || j > k) throw std::invalid_argument("theta: index outside [1, k]");
    TaggedWord w = tagged(p);
    const int v = w.at(j);
    w.remove(j);
    w.insert(k, v);
    return finish(w, k - 1, p.lambda());
  }
  const auto& colour = std::get<ColourArg>(arg);
  const auto& p = colour.perm;
  const int n = p.size() + 1;
  if (k < 1 || k > n) throw std::invalid_argument("theta: k outside [1, n]");
  require_member(p, n - 1, k - 1, "theta");
  require_colour(colour.colour, p.lambda(), "theta");
  TaggedWord w = tagged(p);
  w.insert_fixed(k, colour.colour);
  return finish(w, k - 1, p.lambda());
}

BranchArg theta_inverse(const ColouredPermutation& q, int k) {
  const int n = q.size();
  if (k < 1 || k > n) throw std::invalid_argument("theta_inverse: k outside [1, n]");
  require_member(q, n, k - 1, "theta_inverse");
  if (q.colour(k) > 1) {
    TaggedWord w = tagged(q);
    const int c = w.remove(k);
    return ColourArg{c, finish(w, k - 1, q.lambda())};
  }
  TaggedWord w = tagged(q);
  const int v = w.at(k);
  int j = 1;
  for (int i = 1; i < k; ++i) j += w.at(i) > v;
  w.move(k, j);
  return IndexArg{j, finish(w, k, q.lambda())};
}

ColouredPermutation eta(const BranchArg& arg, int k, int n) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("eta: k outside [0, n - 1]");
  if (const auto* index = std::get_if<IndexArg>(&arg)) {
    require_member(index->perm, n - 1, k, "eta");
    return insert_after_prefix(index->index, index->perm, k);
  }
  const auto& colour = std::get<ColourArg>(arg);
  const auto& p = colour.perm;
  if (k < 1) throw std::invalid_argument("eta: the colour branch needs k >= 1");
  require_member(p, n - 2, k - 1, "eta");
  require_colour(colour.colour, p.lambda(), "eta");

  TaggedWord w = tagged(p);
  const auto essential = p.essential_fixed_points();
  for (auto it = essential.rbegin(); it != essential.rend(); ++it) w.remove(*it);
  if (w.size() >= k) {
    // m is the rank of the k-th entry among the first k.
    const int pivot = w.at(k);
    int m = 1;
    for (int i = 1; i < k; ++i) m += w.at(i) < pivot;
    w.move(k, k - m + 1);
    w.insert(k + 1, m);
  } else {
    // Nothing follows the prefix: the smallest value closes it.
    w.insert(k, 1);
  }
  w.insert_fixed(k + 1, colour.colour);
  for (int f : essential) w.insert_fixed(f + 2, p.colour(f));
  return finish(w, k, p.lambda());
}

BranchArg eta_inverse(const ColouredPermutation& q, int k) {
  const int n = q.size();
  if (k < 0 || k > n - 1) throw std::invalid_argument("eta_inverse: k outside [0, n - 1]");
  require_member(q, n, k, "eta_inverse");
  if (index_branch_image(q, k)) return remove_after_prefix(q, k);
  if (k < 1) throw std::invalid_argument("eta_inverse: not in the image of eta for k = 0");

  const int c = q.colour(k + 1);
  TaggedWord w = tagged(q);
  std::vector<std::pair<int, int>> moved;  // essential fixed points other than k + 1
  for (int g : q.essential_fixed_points()) {
    if (g != k + 1) moved.emplace_back(g, q.colour(g));
  }
  for (auto it = moved.rbegin(); it != moved.rend(); ++it) w.remove(it->first);
  w.remove(k + 1);
  if (w.size() == k) {
    w.remove(k);
  } else {
    const int m = w.at(k + 1);
    if (m > k) throw std::logic_error("eta_inverse: entry after the essential run is not below the diagonal");
    w.remove(k + 1);
    w.move(k - m + 1, k);
  }
  for (const auto& [g, colour] : moved) w.insert_fixed(g - 2, colour);
  return ColourArg{c, finish(w, k - 1, q.lambda())};
}

ColouredPermutation zeta1(const Zeta1Arg& arg, int k) {
  const auto& p = arg.perm;
  const int n = p.size() + 1;
  if (k < 0 || k > n - 1) throw std::invalid_argument("zeta1: k outside [0, n - 1]");
  require_member(p, n - 1, k, "zeta1");
  if (arg.j == k + 1) {
    if (arg.colour < 1 || arg.colour > p.lambda()) throw std::invalid_argument("zeta1: colour outside [1, lambda]");
    TaggedWord w = tagged(p);
    w.insert_fixed(k + 1, arg.colour > 1 ? arg.colour : 0);
    return finish(w, k, p.lambda());
  }
  if (arg.colour != 1) throw std::invalid_argument("zeta1: only j = k + 1 takes a non-default colour");
  return insert_after_prefix(arg.j, p, k);
}

std::vector<Zeta1Arg> zeta1_preimages(const ColouredPermutation& q, int k) {
  const int n = q.size();
  if (k < 0 || k > n - 1) throw std::invalid_argument("zeta1_preimages: k outside [0, n - 1]");
  require_member(q, n, k, "zeta1_preimages");
  std::vector<Zeta1Arg> out;
  if (index_branch_image(q, k)) {
    auto [j, p] = remove_after_prefix(q, k);
    out.push_back({j, 1, std::move(p)});
  }
  if (q.colour(k + 1) > 1) {
    TaggedWord w = tagged(q);
    const int c = w.remove(k + 1);
    out.push_back({k + 1, c, finish(w, k, q.lambda())});
  }
  return out;
}

ColouredPermutation zeta2(const Zeta2Arg& arg, int k) {
  const auto& p = arg.perm;
  const int n = p.size() + 2;
  if (k < 0 || k > n - 2) throw std::invalid_argument("zeta2: k outside [0, n - 2]");
  require_member(p, n - 2, k, "zeta2");
  require_colour(arg.colour, p.lambda(), "zeta2");
  if (arg.j < k + 2 || arg.j > n) throw std::invalid_argument("zeta2: j outside [k + 2, n]");
  TaggedWord w = tagged(insert_after_prefix(arg.j - 1, p, k));
  w.insert_fixed(k + 1, arg.colour);
  return finish(w, k, p.lambda());
}

std::optional<Zeta2Arg> zeta2_inverse(const ColouredPermutation& q, int k) {
  const int n = q.size();
  if (k < 0 || k > n - 1) throw std::invalid_argument("zeta2_inverse: k outside [0, n - 1]");
  require_member(q, n, k, "zeta2_inverse");
  if (essential_run(q, k) == 0 || !index_branch_image(q, k)) return std::nullopt;
  TaggedWord w = tagged(q);
  const int c = w.remove(k + 1);
  const auto [j, p] = remove_after_prefix(finish(w, k, q.lambda()), k);
  return Zeta2Arg{c, j + 1, p};
}

}  // namespace derange::euler
