#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<Word> all_words(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

bool decreasing_in_blocks(const Word& w, const std::vector<int>& parts) {
  int start = 0;
  for (int part : parts) {
    for (int i = start; i + 1 < start + part; ++i) {
      if (w[i] < w[i + 1]) return false;
    }
    start += part;
  }
  return true;
}

int fixed_in_range(const Word& w, int lo, int hi) {
  int count = 0;
  for (int i = lo; i <= hi; ++i) count += w[i - 1] == i;
  return count;
}

namespace {

int total(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

// [first, last] of block j (1-based).
std::pair<int, int> block(const std::vector<int>& parts, int j) {
  const int before = std::accumulate(parts.begin(), parts.begin() + (j - 1), 0);
  return {before + 1, before + parts[j - 1]};
}

}  // namespace

std::uint64_t Dj(const std::vector<int>& parts, int j) {
  const int upto = block(parts, std::max(j, 1)).second;
  std::uint64_t count = 0;
  for (const auto& w : all_words(total(parts))) {
    if (!decreasing_in_blocks(w, parts)) continue;
    count += j == 0 || fixed_in_range(w, 1, upto) == 0;
  }
  return count;
}

std::uint64_t Dstar(const std::vector<int>& parts, int j) {
  const auto [first, last] = block(parts, j);
  std::uint64_t count = 0;
  for (const auto& w : all_words(total(parts))) {
    if (!decreasing_in_blocks(w, parts)) continue;
    count += fixed_in_range(w, 1, first - 1) == 0 && fixed_in_range(w, first, last) > 0;
  }
  return count;
}

std::uint64_t Dhat(const std::vector<int>& parts, int j) {
  const auto [first, last] = block(parts, j);
  const int n = total(parts);
  std::uint64_t count = 0;
  for (const auto& w : all_words(n)) {
    if (!decreasing_in_blocks(w, parts)) continue;
    const int inside = fixed_in_range(w, first, last);
    count += inside > 0 && fixed_in_range(w, 1, n) == inside;
  }
  return count;
}

std::uint64_t sorted_preimage(const std::vector<int>& parts) {
  const int n = total(parts);
  std::uint64_t count = 0;
  for (auto w : all_words(n)) {
    int start = 0;
    for (int part : parts) {
      std::sort(w.begin() + start, w.begin() + start + part, std::greater<>());
      start += part;
    }
    count += fixed_in_range(w, 1, n) == 0;
  }
  return count;
}

std::vector<std::uint64_t> fix_polynomial(int n) {
  std::vector<std::uint64_t> coeffs(n + 1, 0);
  for (const auto& w : all_words(n)) ++coeffs[fixed_in_range(w, 1, n)];
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

derange::BigInt Dkn_count(int n, int k, int lambda) {
  derange::BigInt count = 0;
  for (const auto& w : all_words(n)) {
    bool ok = true;
    for (int i = 0; i + 1 < k; ++i) ok = ok && w[i] > w[i + 1];
    if (!ok) continue;
    count += derange::power(lambda, fixed_in_range(w, k + 1, n));
  }
  return count;
}

std::uint64_t mu_coloured(const std::vector<int>& parts, const std::vector<int>& mu) {
  const int k = static_cast<int>(parts.size());
  std::uint64_t acc = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> reduced = parts;
    std::uint64_t weight = 1;
    bool possible = true;
    for (int i = 0; i < k; ++i) {
      if (mask & (1 << i)) {
        possible = possible && reduced[i] > 0;
        --reduced[i];
        weight *= static_cast<std::uint64_t>(mu[i]);
      }
    }
    if (possible) acc += weight * sorted_preimage(reduced);
  }
  return acc;
}

std::uint64_t F(int a1, int a2, int s) {
  const int a = a1 + a2;
  std::uint64_t count = 0;
  // Every a-element word over [a + s] that contains all of [a + 1, a + s].
  for (const auto& w : all_words(a + s)) {
    Word order(w.begin(), w.begin() + a);
    int large = 0;
    for (int v : order) large += v > a;
    if (large != s) continue;
    // all_words lists every arrangement of the unused tail; count each order
    // once by requiring the unused tail to be increasing.
    if (!std::is_sorted(w.begin() + a, w.end())) continue;
    std::sort(order.begin(), order.begin() + a1, std::greater<>());
    std::sort(order.begin() + a1, order.end(), std::greater<>());
    count += fixed_in_range(order, 1, a) == 0;
  }
  return count;
}

bool dominates(std::vector<int> a, std::vector<int> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
  std::vector<int> pa(len), pb(len);
  std::partial_sum(a.begin(), a.end(), pa.begin());
  std::partial_sum(b.begin(), b.end(), pb.begin());
  for (std::size_t i = 0; i < len; ++i) {
    if (pa[i] < pb[i]) return false;
  }
  return true;
}

std::vector<int> random_composition(std::mt19937& rng, int n) {
  std::vector<int> parts;
  int current = 1;
  std::bernoulli_distribution cut(0.5);
  for (int i = 1; i < n; ++i) {
    if (cut(rng)) {
      parts.push_back(current);
      current = 1;
    } else {
      ++current;
    }
  }
  parts.push_back(current);
  return parts;
}

derange::ColouredPermutation bold_word(const std::string& text, int k, int lambda) {
  std::vector<int> image;
  std::map<int, int> colours;
  bool bold = false;
  for (char ch : text) {
    if (ch == '[') {
      bold = true;
    } else if (ch == ']') {
      bold = false;
    } else {
      image.push_back(ch - '0');
      if (bold) colours[static_cast<int>(image.size())] = 2;
    }
  }
  return derange::ColouredPermutation::with_tail_scope(derange::Permutation(image), k, lambda, colours);
}

}  // namespace oracle
