#include "derange/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace derange::counting {

namespace {

void check_j(const Composition& a, int j, int lowest) {
  if (j < lowest || j > a.blocks()) throw std::out_of_range("block index out of range");
}

bool block_has_fixed_point(const Permutation& p, const Composition::Block& b) {
  for (int i = b.first; i <= b.last; ++i) {
    if (p[i] == i) return true;
  }
  return false;
}

// Block-sorted fixed point test without sorting: after sorting block
// [first, last] decreasingly, position i holds value i exactly when i is one
// of the block's values and i - first of them exceed i. `mask` has bit v set
// for every value v in the block.
bool sorted_block_has_fixed_point(std::uint64_t mask, int first, int last) {
  for (int i = first; i <= last; ++i) {
    if (((mask >> i) & 1u) != 0 && std::popcount(mask >> (i + 1)) == i - first) return true;
  }
  return false;
}

std::uint64_t scan_preimages_with_head(const Composition& a, int head) {
  const int n = a.total();
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != head) rest.push_back(v);
  }
  std::vector<int> word(n);
  word[0] = head;
  std::uint64_t count = 0;
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    bool derangement = true;
    for (int j = 1; j <= a.blocks() && derangement; ++j) {
      const auto b = a.block(j);
      std::uint64_t mask = 0;
      for (int i = b.first; i <= b.last; ++i) mask |= std::uint64_t{1} << word[i - 1];
      derangement = !sorted_block_has_fixed_point(mask, b.first, b.last);
    }
    count += derangement;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

}  // namespace

void for_each_member(const Composition& a, const std::function<void(const Permutation&)>& visit) {
  const int n = a.total();
  const int k = a.blocks();
  std::vector<int> word(n);
  std::vector<bool> used(n + 1, false);

  // Fill block j from value `from` downwards, `placed` entries so far.
  std::function<void(int, int, int)> fill = [&](int j, int placed, int from) {
    if (j > k) {
      visit(Permutation(word));
      return;
    }
    const auto b = a.block(j);
    if (placed == b.size()) {
      fill(j + 1, 0, n);
      return;
    }
    const int needed = b.size() - placed;
    for (int v = from; v >= needed; --v) {
      if (used[v]) continue;
      used[v] = true;
      word[b.first - 1 + placed] = v;
      fill(j, placed + 1, v - 1);
      used[v] = false;
    }
  };
  fill(1, 0, n);
}

std::vector<Permutation> members(const Composition& a) {
  std::vector<Permutation> out;
  for_each_member(a, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

bool no_fixed_points_in_first_blocks(const Permutation& p, const Composition& a, int j) {
  for (int i = 1; i <= j; ++i) {
    if (block_has_fixed_point(p, a.block(i))) return false;
  }
  return true;
}

BigInt count_Dj(const Composition& a, int j) {
  check_j(a, j, 0);
  std::uint64_t count = 0;
  for_each_member(a, [&](const Permutation& p) { count += no_fixed_points_in_first_blocks(p, a, j); });
  return count;
}

std::vector<BigInt> count_Dj_all(const Composition& a) {
  const int k = a.blocks();
  std::vector<std::uint64_t> counts(k + 1, 0);
  for_each_member(a, [&](const Permutation& p) {
    // The member lies in D_j exactly for j below its first fixed-point block.
    int first_fixed = k + 1;
    for (int i = 1; i <= k; ++i) {
      if (block_has_fixed_point(p, a.block(i))) {
        first_fixed = i;
        break;
      }
    }
    for (int j = 0; j < first_fixed; ++j) ++counts[j];
  });
  return {counts.begin(), counts.end()};
}

BigInt count_Dstar(const Composition& a, int j) {
  check_j(a, j, 1);
  std::uint64_t count = 0;
  for_each_member(a, [&](const Permutation& p) {
    count += no_fixed_points_in_first_blocks(p, a, j - 1) && block_has_fixed_point(p, a.block(j));
  });
  return count;
}

BigInt count_Dhat(const Composition& a, int j) {
  check_j(a, j, 1);
  std::uint64_t count = 0;
  for_each_member(a, [&](const Permutation& p) {
    bool ok = block_has_fixed_point(p, a.block(j));
    for (int i = 1; i <= a.blocks() && ok; ++i) {
      if (i != j) ok = !block_has_fixed_point(p, a.block(i));
    }
    count += ok;
  });
  return count;
}

int excedance_boundary(const Permutation& p, const Composition& a, int j) {
  check_j(a, j, 1);
  const auto b = a.block(j);
  for (int i = b.first; i <= b.last; ++i) {
    if (p[i] < i) return i;
  }
  return b.last + 1;
}

Permutation insert_block_fixed_point(const Permutation& p, const Composition& a, int j) {
  check_j(a, j, 1);
  if (!is_member(p, a) || !no_fixed_points_in_first_blocks(p, a, j)) {
    throw std::invalid_argument("permutation is not in D_j(a)");
  }
  return phi_insert(p, excedance_boundary(p, a, j), excedance_boundary(p, a, j));
}

Permutation remove_block_fixed_point(const Permutation& p, const Composition& grown, int j) {
  check_j(grown, j, 1);
  const auto b = grown.block(j);
  for (int i = b.first; i <= b.last; ++i) {
    if (p[i] == i) return psi_remove(p, i);
  }
  throw std::invalid_argument("block has no fixed point");
}

BigInt count_sorted_derangement_preimage(const Composition& a) {
  const int n = a.total();
  if (n > 62) throw std::out_of_range("full scan of S_n is limited to n <= 62");
  if (n == 0) return 1;
  std::vector<std::future<std::uint64_t>> parts;
  const bool threaded = n >= 7;
  std::uint64_t total = 0;
  for (int head = 1; head <= n; ++head) {
    if (threaded) {
      parts.push_back(std::async(std::launch::async, scan_preimages_with_head, std::cref(a), head));
    } else {
      total += scan_preimages_with_head(a, head);
    }
  }
  for (auto& part : parts) total += part.get();
  return total;
}

FixDistribution fix_distribution(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    int fixed = 0;
    for (int i = 0; i < n; ++i) fixed += word[i] == i + 1;
    ++counts[fixed];
  } while (std::next_permutation(word.begin(), word.end()));
  return {n, {counts.begin(), counts.end()}};
}

}  // namespace derange::counting
