#include "derange/correlation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "derange/counting.hpp"

namespace derange::correlation {

namespace {

bool valid(const BlockPairState& st) { return st.a1 >= 0 && st.a2 >= 0 && st.s >= 0 && st.s <= st.a(); }

bool sorts_to_derangement(std::vector<int> order, int a1) {
  std::sort(order.begin(), order.begin() + a1, std::greater<>());
  std::sort(order.begin() + a1, order.end(), std::greater<>());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == static_cast<int>(i) + 1) return false;
  }
  return true;
}

}  // namespace

BigInt F_brute(const BlockPairState& st) {
  if (!valid(st)) return 0;
  const int a = st.a();
  if (a > 20) throw std::invalid_argument("F_brute: a too large for exhaustive enumeration");
  std::uint64_t count = 0;
  for (std::uint32_t subset = 0; subset < (1u << a); ++subset) {
    if (std::popcount(subset) != a - st.s) continue;
    std::vector<int> order;
    for (int v = 1; v <= a; ++v) {
      if (subset & (1u << (v - 1))) order.push_back(v);
    }
    for (int v = a + 1; v <= a + st.s; ++v) order.push_back(v);
    do {
      count += sorts_to_derangement(order, st.a1);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return BigInt(count);
}

BigInt G_closed(const BlockPairState& st) {
  if (st.a1 < 0 || st.a2 < 0 || st.s < 0) return 0;
  BigInt acc = 0;
  for (int b1 = 0; b1 <= st.a1; ++b1) {
    for (int b2 = 0; b2 <= st.a2; ++b2) {
      const int c = st.a() - b1 - b2;
      BigInt term = binomial(c, st.s) * binomial(c, st.a1 - b1);
      if ((b1 + b2) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
  }
  return acc;
}

BigInt H(const BlockPairState& st) { return F_brute(st) + F_brute({st.a1, st.a2, st.s - 1}); }

bool FG_consistency(const BlockPairState& st) {
  return F_brute(st) == factorial(st.a1) * factorial(st.a2) * G_closed(st);
}

bool G_recurrence_check(const BlockPairState& st) {
  const auto [a1, a2, s] = st;
  if (s == 0) {
    if (a1 < 1 || a2 < 1) return false;
    const BigInt sign = (a1 + a2) % 2 == 0 ? 1 : -1;
    return G_closed(st) == G_closed({a1 - 1, a2, 0}) + G_closed({a1, a2 - 1, 0}) + sign;
  }
  if (a1 < 1 || s < 0) return false;
  return G_closed(st) == G_closed({a1 - 1, a2, s}) + G_closed({a1 - 1, a2, s - 1}) + G_closed({a1, a2 - 1, s}) +
                             G_closed({a1, a2 - 1, s - 1});
}

bool dominance_ge(const Composition& a, const Composition& b) {
  if (a.total() != b.total()) throw std::invalid_argument("dominance_ge: compositions of different totals");
  const auto pa = a.sorted_parts();
  const auto pb = b.sorted_parts();
  int sum_a = 0;
  int sum_b = 0;
  for (std::size_t i = 0; i < std::max(pa.size(), pb.size()); ++i) {
    sum_a += i < pa.size() ? pa[i] : 0;
    sum_b += i < pb.size() ? pb[i] : 0;
    if (sum_a < sum_b) return false;
  }
  return true;
}

bool verify_unimodality(int a_total, int s, const Composition& tail) {
  const bool tail_empty = tail.total() == 0;
  for (int a2 = 1; 2 * a2 <= a_total; ++a2) {
    const int a1 = a_total - a2;
    const bool exempt = a1 % 2 == 0 && a2 == 1;
    if (s <= a_total && !(s == 0 && exempt)) {
      if (F_brute({a1 + 1, a2 - 1, s}) < F_brute({a1, a2, s})) return false;
    }
    if (!tail_empty) {
      std::vector<int> grown{a1 + 1, a2 - 1};
      std::vector<int> base{a1, a2};
      for (int part : tail.parts()) {
        grown.push_back(part);
        base.push_back(part);
      }
      if (counting::count_sorted_derangement_preimage(Composition(grown)) <
          counting::count_sorted_derangement_preimage(Composition(base))) {
        return false;
      }
    }
  }
  return true;
}

CorrelationReport verify_correlation(int n) {
  if (n < 1) throw std::invalid_argument("verify_correlation: n must be positive");
  const auto comps = compositions_of(n);
  std::vector<BigInt> preimage;
  preimage.reserve(comps.size());
  for (const auto& c : comps) preimage.push_back(counting::count_sorted_derangement_preimage(c));

  CorrelationReport report;
  report.n = n;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const bool single_odd = comps[i].blocks() == 1 && n % 2 == 1;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const bool forward = dominance_ge(comps[i], comps[j]);
      const bool comparable = forward || dominance_ge(comps[j], comps[i]);
      PairResult r{comps[i], comps[j], preimage[i], preimage[j], forward, comparable, false, true};
      if (!r.dominates) {
        ++report.skipped;
      } else if (single_odd) {
        r.excluded = true;
        ++report.excluded;
      } else {
        r.ok = r.lhs >= r.rhs;
        ++report.checked;
        report.failures += !r.ok;
      }
      report.pairs.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace derange::correlation
