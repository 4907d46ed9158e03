#include "derange/series.hpp"

#include <stdexcept>

namespace derange::series {

namespace {

// Calls visit(e) for every exponent vector 0 <= e <= caps.
template <class Visit>
void for_each_exponent(std::span<const int> caps, Visit&& visit) {
  Exponent e(caps.size(), 0);
  while (true) {
    visit(e);
    std::size_t i = 0;
    while (i < caps.size() && e[i] == caps[i]) e[i++] = 0;
    if (i == caps.size()) return;
    ++e[i];
  }
}

}  // namespace

MultiSeries::MultiSeries(std::vector<int> caps) : caps_(std::move(caps)) {
  for (int cap : caps_) {
    if (cap < 0) throw std::invalid_argument("negative degree cap");
  }
}

bool MultiSeries::within_caps(const Exponent& e) const {
  if (e.size() != caps_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > caps_[i]) return false;
  }
  return true;
}

BigInt MultiSeries::coefficient(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void MultiSeries::set(const Exponent& e, BigInt value) {
  if (!within_caps(e)) throw std::out_of_range("exponent outside series caps");
  if (value == 0) {
    coeffs_.erase(e);
  } else {
    coeffs_[e] = std::move(value);
  }
}

MultiSeries series_one(std::vector<int> caps) {
  MultiSeries one(std::move(caps));
  one.set(Exponent(one.variables(), 0), 1);
  return one;
}

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
  if (!std::equal(a.caps().begin(), a.caps().end(), b.caps().begin(), b.caps().end())) {
    throw std::invalid_argument("series caps mismatch");
  }
  const auto caps = a.caps();
  std::map<Exponent, BigInt> acc;
  Exponent sum(caps.size());
  for (const auto& [ea, ca] : a.coefficients()) {
    for (const auto& [eb, cb] : b.coefficients()) {
      bool inside = true;
      for (std::size_t i = 0; i < caps.size() && inside; ++i) {
        sum[i] = ea[i] + eb[i];
        inside = sum[i] <= caps[i];
      }
      if (inside) acc[sum] += ca * cb;
    }
  }
  MultiSeries out(std::vector<int>(caps.begin(), caps.end()));
  for (auto& [e, c] : acc) out.set(e, std::move(c));
  return out;
}

MultiSeries inv_one_plus_var(int i, std::vector<int> caps) {
  if (i < 1 || i > static_cast<int>(caps.size())) throw std::out_of_range("variable index out of range");
  MultiSeries out(std::move(caps));
  Exponent e(out.variables(), 0);
  for (int d = 0; d <= out.caps()[i - 1]; ++d) {
    e[i - 1] = d;
    out.set(e, d % 2 == 0 ? 1 : -1);
  }
  return out;
}

MultiSeries inv_one_minus_sum(std::vector<int> caps) {
  MultiSeries out(std::move(caps));
  for_each_exponent(out.caps(), [&](const Exponent& e) { out.set(e, multinomial(e)); });
  return out;
}

MultiSeries generating_function_Dj(const Composition& a, int j) {
  if (j < 0 || j > a.blocks()) throw std::out_of_range("block count j outside [0, k]");
  std::vector<int> caps(a.parts().begin(), a.parts().end());
  MultiSeries f = inv_one_minus_sum(caps);
  for (int i = 1; i <= j; ++i) f = series_mul(f, inv_one_plus_var(i, caps));
  return f;
}

BigInt coeff_Dj(const Composition& a, int j) {
  const Exponent target(a.parts().begin(), a.parts().end());
  return generating_function_Dj(a, j).coefficient(target);
}

}  // namespace derange::series
