#include "osculant/multiindex.hpp"

#include <stdexcept>

namespace osculant {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
}

MultiIndex MultiIndex::zero(int k) { return MultiIndex(std::vector<int>(k, 0)); }

int MultiIndex::order() const {
  int s = 0;
  for (int e : entries_) s += e;
  return s;
}

MultiIndex MultiIndex::bumped(int i) const {
  std::vector<int> e = entries_;
  ++e[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::lowered(int i) const {
  std::vector<int> e = entries_;
  if (e[i] == 0) throw std::invalid_argument("cannot lower a zero entry");
  --e[i];
  return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& m) const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] > m.entries_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& m) const {
  std::vector<int> e = entries_;
  for (int i = 0; i < size(); ++i) e[i] += m.entries_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::minus(const MultiIndex& m) const {
  std::vector<int> e = entries_;
  for (int i = 0; i < size(); ++i) {
    e[i] -= m.entries_[i];
    if (e[i] < 0) throw std::invalid_argument("multi-index subtraction underflow");
  }
  return MultiIndex(std::move(e));
}

bool MultiIndex::listing_less(const MultiIndex& a, const MultiIndex& b) {
  int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  return a.entries_ > b.entries_;  // lexicographically descending within a grade
}

namespace {

void enumerate_exact(int k, int t, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (k == 1) {
    prefix.push_back(t);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = t; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_exact(k - 1, t - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> mi_enumerate(int k, int t, MiRange mode) {
  if (k < 1) throw std::invalid_argument("mi_enumerate requires k >= 1");
  if (t < 0) throw std::invalid_argument("mi_enumerate requires t >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  if (mode == MiRange::exact_order) {
    out.reserve(static_cast<std::size_t>(binomial(k - 1 + t, t)));
    enumerate_exact(k, t, prefix, out);
  } else {
    out.reserve(static_cast<std::size_t>(binomial(k + t, t)));
    for (int s = 0; s <= t; ++s) enumerate_exact(k, s, prefix, out);
  }
  return out;
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

int mi_position(const std::vector<MultiIndex>& listing, const MultiIndex& m) {
  for (std::size_t i = 0; i < listing.size(); ++i) {
    if (listing[i] == m) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace osculant
