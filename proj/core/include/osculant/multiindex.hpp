#pragma once

#include <vector>

namespace osculant {

// Exponent tuple (i_1,...,i_k) of a partial derivative or monomial.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);
  static MultiIndex zero(int k);

  int size() const { return static_cast<int>(entries_.size()); }
  int order() const;
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  MultiIndex bumped(int i) const;     // increment slot i
  MultiIndex lowered(int i) const;    // decrement slot i (requires entry > 0)
  bool divides(const MultiIndex& m) const;  // componentwise <=
  MultiIndex plus(const MultiIndex& m) const;
  MultiIndex minus(const MultiIndex& m) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  // Canonical listing order: grade ascending, lexicographically descending
  // within a grade, so (2,0) precedes (1,1) precedes (0,2).
  static bool listing_less(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> entries_;
};

struct MiListingLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return MultiIndex::listing_less(a, b);
  }
};

enum class MiRange { exact_order, up_to_order };

// Deterministic enumeration in the listing order above. Sizes are
// binom(k-1+t, t) for exact_order and binom(k+t, t) for up_to_order.
std::vector<MultiIndex> mi_enumerate(int k, int t, MiRange mode);

long long binomial(int n, int r);

// Position of m within mi_enumerate(m.size(), t, mode); -1 when absent.
int mi_position(const std::vector<MultiIndex>& listing, const MultiIndex& m);

}  // namespace osculant
