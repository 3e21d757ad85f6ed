#pragma once

#include <vector>

#include "aplab/common.hpp"
#include "aplab/rational.hpp"

namespace aplab {

// Subset of Z/NZ as a packed bitset with cached cardinality.
// Density is exact: cardinality/N.
class ZnSet {
 public:
  explicit ZnSet(u64 modulus);
  ZnSet(u64 modulus, const std::vector<u32>& elements);

  static ZnSet full(u64 modulus);
  static ZnSet singleton(u64 modulus, u32 x);

  u64 modulus() const { return n_; }
  u64 cardinality() const { return card_; }
  bool empty() const { return card_ == 0; }
  Rational density() const { return Rational(static_cast<i64>(card_), static_cast<i64>(n_)); }

  bool contains(u32 x) const {
    return (words_[x >> 6] >> (x & 63)) & 1ULL;
  }
  void insert(u32 x);
  void erase(u32 x);

  std::vector<u32> elements() const;
  const std::vector<u64>& words() const { return words_; }

  // {a + x mod N : a in this}
  ZnSet translate(u32 x) const;
  // {-a mod N : a in this}
  ZnSet negate() const;

  ZnSet intersect(const ZnSet& other) const;
  ZnSet unite(const ZnSet& other) const;
  ZnSet subtract(const ZnSet& other) const;

  u64 intersection_count(const ZnSet& other) const;
  bool is_subset_of(const ZnSet& other) const;

  bool operator==(const ZnSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

 private:
  void recount();

  u64 n_;
  u64 card_;
  std::vector<u64> words_;
};

}  // namespace aplab
