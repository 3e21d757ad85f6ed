#include "aplab/zn_set.hpp"

#include <algorithm>
#include <bit>

namespace aplab {

ZnSet::ZnSet(u64 modulus) : n_(modulus), card_(0), words_((modulus + 63) / 64, 0) {
  require(modulus >= 2, "ZnSet: modulus must be at least 2");
}

ZnSet::ZnSet(u64 modulus, const std::vector<u32>& elements) : ZnSet(modulus) {
  for (u32 x : elements) {
    require(x < n_, "ZnSet: element out of range");
    words_[x >> 6] |= 1ULL << (x & 63);
  }
  recount();
}

ZnSet ZnSet::full(u64 modulus) {
  ZnSet s(modulus);
  for (auto& w : s.words_) w = ~0ULL;
  u64 tail = modulus & 63;
  if (tail) s.words_.back() = (1ULL << tail) - 1;
  s.card_ = modulus;
  return s;
}

ZnSet ZnSet::singleton(u64 modulus, u32 x) {
  ZnSet s(modulus);
  s.insert(x);
  return s;
}

void ZnSet::insert(u32 x) {
  require(x < n_, "ZnSet: element out of range");
  u64 mask = 1ULL << (x & 63);
  if (!(words_[x >> 6] & mask)) {
    words_[x >> 6] |= mask;
    ++card_;
  }
}

void ZnSet::erase(u32 x) {
  require(x < n_, "ZnSet: element out of range");
  u64 mask = 1ULL << (x & 63);
  if (words_[x >> 6] & mask) {
    words_[x >> 6] &= ~mask;
    --card_;
  }
}

std::vector<u32> ZnSet::elements() const {
  std::vector<u32> out;
  out.reserve(card_);
  for (u64 w = 0; w < words_.size(); ++w) {
    u64 bits = words_[w];
    while (bits) {
      out.push_back(static_cast<u32>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

ZnSet ZnSet::translate(u32 x) const {
  x = static_cast<u32>(x % n_);
  if (x == 0) return *this;
  ZnSet out(n_);
  for (u32 a : elements()) {
    u64 b = a + x;
    if (b >= n_) b -= n_;
    out.words_[b >> 6] |= 1ULL << (b & 63);
  }
  out.card_ = card_;
  return out;
}

ZnSet ZnSet::negate() const {
  ZnSet out(n_);
  for (u32 a : elements()) {
    u64 b = a == 0 ? 0 : n_ - a;
    out.words_[b >> 6] |= 1ULL << (b & 63);
  }
  out.card_ = card_;
  return out;
}

ZnSet ZnSet::intersect(const ZnSet& other) const {
  require(n_ == other.n_, "ZnSet: modulus mismatch");
  ZnSet out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  out.recount();
  return out;
}

ZnSet ZnSet::unite(const ZnSet& other) const {
  require(n_ == other.n_, "ZnSet: modulus mismatch");
  ZnSet out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  out.recount();
  return out;
}

ZnSet ZnSet::subtract(const ZnSet& other) const {
  require(n_ == other.n_, "ZnSet: modulus mismatch");
  ZnSet out(n_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~other.words_[i];
  out.recount();
  return out;
}

u64 ZnSet::intersection_count(const ZnSet& other) const {
  require(n_ == other.n_, "ZnSet: modulus mismatch");
  u64 c = 0;
  for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

bool ZnSet::is_subset_of(const ZnSet& other) const {
  require(n_ == other.n_, "ZnSet: modulus mismatch");
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

void ZnSet::recount() {
  u64 c = 0;
  for (u64 w : words_) c += std::popcount(w);
  card_ = c;
}

}  // namespace aplab
