#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace asymcone {

// Fixed-universe bitset used to track which forms of an arrangement vanish
// on a given flat. The universe size is set once at construction; the
// first 64 bits live inline, so the common case never allocates.
class Support {
 public:
  Support() = default;
  explicit Support(int universe) : size_(universe) {
    if (size_ > 64) rest_.assign((size_ + 63) / 64 - 1, 0);
  }

  int universe() const { return size_; }

  void set(int i) { word(i >> 6) |= (std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (word(i >> 6) >> (i & 63)) & 1;
  }

  int count() const {
    int n = __builtin_popcountll(w0_);
    for (auto w : rest_) n += __builtin_popcountll(w);
    return n;
  }

  bool empty() const {
    if (w0_) return false;
    for (auto w : rest_)
      if (w) return false;
    return true;
  }

  Support with(int i) const {
    Support s = *this;
    s.set(i);
    return s;
  }

  // True iff *this is a subset of other.
  bool subset_of(const Support& other) const {
    if (w0_ & ~other.w0_) return false;
    for (std::size_t k = 0; k < rest_.size(); ++k)
      if (rest_[k] & ~other.rest_[k]) return false;
    return true;
  }

  bool operator==(const Support& other) const {
    return w0_ == other.w0_ && rest_ == other.rest_;
  }
  bool operator<(const Support& other) const {
    if (w0_ != other.w0_) return w0_ < other.w0_;
    return rest_ < other.rest_;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull ^ w0_;
    h *= 0x100000001b3ull;
    for (auto w : rest_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::uint64_t& word(int k) { return k == 0 ? w0_ : rest_[k - 1]; }
  const std::uint64_t& word(int k) const { return k == 0 ? w0_ : rest_[k - 1]; }

  std::uint64_t w0_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> rest_;
};

struct SupportHash {
  std::size_t operator()(const Support& s) const { return s.hash(); }
};

}  // namespace asymcone
