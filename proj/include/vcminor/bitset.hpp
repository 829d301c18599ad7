#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace vcminor {

/// Fixed-width dynamic bitset with hashing, used for set families and ball
/// restrictions. Width is set at construction and never changes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int width) : width_(width), blocks_((width + 63) / 64, 0) {}

  int width() const { return width_; }

  void set(int i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto b : blocks_) c += __builtin_popcountll(b);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & ~o.blocks_[i]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const {
    return width_ == o.width_ && blocks_ == o.blocks_;
  }
  bool operator<(const Bitset& o) const { return blocks_ < o.blocks_; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto b : blocks_) {
      h ^= b;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < width_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int width_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace vcminor
