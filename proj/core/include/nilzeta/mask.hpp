#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nilzeta {

using Elem = std::uint32_t;

/// Fixed-length bitset over the elements of a group, with a cached popcount.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(std::size_t universe)
      : words_((universe + 63) / 64, 0), universe_(universe) {}

  static ElementMask full(std::size_t universe);
  static ElementMask singleton(std::size_t universe, Elem e);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool test(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }

  /// Returns true when the bit was newly set.
  bool set(Elem e) noexcept {
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  void reset(Elem e) noexcept {
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  bool is_subset_of(const ElementMask& other) const noexcept;
  bool intersects(const ElementMask& other) const noexcept;

  ElementMask operator&(const ElementMask& other) const;
  ElementMask operator|(const ElementMask& other) const;
  ElementMask& operator|=(const ElementMask& other);

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> elements() const;

  /// Smallest element present; universe() when empty.
  Elem first() const noexcept;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool operator==(const ElementMask& other) const noexcept {
    return universe_ == other.universe_ && count_ == other.count_ && words_ == other.words_;
  }

  /// Lexicographic order on the sorted element lists: at the first element
  /// where the masks differ, the mask containing it sorts first.
  static bool lex_less(const ElementMask& a, const ElementMask& b) noexcept;

  std::size_t hash() const noexcept;

  /// Hex string, least significant word first.
  std::string to_hex() const;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
};

struct ElementMaskHash {
  std::size_t operator()(const ElementMask& m) const noexcept { return m.hash(); }
};

}  // namespace nilzeta
