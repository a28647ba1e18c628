#include "nilzeta/mask.hpp"

#include <cstdio>

namespace nilzeta {

ElementMask ElementMask::full(std::size_t universe) {
  ElementMask m(universe);
  for (std::size_t w = 0; w < m.words_.size(); ++w) m.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0)
    m.words_.back() = (std::uint64_t{1} << tail) - 1;
  m.count_ = universe;
  return m;
}

ElementMask ElementMask::singleton(std::size_t universe, Elem e) {
  ElementMask m(universe);
  m.set(e);
  return m;
}

bool ElementMask::is_subset_of(const ElementMask& other) const noexcept {
  if (count_ > other.count_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool ElementMask::intersects(const ElementMask& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

ElementMask ElementMask::operator&(const ElementMask& other) const {
  ElementMask r(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    r.words_[w] = words_[w] & other.words_[w];
    r.count_ += static_cast<std::size_t>(std::popcount(r.words_[w]));
  }
  return r;
}

ElementMask ElementMask::operator|(const ElementMask& other) const {
  ElementMask r(*this);
  r |= other;
  return r;
}

ElementMask& ElementMask::operator|=(const ElementMask& other) {
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
    count_ += static_cast<std::size_t>(std::popcount(words_[w]));
  }
  return *this;
}

std::vector<Elem> ElementMask::elements() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

Elem ElementMask::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return static_cast<Elem>(universe_);
}

bool ElementMask::lex_less(const ElementMask& a, const ElementMask& b) noexcept {
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (a.words_[w] & lowest) != 0;
    }
  }
  return false;
}

std::size_t ElementMask::hash() const noexcept {
  // splitmix-style mixing of each word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (std::uint64_t w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::string ElementMask::to_hex() const {
  std::string out;
  out.reserve(words_.size() * 16);
  char buf[17];
  for (std::uint64_t w : words_) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

}  // namespace nilzeta
