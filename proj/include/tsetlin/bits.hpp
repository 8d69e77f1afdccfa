#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tsetlin {

/// Packed bit vector, LSB-first within 64-bit words.
class bit_vector {
public:
  bit_vector() = default;

  explicit bit_vector(std::uint32_t size)
      : words_(words_for(size)), size_(size) {}

  bit_vector(std::initializer_list<int> bits)
      : bit_vector(static_cast<std::uint32_t>(bits.size())) {
    std::uint32_t k = 0;
    for (int b : bits) set(k++, b != 0);
  }

  static std::uint32_t words_for(std::uint32_t bits) {
    return (bits + 63u) / 64u;
  }

  void set(std::uint32_t k, bool v = true) {
    const std::uint64_t mask = 1ULL << (k & 63u);
    if (v)
      words_[k >> 6] |= mask;
    else
      words_[k >> 6] &= ~mask;
  }

  bool test(std::uint32_t k) const {
    return (words_[k >> 6] >> (k & 63u)) & 1u;
  }

  std::uint32_t size() const { return size_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const bit_vector&) const = default;

private:
  std::vector<std::uint64_t> words_;
  std::uint32_t size_ = 0;
};

/// Non-owning view of packed bits (a dataset row or a bit_vector).
struct bit_span {
  const std::uint64_t* words = nullptr;
  std::uint32_t size = 0;

  bit_span() = default;
  bit_span(const std::uint64_t* w, std::uint32_t n) : words(w), size(n) {}
  bit_span(const bit_vector& v) : words(v.words().data()), size(v.size()) {}

  bool test(std::uint32_t k) const {
    return (words[k >> 6] >> (k & 63u)) & 1u;
  }
};

} // namespace tsetlin
