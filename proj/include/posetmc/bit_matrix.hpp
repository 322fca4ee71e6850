#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace posetmc {

// Dense square boolean matrix stored as one bitset per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] |= bit(c); }
  void reset(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] &= ~bit(c); }
  void assign(std::size_t r, std::size_t c, bool v) noexcept { v ? set(r, c) : reset(r, c); }

  const std::uint64_t* row(std::size_t r) const noexcept { return bits_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) noexcept { return bits_.data() + r * words_; }

  std::size_t row_count(std::size_t r) const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(row(r)[w]);
    return total;
  }
  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += std::popcount(w);
    return total;
  }

  // Row r |= row s.
  void or_row(std::size_t r, std::size_t s) noexcept {
    for (std::size_t w = 0; w < words_; ++w) bits_[r * words_ + w] |= bits_[s * words_ + w];
  }

  BitMatrix& operator&=(const BitMatrix& o) noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  BitMatrix& operator|=(const BitMatrix& o) noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  BitMatrix& subtract(const BitMatrix& o) noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }
  bool subset_of(const BitMatrix& o) const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  bool operator==(const BitMatrix&) const = default;
  auto operator<=>(const BitMatrix& o) const { return bits_ <=> o.bits_; }

  const std::vector<std::uint64_t>& raw() const noexcept { return bits_; }

 private:
  static constexpr std::uint64_t bit(std::size_t c) noexcept { return std::uint64_t{1} << (c % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace posetmc
