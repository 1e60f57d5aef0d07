#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhc {

using Mask = std::uint32_t;

inline constexpr unsigned max_ground_size = 31;

/// A family of subsets of the ground set {0, ..., n-1}; bit i of a mask is
/// element i. Members are kept sorted and unique.
class SetFamily {
 public:
  SetFamily() = default;

  SetFamily(unsigned n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
    if (n_ > max_ground_size) throw std::invalid_argument("ground set too large for a bitmask family");
    for (Mask m : members_)
      if (n_ < 32 && m >= (Mask{1} << n_))
        throw std::out_of_range("mask " + std::to_string(m) + " is not a subset of a " + std::to_string(n_) +
                                "-element ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  SetFamily(unsigned n, std::initializer_list<Mask> members) : SetFamily(n, std::vector<Mask>(members)) {}

  unsigned n() const noexcept { return n_; }
  const std::vector<Mask>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Mask m) const { return std::binary_search(members_.begin(), members_.end(), m); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  unsigned n_ = 0;
  std::vector<Mask> members_;
};

/// Mask of a set given by 1-based element labels, as written in the math:
/// set_of({1, 2}) is {1,2}, stored as bits 0 and 1.
inline Mask set_of(std::initializer_list<unsigned> elements) {
  Mask m = 0;
  for (unsigned e : elements) {
    if (e == 0 || e > max_ground_size) throw std::out_of_range("element labels are 1-based");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

inline unsigned set_size(Mask m) noexcept { return static_cast<unsigned>(std::popcount(m)); }

}  // namespace rhc
