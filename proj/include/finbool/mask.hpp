#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace finbool {

// Subset of {0, ..., ground-1}, packed into 64-bit words.  Bit i of the
// packed value corresponds to element i, so the whole mask reads as a
// little-endian integer.  That integer value is the canonical order used
// everywhere a "least" witness is promised: comparing masks compares the
// integers.  Unused bits above `ground` are kept zero.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::size_t ground);

  static Mask full(std::size_t ground);
  static Mask of(std::size_t ground, std::initializer_list<std::size_t> elems);
  static Mask of(std::size_t ground, const std::vector<std::size_t>& elems);

  std::size_t ground() const { return n_; }

  bool test(std::size_t i) const;
  Mask& set(std::size_t i, bool value = true);

  std::size_t count() const;
  bool none() const;
  bool all() const;

  // Index of the least element; `ground()` when empty.
  std::size_t lowest() const;
  std::vector<std::size_t> elements() const;

  Mask operator~() const;
  Mask operator&(const Mask& o) const;
  Mask operator|(const Mask& o) const;
  Mask operator^(const Mask& o) const;
  // Set difference.
  Mask operator-(const Mask& o) const;

  bool subset_of(const Mask& o) const;
  bool intersects(const Mask& o) const;

  bool operator==(const Mask& o) const = default;
  // Little-endian integer order; only defined between masks of equal ground.
  std::strong_ordering operator<=>(const Mask& o) const;

  std::string str() const;  // "{0,2,5}" for diagnostics
  std::size_t hash() const;

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;

  void check_same_ground(const Mask& o) const;
  void trim();
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const { return m.hash(); }
};

// Finite list of subsets of a common ground set.  Members may repeat;
// operations that need distinctness deduplicate explicitly.
struct SetFamily {
  std::size_t ground = 0;
  std::vector<Mask> members;

  SetFamily() = default;
  SetFamily(std::size_t ground_size, std::vector<Mask> m);

  std::size_t size() const { return members.size(); }
};

}  // namespace finbool
