#include "finbool/mask.hpp"

#include <bit>

#include "finbool/errors.hpp"

namespace finbool {

namespace {
std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Mask::Mask(std::size_t ground) : n_(ground), w_(word_count(ground), 0) {}

Mask Mask::full(std::size_t ground) {
  Mask m(ground);
  for (auto& w : m.w_) w = ~std::uint64_t{0};
  m.trim();
  return m;
}

Mask Mask::of(std::size_t ground, std::initializer_list<std::size_t> elems) {
  Mask m(ground);
  for (std::size_t e : elems) m.set(e);
  return m;
}

Mask Mask::of(std::size_t ground, const std::vector<std::size_t>& elems) {
  Mask m(ground);
  for (std::size_t e : elems) m.set(e);
  return m;
}

bool Mask::test(std::size_t i) const {
  if (i >= n_) throw input_error("mask element " + std::to_string(i) + " out of range");
  return (w_[i / 64] >> (i % 64)) & 1;
}

Mask& Mask::set(std::size_t i, bool value) {
  if (i >= n_) throw input_error("mask element " + std::to_string(i) + " out of range");
  if (value)
    w_[i / 64] |= std::uint64_t{1} << (i % 64);
  else
    w_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  return *this;
}

std::size_t Mask::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Mask::none() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool Mask::all() const { return count() == n_; }

std::size_t Mask::lowest() const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
  return n_;
}

std::vector<std::size_t> Mask::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t w = w_[k];
    while (w) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Mask Mask::operator~() const {
  Mask r(n_);
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
  r.trim();
  return r;
}

Mask Mask::operator&(const Mask& o) const {
  check_same_ground(o);
  Mask r(n_);
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
  return r;
}

Mask Mask::operator|(const Mask& o) const {
  check_same_ground(o);
  Mask r(n_);
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
  return r;
}

Mask Mask::operator^(const Mask& o) const {
  check_same_ground(o);
  Mask r(n_);
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] ^ o.w_[k];
  return r;
}

Mask Mask::operator-(const Mask& o) const {
  check_same_ground(o);
  Mask r(n_);
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
  return r;
}

bool Mask::subset_of(const Mask& o) const {
  check_same_ground(o);
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

bool Mask::intersects(const Mask& o) const {
  check_same_ground(o);
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & o.w_[k]) return true;
  return false;
}

std::strong_ordering Mask::operator<=>(const Mask& o) const {
  check_same_ground(o);
  for (std::size_t k = w_.size(); k-- > 0;) {
    if (w_[k] != o.w_[k]) return w_[k] <=> o.w_[k];
  }
  return std::strong_ordering::equal;
}

std::string Mask::str() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::size_t Mask::hash() const {
  // FNV-1a over words plus the ground size.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(n_);
  for (auto w : w_) mix(w);
  return static_cast<std::size_t>(h);
}

void Mask::check_same_ground(const Mask& o) const {
  if (n_ != o.n_)
    throw input_error("ground size mismatch: " + std::to_string(n_) + " vs " +
                      std::to_string(o.n_));
}

void Mask::trim() {
  if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (~std::uint64_t{0}) >> (64 - n_ % 64);
}

SetFamily::SetFamily(std::size_t ground_size, std::vector<Mask> m)
    : ground(ground_size), members(std::move(m)) {
  for (const auto& mem : members)
    if (mem.ground() != ground)
      throw input_error("family member ground " + std::to_string(mem.ground()) +
                        " does not match family ground " + std::to_string(ground));
}

}  // namespace finbool
