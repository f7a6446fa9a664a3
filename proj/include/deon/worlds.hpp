#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace deon {

// One propositional valuation. Bit i of `index` is the truth value of
// the i-th vocabulary atom, so a vocabulary of n atoms has the worlds
// 0 .. 2^n - 1 and nothing else.
struct World {
  std::uint32_t index = 0;

  auto operator<=>(const World&) const = default;
};

// A set of worlds over a fixed world count, stored as a bit vector.
class WorldSet {
 public:
  WorldSet() = default;

  explicit WorldSet(std::size_t world_count)
      : count_(world_count), bits_((world_count + 63) / 64, 0) {}

  static WorldSet all(std::size_t world_count) {
    WorldSet s(world_count);
    for (std::size_t i = 0; i < s.bits_.size(); ++i) s.bits_[i] = ~0ull;
    s.trim();
    return s;
  }

  std::size_t world_count() const noexcept { return count_; }

  bool test(std::uint32_t w) const { return (bits_[w >> 6] >> (w & 63)) & 1; }
  void set(std::uint32_t w) { bits_[w >> 6] |= 1ull << (w & 63); }
  void reset(std::uint32_t w) { bits_[w >> 6] &= ~(1ull << (w & 63)); }

  bool empty() const noexcept {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto b : bits_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
  }

  WorldSet& operator&=(const WorldSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }

  WorldSet& operator|=(const WorldSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }

  // Set difference: keeps the bits not set in `o`.
  WorldSet& subtract(const WorldSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  WorldSet complement() const {
    WorldSet s(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
    s.trim();
    return s;
  }

  bool intersects(const WorldSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  // Ascending member indices.
  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::uint32_t w = 0; w < count_; ++w)
      if (test(w)) out.push_back(w);
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return bits_; }

  bool operator==(const WorldSet&) const = default;

 private:
  void trim() {
    if (count_ % 64 != 0 && !bits_.empty())
      bits_.back() &= (1ull << (count_ % 64)) - 1;
  }

  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
inline WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }

// A binary relation over the world set. `contains(a, b)` reads
// "a is at least as ideal/normal as b"; lower is better throughout.
class Relation {
 public:
  Relation() = default;

  explicit Relation(std::size_t world_count)
      : count_(world_count), rows_(world_count, WorldSet(world_count)) {}

  static Relation universal(std::size_t world_count) {
    Relation r(world_count);
    for (auto& row : r.rows_) row = WorldSet::all(world_count);
    return r;
  }

  std::size_t world_count() const noexcept { return count_; }

  bool contains(std::uint32_t a, std::uint32_t b) const { return rows_[a].test(b); }
  void add(std::uint32_t a, std::uint32_t b) { rows_[a].set(b); }
  void remove(std::uint32_t a, std::uint32_t b) { rows_[a].reset(b); }

  // All b with (a, b) in the relation.
  const WorldSet& row(std::uint32_t a) const { return rows_[a]; }

  void add_product(const WorldSet& as, const WorldSet& bs) {
    for (std::uint32_t a : as.indices()) rows_[a] |= bs;
  }

  void remove_product(const WorldSet& as, const WorldSet& bs) {
    for (std::uint32_t a : as.indices()) rows_[a].subtract(bs);
  }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.count();
    return n;
  }

  bool is_reflexive() const {
    for (std::uint32_t w = 0; w < count_; ++w)
      if (!rows_[w].test(w)) return false;
    return true;
  }

  bool is_transitive() const {
    for (std::uint32_t a = 0; a < count_; ++a)
      for (std::uint32_t b : rows_[a].indices()) {
        // need rows_[a] to cover rows_[b]
        WorldSet missing = rows_[b];
        missing.subtract(rows_[a]);
        if (!missing.empty()) return false;
      }
    return true;
  }

  bool is_totally_connected() const {
    for (std::uint32_t a = 0; a < count_; ++a)
      for (std::uint32_t b = 0; b <= a; ++b)
        if (!rows_[a].test(b) && !rows_[b].test(a)) return false;
    return true;
  }

  bool operator==(const Relation&) const = default;

 private:
  std::size_t count_ = 0;
  std::vector<WorldSet> rows_;
};

}  // namespace deon
