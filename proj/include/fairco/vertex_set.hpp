#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairco {

using Vertex = int;

/// Largest order representable by a single-word vertex set.
inline constexpr int max_set_order = 64;

/**
 * A subset of {0, ..., 63} stored as one machine word. Bit v is set iff
 * vertex v is a member. Iteration visits members in ascending order.
 */
class VertexSet
{
public:
  class iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex *;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

    constexpr auto operator*() const -> Vertex { return std::countr_zero(_rest); }
    constexpr auto operator++() -> iterator & {
      _rest &= _rest - 1;
      return *this;
    }
    constexpr auto operator++(int) -> iterator {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr auto operator==(const iterator &) const -> bool = default;

  private:
    std::uint64_t _rest = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (auto v : members)
      insert(v);
  }

  /// {0, ..., n-1}.
  static constexpr auto prefix(int n) -> VertexSet {
    return VertexSet(n >= max_set_order ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static constexpr auto singleton(Vertex v) -> VertexSet { return VertexSet(std::uint64_t{1} << v); }

  constexpr auto bits() const -> std::uint64_t { return _bits; }
  constexpr auto size() const -> int { return std::popcount(_bits); }
  constexpr auto empty() const -> bool { return _bits == 0; }

  constexpr auto contains(Vertex v) const -> bool {
    return v >= 0 && v < max_set_order && ((_bits >> v) & 1U) != 0;
  }

  auto insert(Vertex v) -> void {
    check_index(v);
    _bits |= std::uint64_t{1} << v;
  }

  auto erase(Vertex v) -> void {
    check_index(v);
    _bits &= ~(std::uint64_t{1} << v);
  }

  /// Smallest member; the set must be nonempty.
  constexpr auto min() const -> Vertex { return std::countr_zero(_bits); }
  /// Largest member; the set must be nonempty.
  constexpr auto max() const -> Vertex { return max_set_order - 1 - std::countl_zero(_bits); }

  constexpr auto intersection_size(VertexSet other) const -> int { return std::popcount(_bits & other._bits); }
  constexpr auto intersects(VertexSet other) const -> bool { return (_bits & other._bits) != 0; }
  constexpr auto is_subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }

  constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet(_bits | o._bits); }
  constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet(_bits & o._bits); }
  constexpr auto operator^(VertexSet o) const -> VertexSet { return VertexSet(_bits ^ o._bits); }
  /// Set difference.
  constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet(_bits & ~o._bits); }
  constexpr auto operator|=(VertexSet o) -> VertexSet & {
    _bits |= o._bits;
    return *this;
  }
  constexpr auto operator&=(VertexSet o) -> VertexSet & {
    _bits &= o._bits;
    return *this;
  }
  constexpr auto operator-=(VertexSet o) -> VertexSet & {
    _bits &= ~o._bits;
    return *this;
  }

  constexpr auto operator==(const VertexSet &) const -> bool = default;

  constexpr auto begin() const -> iterator { return iterator(_bits); }
  constexpr auto end() const -> iterator { return iterator(0); }

  auto to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

  /// "{0, 2, 5}"
  auto to_string() const -> std::string {
    std::string out = "{";
    bool first = true;
    for (auto v : *this) {
      if (! first)
        out += ", ";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

private:
  static auto check_index(Vertex v) -> void {
    if (v < 0 || v >= max_set_order)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside single-word set range");
  }

  std::uint64_t _bits = 0;
};

} // namespace fairco
