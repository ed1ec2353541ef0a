#pragma once

// Batch k-fair domination test: for each candidate subset S (a bitmask over
// the graph's vertices) decide whether every vertex v outside S has exactly k
// neighbours in S. The scalar kernels are the reference; vector variants must
// agree with them bit for bit and are picked at runtime by the dispatcher.

#include <cstdint>
#include <span>
#include <string_view>

namespace fairco::simd {

enum class Isa
{
  scalar,
  avx2
};

auto isa_name(Isa isa) -> std::string_view;
/// Compiled in and supported by the running CPU.
auto isa_supported(Isa isa) -> bool;

/// Best supported ISA, unless FAIRCO_SIMD=scalar|avx2 says otherwise.
auto active_isa() -> Isa;
/// Throws std::invalid_argument if the ISA is not supported here.
auto set_active_isa(Isa isa) -> void;

/// out[i] = 1 iff subsets[i] is k-fair dominating. `rows` holds one adjacency
/// word per vertex. out.size() must equal subsets.size().
auto classify_kfd(std::span<const std::uint64_t> rows, unsigned k, std::span<const std::uint64_t> subsets,
                  std::span<std::uint8_t> out) -> void;

/// out[i] = 1 iff the subset with mask first + i is k-fair dominating.
auto classify_kfd_range(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t first,
                        std::span<std::uint8_t> out) -> void;

namespace scalar {
auto is_kfd(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t subset) -> bool;
auto classify_kfd(std::span<const std::uint64_t> rows, unsigned k, std::span<const std::uint64_t> subsets,
                  std::span<std::uint8_t> out) -> void;
auto classify_kfd_range(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t first,
                        std::span<std::uint8_t> out) -> void;
} // namespace scalar

namespace avx2 {
// Only callable when isa_supported(Isa::avx2).
auto classify_kfd(std::span<const std::uint64_t> rows, unsigned k, std::span<const std::uint64_t> subsets,
                  std::span<std::uint8_t> out) -> void;
auto classify_kfd_range(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t first,
                        std::span<std::uint8_t> out) -> void;
} // namespace avx2

} // namespace fairco::simd
