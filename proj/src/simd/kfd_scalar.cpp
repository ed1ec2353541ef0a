#include <fairco/simd/kfd_kernels.hpp>

#include <bit>

namespace fairco::simd::scalar {

auto is_kfd(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t subset) -> bool
{
  const auto n = rows.size();
  for (std::size_t v = 0; v < n; ++v) {
    if ((subset >> v) & 1U)
      continue;
    if (static_cast<unsigned>(std::popcount(rows[v] & subset)) != k)
      return false;
  }
  return true;
}

auto classify_kfd(std::span<const std::uint64_t> rows, unsigned k, std::span<const std::uint64_t> subsets,
                  std::span<std::uint8_t> out) -> void
{
  for (std::size_t i = 0; i < subsets.size(); ++i)
    out[i] = is_kfd(rows, k, subsets[i]) ? 1 : 0;
}

auto classify_kfd_range(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t first,
                        std::span<std::uint8_t> out) -> void
{
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = is_kfd(rows, k, first + i) ? 1 : 0;
}

} // namespace fairco::simd::scalar
