#include <fairco/simd/kfd_kernels.hpp>

#include <immintrin.h>

namespace fairco::simd::avx2 {

namespace {

// Per-lane 64-bit popcount: nibble lookup, then horizontal byte sums.
inline auto popcount_epi64(__m256i x) -> __m256i
{
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

// Bit i of the result is set iff lane i holds a k-fair dominating subset.
inline auto classify4(std::span<const std::uint64_t> rows, __m256i target, __m256i subsets) -> int
{
  const __m256i zero = _mm256_setzero_si256();
  __m256i bad = zero;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    const __m256i row = _mm256_set1_epi64x(static_cast<long long>(rows[v]));
    const __m256i own_bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
    const __m256i outside = _mm256_cmpeq_epi64(_mm256_and_si256(subsets, own_bit), zero);
    const __m256i fair = _mm256_cmpeq_epi64(popcount_epi64(_mm256_and_si256(subsets, row)), target);
    bad = _mm256_or_si256(bad, _mm256_andnot_si256(fair, outside));
  }
  return ~_mm256_movemask_pd(_mm256_castsi256_pd(bad)) & 0xf;
}

inline auto store4(int mask, std::uint8_t * out) -> void
{
  for (int lane = 0; lane < 4; ++lane)
    out[lane] = static_cast<std::uint8_t>((mask >> lane) & 1);
}

} // namespace

auto classify_kfd(std::span<const std::uint64_t> rows, unsigned k, std::span<const std::uint64_t> subsets,
                  std::span<std::uint8_t> out) -> void
{
  const __m256i target = _mm256_set1_epi64x(k);
  std::size_t i = 0;
  for (; i + 4 <= subsets.size(); i += 4) {
    const __m256i batch = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(subsets.data() + i));
    store4(classify4(rows, target, batch), out.data() + i);
  }
  for (; i < subsets.size(); ++i)
    out[i] = scalar::is_kfd(rows, k, subsets[i]) ? 1 : 0;
}

auto classify_kfd_range(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t first,
                        std::span<std::uint8_t> out) -> void
{
  const __m256i target = _mm256_set1_epi64x(k);
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i batch = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(first)), _mm256_setr_epi64x(0, 1, 2, 3));
  std::size_t i = 0;
  for (; i + 4 <= out.size(); i += 4) {
    store4(classify4(rows, target, batch), out.data() + i);
    batch = _mm256_add_epi64(batch, step);
  }
  for (; i < out.size(); ++i)
    out[i] = scalar::is_kfd(rows, k, first + i) ? 1 : 0;
}

} // namespace fairco::simd::avx2
