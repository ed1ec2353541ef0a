#include <fairco/simd/kfd_kernels.hpp>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fairco::simd {

namespace {

auto cpu_has_avx2() -> bool
{
#if defined(FAIRCO_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

auto initial_isa() -> Isa
{
  if (const char * forced = std::getenv("FAIRCO_SIMD")) {
    const std::string name = forced;
    if (name == "scalar")
      return Isa::scalar;
    if (name == "avx2" && cpu_has_avx2())
      return Isa::avx2;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

auto current() -> std::atomic<Isa> &
{
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

} // namespace

auto isa_name(Isa isa) -> std::string_view
{
  switch (isa) {
  case Isa::scalar:
    return "scalar";
  case Isa::avx2:
    return "avx2";
  }
  return "unknown";
}

auto isa_supported(Isa isa) -> bool
{
  return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

auto active_isa() -> Isa
{
  return current().load(std::memory_order_relaxed);
}

auto set_active_isa(Isa isa) -> void
{
  if (! isa_supported(isa))
    throw std::invalid_argument("ISA " + std::string(isa_name(isa)) + " is not available on this machine");
  current().store(isa, std::memory_order_relaxed);
}

auto classify_kfd(std::span<const std::uint64_t> rows, unsigned k, std::span<const std::uint64_t> subsets,
                  std::span<std::uint8_t> out) -> void
{
#if defined(FAIRCO_HAVE_AVX2_KERNEL)
  if (active_isa() == Isa::avx2)
    return avx2::classify_kfd(rows, k, subsets, out);
#endif
  scalar::classify_kfd(rows, k, subsets, out);
}

auto classify_kfd_range(std::span<const std::uint64_t> rows, unsigned k, std::uint64_t first,
                        std::span<std::uint8_t> out) -> void
{
#if defined(FAIRCO_HAVE_AVX2_KERNEL)
  if (active_isa() == Isa::avx2)
    return avx2::classify_kfd_range(rows, k, first, out);
#endif
  scalar::classify_kfd_range(rows, k, first, out);
}

} // namespace fairco::simd
