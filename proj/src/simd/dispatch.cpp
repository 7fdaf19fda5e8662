#include <cstdlib>
#include <string_view>

#include "spinphase/simd/kernels.hpp"

namespace spinphase::simd {
namespace {

const KernelTable& select_kernels() noexcept {
  const char* forced = std::getenv("SPINPHASE_SIMD");
  const std::string_view choice = forced != nullptr ? forced : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (const KernelTable* wide = avx2_kernels()) return *wide;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace spinphase::simd
