#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "orient_shatter/simd/kernels.hpp"

namespace orient_shatter::simd {

#if !defined(ORIENT_SHATTER_HAVE_AVX2)
const KernelTable* detail::avx2_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(ORIENT_SHATTER_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelTable* select_default() {
  if (const char* env = std::getenv("ORIENT_SHATTER_ISA")) {
    const std::string want(env);
    if (want == "scalar") return &detail::scalar_table();
    if (want == "avx2" && available(Isa::Avx2)) return detail::avx2_table();
  }
  if (available(Isa::Avx2)) return detail::avx2_table();
  return &detail::scalar_table();
}

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) throw std::invalid_argument("kernel ISA not available on this CPU");
  return isa == Isa::Avx2 ? *detail::avx2_table() : detail::scalar_table();
}

const KernelTable& active() {
  if (const KernelTable* forced = g_forced.load(std::memory_order_acquire)) return *forced;
  static const KernelTable* const chosen = select_default();
  return *chosen;
}

void force(Isa isa) { g_forced.store(&table(isa), std::memory_order_release); }

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (available(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

}  // namespace orient_shatter::simd
