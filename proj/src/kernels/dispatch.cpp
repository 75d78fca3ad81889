#include <atomic>
#include <cstdlib>
#include <string>

#include "artinres/errors.hpp"
#include "artinres/kernels.hpp"

namespace artinres::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(ARTINRES_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& table_for(Backend b) noexcept {
#if defined(ARTINRES_HAVE_AVX2)
  if (b == Backend::avx2) return avx2_table();
#endif
  (void)b;
  return scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

bool available(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend detect() noexcept {
  if (const char* env = std::getenv("ARTINRES_KERNEL")) {
    std::string want(env);
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2" && available(Backend::avx2)) return Backend::avx2;
  }
  return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

const KernelTable& active() noexcept {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = &table_for(detect());
    const KernelTable* expected = nullptr;
    if (!g_active.compare_exchange_strong(expected, t, std::memory_order_acq_rel)) t = expected;
  }
  return *t;
}

void select(Backend b) {
  if (!available(b)) throw InputError("kernel backend '" + std::string(name(b)) + "' is not available");
  g_active.store(&table_for(b), std::memory_order_release);
}

std::string_view name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace artinres::kernels
