#pragma once

// Row kernels for dense elimination over Z/p. Every backend computes bit-identical
// results; the scalar versions are the reference the SIMD versions are tested against.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "artinres/modulus.hpp"

namespace artinres::kernels {

enum class Backend { scalar, avx2 };

/// dst[k] = (dst[k] + c * src[k]) mod p, for k < n. Requires c, dst[k], src[k] < p.
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
                        const Modulus& mod);
/// row[k] = (row[k] * c) mod p, for k < n.
using ScaleFn = void (*)(std::uint32_t* row, std::uint32_t c, std::size_t n, const Modulus& mod);

struct KernelTable {
  Backend backend;
  AxpyFn axpy;
  ScaleFn scale;
};

const KernelTable& scalar_table() noexcept;
#if defined(ARTINRES_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif

/// True when the backend was compiled in and the running CPU supports it.
bool available(Backend b) noexcept;

/// Best backend for this CPU, honoring ARTINRES_KERNEL=scalar|avx2|auto.
Backend detect() noexcept;

/// The table used by the linear algebra layer. Selected on first use.
const KernelTable& active() noexcept;

/// Overrides the active backend; throws InputError when unavailable.
void select(Backend b);

std::string_view name(Backend b) noexcept;

}  // namespace artinres::kernels
