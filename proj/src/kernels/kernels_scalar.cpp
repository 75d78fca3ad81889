#include "artinres/kernels.hpp"

namespace artinres::kernels {
namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
                 const Modulus& mod) {
  const std::uint32_t p = mod.p();
  for (std::size_t k = 0; k < n; ++k) {
    dst[k] = (dst[k] + c * src[k]) % p;
  }
}

void scale_scalar(std::uint32_t* row, std::uint32_t c, std::size_t n, const Modulus& mod) {
  const std::uint32_t p = mod.p();
  for (std::size_t k = 0; k < n; ++k) {
    row[k] = (row[k] * c) % p;
  }
}

constexpr KernelTable kScalar{Backend::scalar, &axpy_scalar, &scale_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace artinres::kernels
