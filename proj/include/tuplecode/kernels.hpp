#pragma once

#include <cstddef>
#include <cstdint>

// Inner-loop kernels behind the decoder and the bit-level metrics. Each has a
// scalar reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at startup; the variants are equivalence-tested
// against the scalar reference. Set TUPLECODE_KERNEL=scalar|avx2|neon to
// override the automatic choice.

namespace tuplecode::kernels {

/// Counts masks[i] with (agree & masks[i]) == masks[i], i.e. how many
/// classifier position masks are fully contained in the agreement mask.
std::size_t subset_count_scalar(std::uint32_t agree, const std::uint32_t* masks, std::size_t count);

/// Counts positions where the 0/1 bytes a[i] and b[i] differ.
std::size_t mismatch_count_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t subset_count_avx2(std::uint32_t agree, const std::uint32_t* masks, std::size_t count);
std::size_t mismatch_count_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
#endif

#if defined(__aarch64__)
std::size_t subset_count_neon(std::uint32_t agree, const std::uint32_t* masks, std::size_t count);
std::size_t mismatch_count_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
#endif

using SubsetCountFn = std::size_t (*)(std::uint32_t, const std::uint32_t*, std::size_t);
using MismatchCountFn = std::size_t (*)(const std::uint8_t*, const std::uint8_t*, std::size_t);

/// Runtime-selected entry points.
SubsetCountFn subset_count_fn();
MismatchCountFn mismatch_count_fn();

/// "avx2", "neon" or "scalar".
const char* active_kernel();

inline std::size_t subset_count(std::uint32_t agree, const std::uint32_t* masks, std::size_t count) {
    return subset_count_fn()(agree, masks, count);
}

inline std::size_t mismatch_count(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
    return mismatch_count_fn()(a, b, len);
}

} // namespace tuplecode::kernels
