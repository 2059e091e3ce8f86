#include "tuplecode/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace tuplecode::kernels {

std::size_t subset_count_scalar(std::uint32_t agree, const std::uint32_t* masks,
                                std::size_t count) {
    std::size_t votes = 0;
    for (std::size_t i = 0; i < count; ++i)
        votes += ((agree & masks[i]) == masks[i]) ? 1u : 0u;
    return votes;
}

std::size_t mismatch_count_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < len; ++i) diff += (a[i] != b[i]) ? 1u : 0u;
    return diff;
}

#if defined(__x86_64__) || defined(_M_X64)

__attribute__((target("avx2"))) std::size_t subset_count_avx2(std::uint32_t agree,
                                                              const std::uint32_t* masks,
                                                              std::size_t count) {
    const __m256i va = _mm256_set1_epi32(static_cast<int>(agree));
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= count; i += 8) {
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        const __m256i contained = _mm256_cmpeq_epi32(_mm256_and_si256(va, m), m);
        acc = _mm256_sub_epi32(acc, contained); // cmpeq lanes are -1 on a match
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t votes = 0;
    for (std::uint32_t v : lanes) votes += v;
    for (; i < count; ++i) votes += ((agree & masks[i]) == masks[i]) ? 1u : 0u;
    return votes;
}

__attribute__((target("avx2"))) std::size_t mismatch_count_avx2(const std::uint8_t* a,
                                                                const std::uint8_t* b,
                                                                std::size_t len) {
    std::size_t diff = 0;
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        diff += 32u - static_cast<std::size_t>(__builtin_popcount(eq));
    }
    for (; i < len; ++i) diff += (a[i] != b[i]) ? 1u : 0u;
    return diff;
}

#endif // x86-64

#if defined(__aarch64__)

std::size_t subset_count_neon(std::uint32_t agree, const std::uint32_t* masks, std::size_t count) {
    const uint32x4_t va = vdupq_n_u32(agree);
    uint32x4_t acc = vdupq_n_u32(0);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const uint32x4_t m = vld1q_u32(masks + i);
        const uint32x4_t contained = vceqq_u32(vandq_u32(va, m), m); // all-ones on match
        acc = vsubq_u32(acc, contained);
    }
    std::size_t votes = vaddvq_u32(acc);
    for (; i < count; ++i) votes += ((agree & masks[i]) == masks[i]) ? 1u : 0u;
    return votes;
}

std::size_t mismatch_count_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
    std::size_t diff = 0;
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        const uint8x16_t va = vld1q_u8(a + i);
        const uint8x16_t vb = vld1q_u8(b + i);
        const uint8x16_t ne = vmvnq_u8(vceqq_u8(va, vb)); // 0xFF per mismatch
        diff += vaddvq_u8(vshrq_n_u8(ne, 7));
    }
    for (; i < len; ++i) diff += (a[i] != b[i]) ? 1u : 0u;
    return diff;
}

#endif // aarch64

namespace {

struct Dispatch {
    SubsetCountFn subset = &subset_count_scalar;
    MismatchCountFn mismatch = &mismatch_count_scalar;
    const char* name = "scalar";
};

Dispatch detect() {
    Dispatch d;
    const char* forced = std::getenv("TUPLECODE_KERNEL");
    const std::string_view want = forced ? std::string_view(forced) : std::string_view();
    if (want == "scalar") return d;
#if defined(__x86_64__) || defined(_M_X64)
    if ((want.empty() || want == "avx2") && __builtin_cpu_supports("avx2")) {
        d.subset = &subset_count_avx2;
        d.mismatch = &mismatch_count_avx2;
        d.name = "avx2";
        return d;
    }
#endif
#if defined(__aarch64__)
    if (want.empty() || want == "neon") {
        d.subset = &subset_count_neon;
        d.mismatch = &mismatch_count_neon;
        d.name = "neon";
        return d;
    }
#endif
    return d;
}

const Dispatch& dispatch() {
    static const Dispatch d = detect();
    return d;
}

} // namespace

SubsetCountFn subset_count_fn() { return dispatch().subset; }
MismatchCountFn mismatch_count_fn() { return dispatch().mismatch; }
const char* active_kernel() { return dispatch().name; }

} // namespace tuplecode::kernels
