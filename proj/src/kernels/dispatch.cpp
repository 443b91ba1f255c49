#include "tensor_tester/kernels.hpp"

#include <cstdlib>
#include <string>

namespace tt::kernels {

#if defined(TT_BUILD_AVX2)
const KernelTable* avx2_table_unchecked();
#endif

const KernelTable* avx2_table() {
#if defined(TT_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    return supported ? avx2_table_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable* table = [] {
        if (const char* env = std::getenv("TENSOR_TESTER_SIMD");
            env != nullptr && std::string(env) == "scalar") {
            return &scalar_table();
        }
        const KernelTable* vec = avx2_table();
        return vec != nullptr ? vec : &scalar_table();
    }();
    return *table;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

}  // namespace tt::kernels
