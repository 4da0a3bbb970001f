#include <cstdlib>
#include <stdexcept>

#include "specbound/kernels.hpp"

namespace specbound::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();  // defined in kernels_avx2.cpp
#endif

bool available(Level level) {
    switch (level) {
        case Level::scalar:
            return true;
        case Level::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const Ops& ops_for(Level level) {
    if (!available(level))
        throw std::runtime_error("kernel level " + level_name(level) + " not available on this CPU");
    switch (level) {
        case Level::scalar:
            return scalar_ops();
        case Level::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return avx2_ops();
#else
            break;
#endif
    }
    return scalar_ops();
}

namespace {

Level pick_level() {
    if (const char* env = std::getenv("SPECBOUND_SIMD")) {
        std::string v(env);
        if (v == "scalar") return Level::scalar;
        if (v == "avx2" && available(Level::avx2)) return Level::avx2;
        // unknown or unavailable value: fall through to auto-detection
    }
    if (available(Level::avx2)) return Level::avx2;
    return Level::scalar;
}

Level g_level = pick_level();

}  // namespace

const Ops& active() { return ops_for(g_level); }

Level active_level() { return g_level; }

void force_level(Level level) {
    if (!available(level))
        throw std::runtime_error("kernel level " + level_name(level) + " not available on this CPU");
    g_level = level;
}

std::string level_name(Level level) {
    switch (level) {
        case Level::scalar: return "scalar";
        case Level::avx2: return "avx2";
    }
    return "unknown";
}

}  // namespace specbound::kernels
