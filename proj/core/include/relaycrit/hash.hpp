#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace relaycrit {

/// FNV-1a, 64 bit. Stable across platforms; used for schema and provenance
/// fingerprints, not for security.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

}  // namespace relaycrit
