#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace wlkit::bytes {

// Fixed-width little-endian appends. Signature payloads are byte strings and
// must not depend on host byte order.

inline void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

inline void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline void put_u64(std::string& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

// Doubles are serialized by bit pattern: features compare bitwise, so the
// payload has to preserve -0.0 vs 0.0 and NaN payloads exactly.
inline void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

}  // namespace wlkit::bytes
