#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>

namespace wlkit {

using ColorId = std::uint32_t;

/// Canonical byte serialization of a color-update input: previous color plus
/// aggregated neighborhood data, every multiset sorted before serialization.
/// Equal update inputs produce identical payloads; distinct inputs produce
/// distinct payloads (each payload is tagged and length-framed).
using Signature = std::string;

/// The injective "hash": exact interning of signature payloads to dense ids,
/// assigned in first-seen order. Ids are stable for the table's lifetime and
/// comparable only within one table.
class ColorTable {
public:
    ColorId intern(std::string_view payload);
    std::size_t size() const { return table_.size(); }

private:
    struct SvHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };
    struct SvEq {
        using is_transparent = void;
        bool operator()(std::string_view a, std::string_view b) const noexcept { return a == b; }
    };
    std::unordered_map<std::string, ColorId, SvHash, SvEq> table_;
};

}  // namespace wlkit
