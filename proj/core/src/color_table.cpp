#include "wlkit/color_table.hpp"

#include <limits>
#include <stdexcept>

namespace wlkit {

ColorId ColorTable::intern(std::string_view payload) {
    auto it = table_.find(payload);
    if (it != table_.end()) return it->second;
    if (table_.size() > std::numeric_limits<ColorId>::max())
        throw std::logic_error("color table: id space exhausted");
    const auto id = static_cast<ColorId>(table_.size());
    table_.emplace(std::string(payload), id);
    return id;
}

}  // namespace wlkit
