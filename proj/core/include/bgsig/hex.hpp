#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgsig {

std::string to_hex(std::span<const uint8_t> bytes);

// Lower- or upper-case digits, even length; nullopt otherwise.
std::optional<std::vector<uint8_t>> from_hex(std::string_view text);

} // namespace bgsig
