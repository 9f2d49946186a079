#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redos::utf8 {

struct DecodeError : std::runtime_error {
    std::size_t offset;
    DecodeError(const std::string& what, std::size_t off) : std::runtime_error(what), offset(off) {}
};

std::u32string decode(std::string_view bytes);
std::string encode(std::u32string_view text);

}  // namespace redos::utf8
