#ifndef BETASUM_NUM_FORMAT_HPP
#define BETASUM_NUM_FORMAT_HPP

#include <array>
#include <charconv>
#include <string>

namespace betasum {

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

}  // namespace betasum

#endif
