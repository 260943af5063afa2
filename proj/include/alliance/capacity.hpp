#pragma once

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alliance {

/// Size guards for the exponential routines. Exceeding one raises
/// capacity_error; nothing is ever silently truncated.
struct Capacity {
    int bruteforce_vertices = 20;  ///< max_gmda / rooted / annotated search universe
    int enumeration_set = 24;      ///< |S| for is_globally_minimal subset enumeration
    int nd_classes = 10;           ///< type classes for solve_nd
    int mmo_edges = 24;            ///< edges for mmo_bruteforce

    /// Bitmask width used by the enumerators.
    static constexpr int hard_limit = 64;

    /// Defaults, with the two enumeration guards replaced by ALLIANCE_CAPACITY
    /// when that variable holds a positive integer.
    static Capacity from_environment() {
        Capacity c;
        if (const char *env = std::getenv("ALLIANCE_CAPACITY"); env && *env) {
            std::string_view s(env);
            int value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || ptr != s.data() + s.size() || value <= 0)
                throw std::invalid_argument("ALLIANCE_CAPACITY must be a positive integer, got '" + std::string(s) + "'");
            if (value > hard_limit)
                throw std::invalid_argument("ALLIANCE_CAPACITY above the enumerator limit of " +
                                            std::to_string(hard_limit));
            c.bruteforce_vertices = value;
            c.enumeration_set = value;
        }
        return c;
    }
};

}  // namespace alliance
