#pragma once

#include <cstddef>
#include <stdexcept>

namespace tde {

// A configured work bound (recursion nodes, enumeration nodes) was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxNodes = 10000;

}  // namespace tde
