#pragma once

#include <cstdint>

namespace sgr {

// Explicit search budget. Exhaustion is a first-class marked outcome on the
// results that carry it, never a silent truncation.
struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
};

}  // namespace sgr
