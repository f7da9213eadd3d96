#pragma once

#include <vector>

#include "rrg/colour.hpp"

namespace oracle {

/// Pairs of [n] with both a red and a blue common neighbour (K3 bases in both colours).
inline int cherry_forced_pairs(const rrg::Colouring& phi, int n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> colour(un * un, -1);
    for (std::size_t i = 0; i < phi.host().edges().size(); ++i) {
        const rrg::Edge e = phi.host().edges()[i];
        const int c = static_cast<int>(*phi.assignment()[i]);
        colour[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] = c;
        colour[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] = c;
    }
    int count = 0;
    for (std::size_t x = 0; x < un; ++x)
        for (std::size_t y = x + 1; y < un; ++y) {
            bool red = false, blue = false;
            for (std::size_t w = 0; w < un; ++w) {
                const int a = colour[x * un + w];
                if (a < 0 || a != colour[y * un + w]) continue;
                if (a == 0) red = true;
                if (a == 1) blue = true;
            }
            count += red && blue;
        }
    return count;
}

} // namespace oracle
