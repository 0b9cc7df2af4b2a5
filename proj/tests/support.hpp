#pragma once

// Shared generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "dcl/gadget.hpp"

namespace dcl::testkit {

/// Random valid gadget with constant forms: cycle length in [2, max_cycle],
/// up to max_spokes spokes of length 1..max_spoke at distinct positions.
inline GadgetTemplate random_gadget(std::mt19937_64& rng, Int max_cycle = 40, std::size_t max_spokes = 5,
                                    Int max_spoke = 8) {
    Int L = std::uniform_int_distribution<Int>(2, max_cycle)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(max_spokes, L - 1))(rng);
    std::vector<Int> positions;
    for (Int p = 1; p < L; ++p) positions.push_back(p);
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(k);
    std::sort(positions.begin(), positions.end());
    GadgetTemplate g{AffineForm::constant_form(L), {}};
    for (Int a : positions) {
        Int len = std::uniform_int_distribution<Int>(1, max_spoke)(rng);
        g.spokes.push_back({AffineForm::constant_form(len), AffineForm::constant_form(a)});
    }
    return g;
}

inline std::vector<std::uint64_t> evaluated_spectrum(const GadgetTemplate& g, Int t, Int i) {
    std::vector<std::uint64_t> out;
    for (const auto& e : derive_spectrum(g)) out.push_back(static_cast<std::uint64_t>(e.form.eval(t, i)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dcl::testkit
