#pragma once

#include <map>

#include "adclat/adc.hpp"

namespace adclat {

// Representation density of an ADC lattice: the Haar measure of the set of
// integers represented, as an exact rational.
struct DensityReport {
    Rat delta;
    std::map<int, int> v; // class index -> v_c in {0, 1}; kDefInf encodes infinity
    std::string path;     // "closed-form"
};

// Closed-form density from the space class, plus the v_c table derived from
// space-level representation (ADC lattices represent exactly what their
// space represents inside O_F).
DensityReport rep_density(const Lattice& M);
DensityReport rep_density(const Field& F, const AdcVerdict& v);

// delta = sum over c in V of 1 / (|U| q^{v_c - 1} (q + 1)), with q^{-inf} = 0.
Rat rep_density_from_vc(const Field& F, const std::map<int, int>& vtable);

} // namespace adclat
