#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adclat/adc.hpp"

namespace adclat {

enum class Theta { UnitsTimesSquares, FullGroup };

inline const char* theta_name(Theta t) {
    return t == Theta::UnitsTimesSquares ? "units" : "full";
}

// Integral spinor norm group and codeterminant set of a ternary ADC lattice,
// read off the classified family.
struct SpinorReport {
    Theta theta = Theta::FullGroup;
    bool co_one = false;
    bool co_delta = false;
    Family family;
};

Theta spinor_norm_group(const Field& F, const AdcVerdict& v);
SpinorReport spinor_report(const Field& F, const AdcVerdict& v);
SpinorReport spinor_report(const Lattice& M);

// Independent recomputation of Delta-membership in co(M) from the raw BONG:
// for R_1 < R_3 the defect-sum criterion, for R_1 = R_3 the R_2 criterion.
bool co_delta_raw(const Field& F, const AdcVerdict& v, Theta theta);

// --- global layer over F = Q ---------------------------------------------------

// A rational square class as (sign, squarefree positive integer).
struct QClass {
    int sign = 1;
    long long n = 1;
};

struct CoGlobalReport {
    bool locally_adc = false;
    std::optional<long long> failing_prime;
    bool empty_by_anisotropy = false; // some finite completion anisotropic
    std::vector<QClass> classes;
    std::vector<std::string> notes;
};

// co(M) for a ternary lattice over Z: the square classes a != 1 passing the
// archimedean sign condition and a_p in co(M_p) at every prime.
CoGlobalReport co_global_q(const RatMat& gram);

struct IndefiniteVerdict {
    bool globally_adc = false;
    std::optional<long long> failing_prime;
};

// Indefinite ternary lattices over Z: locally ADC everywhere implies globally
// ADC (the class number of Q is odd).
IndefiniteVerdict indefinite_ternary_adc_q(const RatMat& gram);

// signature (#positive, #negative) of a nondegenerate rational symmetric matrix
std::pair<int, int> signature(const RatMat& gram);

} // namespace adclat
