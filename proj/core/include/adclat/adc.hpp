#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adclat/field.hpp"
#include "adclat/lattice.hpp"
#include "adclat/spaces.hpp"

namespace adclat {

enum class FamilyKind {
    NMax,         // maximal N_nu^n(c)
    MBinaryDelta, // M_nu^2(Delta), dyadic
    H13,          // H_{1,h}^3(c) = H ⊥ <c pi^{2h}>, h >= 1
    MNuR3,        // M_{nu,r}^3(c), dyadic, not maximal
    NonAdc,
};

// Canonical family tag with parameters (nu, c, h, r, k).
struct Family {
    FamilyKind kind = FamilyKind::NonAdc;
    int n = 0;        // rank
    int nu = 1;
    int c = 0;        // class index
    long long h = 0;  // H-family exponent
    Rat r = Rat(0);   // M_{nu,r} parameter (may be -1/2)
    int k = 0;        // ord(c)
    std::string display(const Field& F) const;
};

struct AdcVerdict {
    bool adc = false;
    bool maximal = false;
    bool universal = false;
    bool primitive = false;
    Family family;
    SpaceClass space;
    BongInvariants bong;
};

// Volume order of the maximal lattice N_nu^n(c) on the given space.
long long maximal_volume_order(const Field& F, const SpaceClass& S);

bool is_maximal(const Lattice& L);
AdcVerdict adc_classify(const Lattice& L);
Lattice construct_family(const Field& F, const Family& fam);

// Primitivity / scaling conditions for ADC lattices.
bool is_primitive_adc(const AdcVerdict& v);
bool scaling_admissible(const Lattice& L);

struct EnumeratedLattice {
    Lattice lattice;
    AdcVerdict verdict;
};
// All ADC lattices of the given rank up to isometry; the infinite ternary
// isotropic family H_{1,h} is truncated at h <= h_max.
std::vector<EnumeratedLattice> enumerate_adc(const Field& F, int rank, long long h_max = 4);

struct CountReport {
    int rank = 0;
    long long finite_total = 0;  // number of enumerable classes (H truncated out)
    bool infinite = false;
    long long maximal_count = 0;
    long long nonmaximal_finite = 0;
    // ternary refinement
    long long isotropic_maximal = 0;
    bool isotropic_infinite = false;
    long long anisotropic_total = 0;
    std::string formula;
};
CountReport count_adc(const Field& F, int rank);

} // namespace adclat
