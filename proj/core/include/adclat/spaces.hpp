#pragma once

#include <vector>

#include "adclat/field.hpp"
#include "adclat/lattice.hpp"

namespace adclat {

// A quadratic space of dimension 1..3 named by (n, nu, c): nu = 1 picks the
// space split by hyperbolic planes, nu = 2 its twin with the same determinant.
// Conventions: (n, nu) != (1, 2) and (n, nu, c) != (2, 2, 1).
struct SpaceClass {
    int n = 0;
    int nu = 1;
    int c = 0; // class index into V
    bool isotropic = false;
};

bool is_isotropic(const Field& F, const std::vector<Elt>& diag);
SpaceClass space_classify(const Field& F, const std::vector<Elt>& diag);
SpaceClass space_of(const Lattice& L);

// Canonical diagonal of W_nu^n(c), rebuilt from the defining table.
std::vector<Elt> space_canonical_diag(const Field& F, const SpaceClass& S);

// Does the space represent the square class of a?
bool space_represents(const Field& F, const std::vector<Elt>& diag, const Elt& a);
bool space_represents(const Field& F, const SpaceClass& S, const Elt& a);
bool space_represents_class(const Field& F, const SpaceClass& S, int cls);

bool space_equal(const SpaceClass& a, const SpaceClass& b);

} // namespace adclat
