#include "adclat/spaces.hpp"

namespace adclat {

namespace {
Elt diag_det(const Field& F, const std::vector<Elt>& diag) {
    Elt d = F.one();
    for (const Elt& x : diag) {
        if (F.is_zero(x)) throw SchemaError("degenerate diagonal");
        d = F.mul(d, x);
    }
    return d;
}
} // namespace

bool is_isotropic(const Field& F, const std::vector<Elt>& diag) {
    switch (diag.size()) {
        case 1:
            if (F.is_zero(diag[0])) throw SchemaError("degenerate diagonal");
            return false;
        case 2:
            return F.is_square(F.neg(F.mul(diag[0], diag[1])));
        case 3: {
            // [a,b] represents -c iff (-ab, -ac) = 1
            Elt mab = F.neg(F.mul(diag[0], diag[1]));
            Elt mac = F.neg(F.mul(diag[0], diag[2]));
            return F.hilbert(mab, mac) == 1;
        }
        default:
            throw SchemaError("is_isotropic supports dimension 1..3");
    }
}

SpaceClass space_classify(const Field& F, const std::vector<Elt>& diag) {
    int n = static_cast<int>(diag.size());
    if (n < 1 || n > 3) throw SchemaError("space_classify supports dimension 1..3");
    SpaceClass S;
    S.n = n;
    if (n == 1) {
        S.nu = 1;
        S.c = F.class_index(diag[0]);
        S.isotropic = false;
        return S;
    }
    Elt det = diag_det(F, diag);
    S.c = F.class_index(F.neg(det));
    if (n == 2) {
        if (S.c == F.class_one()) {
            S.nu = 1;
            S.isotropic = true;
            return S;
        }
        // nu = 1 exactly when the space represents 1
        Elt mab = F.neg(F.mul(diag[0], diag[1]));
        S.nu = F.hilbert(mab, diag[0]) == 1 ? 1 : 2;
        S.isotropic = false;
        return S;
    }
    S.isotropic = is_isotropic(F, diag);
    S.nu = S.isotropic ? 1 : 2;
    return S;
}

SpaceClass space_of(const Lattice& L) {
    BongInvariants bong = good_bong(L);
    return space_classify(*L.F, bong.a);
}

std::vector<Elt> space_canonical_diag(const Field& F, const SpaceClass& S) {
    const Elt c = F.rep(S.c);
    const Elt one = F.one();
    if (S.n == 1) return {c};
    if (S.n == 2) {
        if (S.nu == 1) return {one, F.neg(c)};
        if (S.c == F.class_one()) throw SchemaError("(2, 2, 1) is not a space class");
        if (S.c == F.class_delta()) return {F.pi(), F.neg(F.mul(F.delta(), F.pi()))};
        if (F.class_ord(S.c) == 1) return {F.delta(), F.neg(F.mul(F.delta(), c))};
        Elt cs = F.sharp(c);
        return {cs, F.neg(F.mul(cs, c))};
    }
    if (S.nu == 1) return {one, F.neg(one), c};
    if (F.class_ord(S.c) == 0) return {F.pi(), F.neg(F.mul(F.delta(), F.pi())), F.mul(F.delta(), c)};
    return {one, F.neg(F.delta()), F.mul(F.delta(), c)};
}

bool space_represents(const Field& F, const std::vector<Elt>& diag, const Elt& a) {
    if (F.is_zero(a)) throw SchemaError("space_represents needs a != 0");
    switch (diag.size()) {
        case 1:
            return F.is_square(F.div(a, diag[0]));
        case 2: {
            Elt mxy = F.neg(F.mul(diag[0], diag[1]));
            return F.hilbert(mxy, F.mul(diag[0], a)) == 1;
        }
        case 3: {
            if (is_isotropic(F, diag)) return true;
            // anisotropic ternary represents everything except -det
            Elt det = diag_det(F, diag);
            return !F.is_square(F.neg(F.mul(det, F.inv(a))));
        }
        default:
            throw SchemaError("space_represents supports dimension 1..3");
    }
}

bool space_represents(const Field& F, const SpaceClass& S, const Elt& a) {
    return space_represents(F, space_canonical_diag(F, S), a);
}

bool space_represents_class(const Field& F, const SpaceClass& S, int cls) {
    if (S.n == 1) return cls == S.c;
    if (S.n == 3) return S.isotropic || cls != S.c;
    return space_represents(F, S, F.rep(cls));
}

bool space_equal(const SpaceClass& a, const SpaceClass& b) {
    return a.n == b.n && a.nu == b.nu && a.c == b.c;
}

} // namespace adclat
