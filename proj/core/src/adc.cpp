#include "adclat/adc.hpp"

#include <algorithm>

namespace adclat {

std::string Family::display(const Field& F) const {
    switch (kind) {
        case FamilyKind::NonAdc:
            return "non-ADC";
        case FamilyKind::NMax:
            return "N_" + std::to_string(nu) + "^" + std::to_string(n) + "(" + F.class_label(c) + ")";
        case FamilyKind::MBinaryDelta:
            return "M_" + std::to_string(nu) + "^2(Delta)";
        case FamilyKind::H13:
            return "H_{1," + std::to_string(h) + "}^3(" + F.class_label(c) + ")";
        case FamilyKind::MNuR3:
            return "M_{" + std::to_string(nu) + "," + rat_str(r) + "}^3(" + F.class_label(c) + ")";
    }
    return "?";
}

long long maximal_volume_order(const Field& F, const SpaceClass& S) {
    int e = F.e();
    int k = F.class_ord(S.c);
    switch (S.n) {
        case 1:
            return k;
        case 2:
            if (S.c == F.class_one()) return -2 * e;
            if (k == 1) return 1;
            if (S.c == F.class_delta()) return S.nu == 1 ? -2 * e : 2 - 2 * e;
            // dyadic c = delta with odd defect < 2e
            return 1 - F.defect(F.rep(S.c));
        case 3:
            if (S.nu == 1) return -2 * e + k;
            return k == 0 ? 2 - 2 * e : 1 - 2 * e;
        default:
            throw SchemaError("maximal_volume_order supports rank 1..3");
    }
}

bool is_maximal(const Lattice& L) {
    if (!is_integral(L)) throw SchemaError("is_maximal needs an integral lattice");
    SpaceClass S = space_of(L);
    return volume_order(L) == maximal_volume_order(*L.F, S);
}

namespace {

bool even_between(long long x, long long lo, long long hi) {
    return x % 2 == 0 && lo <= x && x <= hi;
}

Family family_nmax(const SpaceClass& S) {
    Family f;
    f.kind = FamilyKind::NMax;
    f.n = S.n;
    f.nu = S.nu;
    f.c = S.c;
    return f;
}

} // namespace

AdcVerdict adc_classify(const Lattice& L) {
    const Field& F = *L.F;
    if (L.m >= 4)
        throw SchemaError(
            "rank >= 4 not classified here: a lattice of rank >= 4 is ADC exactly when it is "
            "universal (delegated to universality criteria)");
    if (!is_integral(L)) throw SchemaError("adc_classify needs an integral lattice");

    AdcVerdict v;
    v.bong = good_bong(L);
    v.space = space_classify(F, v.bong.a);
    long long maxvol = maximal_volume_order(F, v.space);
    v.maximal = v.bong.volume_ord == maxvol;
    int e = F.e();
    int k = F.class_ord(v.space.c);

    if (L.m == 1) {
        v.adc = v.maximal;
        v.family = v.adc ? family_nmax(v.space) : Family{};
        v.family.n = 1;
        v.universal = false;
        v.primitive = v.bong.norm_ord == 0;
        return v;
    }

    if (L.m == 2) {
        if (v.maximal) {
            v.adc = true;
            v.family = family_nmax(v.space);
        } else if (F.dyadic() && v.space.c == F.class_delta() && v.space.n == 2 &&
                   v.bong.R[0] == v.space.nu - 1 && v.bong.R[1] == v.space.nu + 1 - 2 * e) {
            v.adc = true;
            v.family.kind = FamilyKind::MBinaryDelta;
            v.family.n = 2;
            v.family.nu = v.space.nu;
            v.family.c = v.space.c;
        } else {
            v.family.kind = FamilyKind::NonAdc;
            v.family.n = 2;
        }
        v.universal = v.adc && v.space.isotropic;
        v.primitive = v.bong.norm_ord == 0;
        return v;
    }

    // rank 3
    const long long R1 = v.bong.R[0], R2 = v.bong.R[1], R3 = v.bong.R[2];
    const Rat a1 = v.bong.alpha[0];
    v.family.kind = FamilyKind::NonAdc;
    v.family.n = 3;

    if (!F.dyadic()) {
        if (v.maximal) {
            v.adc = true;
            v.family = family_nmax(v.space);
        } else if (v.space.isotropic) {
            auto comps = jordan_split(L);
            if (comps.size() == 2 && comps[0].scale == 0 && comps[0].diag.size() == 2 &&
                comps[1].scale >= 2 &&
                F.class_index(F.neg(F.mul(comps[0].diag[0], comps[0].diag[1]))) == F.class_one()) {
                long long s = comps[1].scale;
                v.adc = true;
                v.family.kind = FamilyKind::H13;
                v.family.nu = 1;
                v.family.h = s / 2;
                v.family.c = F.class_index(F.mul_pi_pow(comps[1].diag[0], -2 * (s / 2)));
                v.family.k = static_cast<int>(s % 2);
            }
        }
    } else if (R1 == 0) {
        if (a1 == Rat(0)) {
            if (R2 != -2 * e) throw InternalError("alpha_1 = 0 forces R_2 - R_1 = -2e");
            if (v.space.isotropic) {
                // H-family: h = 0 is the maximal lattice; for h >= 1 the class
                // of -a_1 a_2 is an invariant and must be a square.
                if (R3 == k) {
                    v.adc = true;
                    v.family = family_nmax(v.space);
                } else if (F.is_square(F.neg(F.mul(v.bong.a[0], v.bong.a[1])))) {
                    v.adc = true;
                    v.family.kind = FamilyKind::H13;
                    v.family.nu = 1;
                    v.family.h = (R3 - k) / 2;
                    v.family.c = v.space.c;
                }
            } else if (R3 == k) {
                v.adc = true; // realizable only for odd c; equals N_2^3(c)
            }
        } else if (a1 == Rat(1) && even_between(R2, 2 - 2 * e, 0) && R3 == k) {
            v.adc = true;
        } else if (!v.space.isotropic && R2 == 1 && R3 == k + 1) {
            v.adc = true;
        }
        if (v.adc && v.family.kind == FamilyKind::NonAdc) {
            if (v.maximal) {
                v.family = family_nmax(v.space);
            } else {
                v.family.kind = FamilyKind::MNuR3;
                v.family.nu = v.space.nu;
                v.family.c = v.space.c;
                v.family.r = Rat(-R2, 2);
            }
        }
    }

    v.family.k = k;
    v.universal = v.adc && v.space.isotropic;
    v.primitive = v.bong.norm_ord == 0;
    if (v.adc && !v.primitive) throw InternalError("ternary ADC lattice must be primitive");
    return v;
}

// --- canonical constructions ---------------------------------------------------

namespace {

Lattice hyperbolic_plane(const Field& F) {
    Lattice H(F, 2);
    Elt half = F.div(F.one(), F.from_int(2));
    H.at(0, 1) = half;
    H.at(1, 0) = half;
    return H;
}

Lattice nmax_binary(const Field& F, int nu, int c) {
    if (c == F.class_one()) {
        if (nu != 1) throw SchemaError("(2,2,1) is not a space class");
        return hyperbolic_plane(F);
    }
    Elt crep = F.rep(c);
    if (!F.dyadic()) {
        if (F.class_ord(c) == 1)
            return diag_lattice(F, nu == 1 ? std::vector<Elt>{F.one(), F.neg(crep)}
                                           : std::vector<Elt>{F.delta(), F.neg(F.mul(F.delta(), crep))});
        // c = Delta
        return diag_lattice(F, nu == 1 ? std::vector<Elt>{F.one(), F.neg(F.delta())}
                                       : std::vector<Elt>{F.pi(), F.neg(F.mul(F.delta(), F.pi()))});
    }
    if (F.class_ord(c) == 1) {
        Elt s = nu == 1 ? F.one() : F.delta();
        return diag_lattice(F, {s, F.neg(F.mul(s, crep))});
    }
    if (c == F.class_delta()) {
        // 2^{-1} A(2, 2 rho), scaled by pi for nu = 2
        Lattice N(F, 2);
        Elt half = F.div(F.one(), F.from_int(2));
        N.at(0, 0) = F.one();
        N.at(0, 1) = half;
        N.at(1, 0) = half;
        N.at(1, 1) = F.rho();
        return nu == 1 ? N : scale_lattice_pi(N, 1);
    }
    // c = delta with odd defect d < 2e: (delta^#)^{nu-1} pi^{-l} A(pi^l, -(delta-1) pi^{-l})
    int d = F.defect(crep);
    long long l = (d - 1) / 2;
    Lattice N(F, 2);
    N.at(0, 0) = F.one();
    N.at(0, 1) = F.mul_pi_pow(F.one(), -l);
    N.at(1, 0) = N.at(0, 1);
    N.at(1, 1) = F.mul_pi_pow(F.neg(F.sub(crep, F.one())), -2 * l);
    return nu == 1 ? N : scale_lattice(N, F.sharp(crep));
}

Lattice nmax_ternary(const Field& F, int nu, int c) {
    Elt crep = F.rep(c);
    if (nu == 1) return orthogonal_sum(hyperbolic_plane(F), diag_lattice(F, {crep}));
    if (!F.dyadic()) {
        if (F.class_ord(c) == 0)
            return diag_lattice(F, {F.pi(), F.neg(F.mul(F.delta(), F.pi())), F.mul(F.delta(), crep)});
        return diag_lattice(F, {F.one(), F.neg(F.delta()), F.mul(F.delta(), crep)});
    }
    if (F.class_ord(c) == 0) {
        // 2^{-1} pi A(2, 2 rho) ⊥ <Delta c>
        Lattice B = scale_lattice_pi(nmax_binary(F, 1, F.class_delta()), 1);
        return orthogonal_sum(B, diag_lattice(F, {F.mul(F.delta(), crep)}));
    }
    Lattice B = nmax_binary(F, 1, F.class_delta());
    return orthogonal_sum(B, diag_lattice(F, {F.mul(F.delta(), crep)}));
}

} // namespace

Lattice construct_family(const Field& F, const Family& fam) {
    switch (fam.kind) {
        case FamilyKind::NMax:
            if (fam.n == 1) {
                if (fam.nu != 1) throw SchemaError("(1,2) is not a space class");
                return diag_lattice(F, {F.rep(fam.c)});
            }
            if (fam.n == 2) return nmax_binary(F, fam.nu, fam.c);
            if (fam.n == 3) return nmax_ternary(F, fam.nu, fam.c);
            throw SchemaError("maximal families have rank 1..3");
        case FamilyKind::MBinaryDelta: {
            if (!F.dyadic()) throw SchemaError("M_nu^2(Delta) exists over dyadic fields only");
            if (fam.nu != 1 && fam.nu != 2) throw SchemaError("nu must be 1 or 2");
            // 2^{-1} pi^nu A(2 pi^{-1}, 2 rho pi)
            Lattice M(F, 2);
            Elt half = F.div(F.one(), F.from_int(2));
            M.at(0, 0) = F.mul_pi_pow(F.one(), -1);
            M.at(0, 1) = half;
            M.at(1, 0) = half;
            M.at(1, 1) = F.mul_pi_pow(F.rho(), 1);
            return scale_lattice_pi(M, fam.nu);
        }
        case FamilyKind::H13: {
            if (fam.h < 0) throw SchemaError("H_{1,h} needs h >= 0");
            Elt tail = F.mul_pi_pow(F.rep(fam.c), 2 * fam.h);
            return orthogonal_sum(hyperbolic_plane(F), diag_lattice(F, {tail}));
        }
        case FamilyKind::MNuR3: {
            if (!F.dyadic()) throw SchemaError("M_{nu,r}^3 families exist over dyadic fields only");
            int e = F.e();
            bool c_unit = F.class_is_unit(fam.c);
            if (fam.r == Rat(e)) {
                if (fam.nu == 2 && c_unit) throw SchemaError("M_{2,e}^3(c) is not defined for unit c");
                return nmax_ternary(F, fam.nu, fam.c);
            }
            if (fam.r == Rat(e - 1) && fam.nu == 2 && c_unit) return nmax_ternary(F, 2, fam.c);
            if (fam.r == Rat(-1, 2)) {
                if (fam.nu == 1) throw SchemaError("M_{1,-1/2}^3(c) is not defined");
            } else {
                long long rr = boost::rational_cast<long long>(fam.r);
                if (fam.r.denominator() != 1 || rr < 0 || rr > e - 1)
                    throw SchemaError("M_{nu,r}^3 needs r in {-1/2, 0, ..., e}");
            }
            // omega with d(omega) = 2r + 1 (omega = pi for r = -1/2)
            Elt omega;
            if (fam.r == Rat(-1, 2)) {
                omega = F.pi();
            } else {
                long long rr = boost::rational_cast<long long>(fam.r);
                bool found = false;
                for (const Elt& u : F.unit_reps())
                    if (F.defect(u) == 2 * rr + 1) {
                        omega = u;
                        found = true;
                        break;
                    }
                if (!found) throw InternalError("no unit with requested defect");
            }
            Elt crep = F.rep(fam.c);
            int sign = F.hilbert(omega, crep);
            int nu_p = (sign == 1) ? fam.nu : 3 - fam.nu;
            Lattice B = nmax_binary(F, nu_p, F.class_index(omega));
            return orthogonal_sum(B, diag_lattice(F, {F.mul(omega, crep)}));
        }
        default:
            throw SchemaError("cannot construct the non-ADC family");
    }
}

bool is_primitive_adc(const AdcVerdict& v) {
    if (!v.adc) throw SchemaError("is_primitive_adc needs an ADC verdict");
    bool prim = v.bong.norm_ord == 0;
    if (v.family.n == 3 && !prim) throw InternalError("ternary ADC must be primitive");
    return prim;
}

bool scaling_admissible(const Lattice& L) {
    const Field& F = *L.F;
    if (L.m != 2) throw SchemaError("scaling_admissible needs rank 2");
    if (norm_order(L) != 0) return false;
    SpaceClass S = space_of(L);
    if (!(S.n == 2 && S.nu == 1 && S.c == F.class_delta())) return false;
    long long vol = volume_order(L);
    if (!F.dyadic()) return vol == 0;
    return vol == -2 * F.e() || vol == 2 - 2 * F.e();
}

std::vector<EnumeratedLattice> enumerate_adc(const Field& F, int rank, long long h_max) {
    std::vector<EnumeratedLattice> out;
    auto push = [&](const Family& fam) {
        Lattice L = construct_family(F, fam);
        out.push_back({L, adc_classify(L)});
    };
    if (rank == 1) {
        for (int c = 0; c < F.class_count(); ++c) {
            Family f;
            f.kind = FamilyKind::NMax;
            f.n = 1;
            f.nu = 1;
            f.c = c;
            push(f);
        }
        return out;
    }
    if (rank == 2) {
        for (int c = 0; c < F.class_count(); ++c)
            for (int nu = 1; nu <= 2; ++nu) {
                if (c == F.class_one() && nu == 2) continue;
                if (!F.dyadic() && F.class_is_unit(c) && c != F.class_one() && c != F.class_delta())
                    continue; // no such unit classes non-dyadically
                Family f;
                f.kind = FamilyKind::NMax;
                f.n = 2;
                f.nu = nu;
                f.c = c;
                push(f);
            }
        if (F.dyadic())
            for (int nu = 1; nu <= 2; ++nu) {
                Family f;
                f.kind = FamilyKind::MBinaryDelta;
                f.n = 2;
                f.nu = nu;
                f.c = F.class_delta();
                push(f);
            }
        return out;
    }
    if (rank != 3) throw SchemaError("enumerate_adc supports rank 1..3");

    if (!F.dyadic()) {
        for (int c = 0; c < F.class_count(); ++c)
            for (int nu = 1; nu <= 2; ++nu) {
                Family f;
                f.kind = FamilyKind::NMax;
                f.n = 3;
                f.nu = nu;
                f.c = c;
                push(f);
            }
    } else {
        // M_{nu,r}^3(c) over the defined parameter range (r = e gives the
        // nu = 1 maximal lattices, r = e-1 with unit c the nu = 2 ones)
        for (int c = 0; c < F.class_count(); ++c) {
            bool c_unit = F.class_is_unit(c);
            for (int nu = 1; nu <= 2; ++nu) {
                std::vector<Rat> rs;
                rs.push_back(Rat(-1, 2));
                for (int r = 0; r <= F.e(); ++r) rs.push_back(Rat(r));
                for (const Rat& r : rs) {
                    if (r == Rat(-1, 2) && nu == 1) continue;
                    if (r == Rat(F.e()) && nu == 2 && c_unit) continue;
                    Family f;
                    f.kind = FamilyKind::MNuR3;
                    f.n = 3;
                    f.nu = nu;
                    f.c = c;
                    f.r = r;
                    push(f);
                }
            }
        }
    }
    for (long long h = 1; h <= h_max; ++h)
        for (int c = 0; c < F.class_count(); ++c) {
            Family f;
            f.kind = FamilyKind::H13;
            f.n = 3;
            f.nu = 1;
            f.c = c;
            f.h = h;
            push(f);
        }
    return out;
}

CountReport count_adc(const Field& F, int rank) {
    CountReport r;
    r.rank = rank;
    long long qe = ipow(F.q(), F.e());
    int e = F.e();
    if (rank == 1) {
        r.finite_total = 4 * qe;
        r.maximal_count = 4 * qe;
        r.formula = "B(1) = 4 q^e";
        return r;
    }
    if (rank == 2) {
        r.maximal_count = 8 * qe - 1;
        r.nonmaximal_finite = e >= 1 ? 2 : 0;
        r.finite_total = r.maximal_count + r.nonmaximal_finite;
        r.formula = e >= 1 ? "B(2) = 8 q^e - 1 + 2" : "B(2) = 8 q^e - 1 + 0";
        return r;
    }
    if (rank != 3) throw SchemaError("count_adc supports rank 1..3");
    r.infinite = true;
    r.isotropic_maximal = 4 * qe;
    r.isotropic_infinite = true;
    r.anisotropic_total = e >= 1 ? (4 * e + 6) * qe : 4 * qe;
    r.maximal_count = 8 * qe;
    r.finite_total = r.anisotropic_total + r.isotropic_maximal +
                     (F.dyadic() ? 4LL * e * qe : 0); // finite isotropic non-maximal families
    r.formula = e >= 1 ? "B(3) = [4 q^e + inf] isotropic, [4 q^e + (4e+2) q^e] anisotropic"
                       : "B(3) = [4 q^e + inf] isotropic, [4 q^e + 0] anisotropic";
    return r;
}

} // namespace adclat
