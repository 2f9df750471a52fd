#include "adclat/spinor.hpp"

#include <algorithm>

#include "adclat/intutil.hpp"

namespace adclat {

Theta spinor_norm_group(const Field& F, const AdcVerdict& v) {
    if (!v.adc || v.family.n != 3) throw SchemaError("spinor_norm_group needs a ternary ADC lattice");
    switch (v.family.kind) {
        case FamilyKind::NMax:
            return (v.family.nu == 1 && F.class_is_unit(v.family.c)) ? Theta::UnitsTimesSquares
                                                                     : Theta::FullGroup;
        case FamilyKind::H13:
            return F.class_is_unit(v.family.c) ? Theta::UnitsTimesSquares : Theta::FullGroup;
        case FamilyKind::MNuR3:
            return Theta::FullGroup;
        default:
            throw InternalError("unexpected ternary family");
    }
}

SpinorReport spinor_report(const Field& F, const AdcVerdict& v) {
    SpinorReport r;
    r.family = v.family;
    r.theta = spinor_norm_group(F, v);
    r.co_one = v.space.isotropic;
    if (!F.dyadic())
        r.co_delta = r.theta == Theta::UnitsTimesSquares;
    else
        r.co_delta = v.family.kind == FamilyKind::H13 && F.class_is_unit(v.family.c);
    return r;
}

SpinorReport spinor_report(const Lattice& M) { return spinor_report(*M.F, adc_classify(M)); }

bool co_delta_raw(const Field& F, const AdcVerdict& v, Theta theta) {
    // theta(O+(M)) must land inside the norm group of F(sqrt(Delta)); the
    // full group never does.
    if (theta == Theta::FullGroup) return false;
    if (!F.dyadic()) return true; // a = Delta always lies in co then
    const auto& a = v.bong.a;
    long long R1 = v.bong.R[0], R2 = v.bong.R[1], R3 = v.bong.R[2];
    if (R1 < R3) {
        const Elt D = F.delta();
        int d1 = F.defect(F.neg(F.mul(F.mul(a[0], a[1]), D)));
        int d2 = F.defect(F.neg(F.mul(F.mul(a[1], a[2]), D)));
        int dD = F.defect(D);
        long long sum = 0;
        for (int d : {d1, d2, dD}) sum += d >= kDefInf ? 8LL * F.e() + 8 : d;
        return sum > 4 * F.e();
    }
    return R2 - R1 == 2 * F.e();
}

// --- global layer ----------------------------------------------------------------

namespace {

std::vector<Rat> rat_diagonalize(const RatMat& G) {
    int n = G.n;
    std::vector<Rat> a(G.a);
    auto at = [&](int i, int j) -> Rat& { return a[i * n + j]; };
    std::vector<int> active;
    for (int i = 0; i < n; ++i) active.push_back(i);
    std::vector<Rat> diag;
    while (!active.empty()) {
        int pvt = -1;
        for (int i : active)
            if (at(i, i) != Rat(0)) {
                pvt = i;
                break;
            }
        if (pvt < 0) {
            int bi = -1, bj = -1;
            for (int i : active) {
                for (int j : active)
                    if (i != j && at(i, j) != Rat(0)) {
                        bi = i;
                        bj = j;
                        break;
                    }
                if (bi >= 0) break;
            }
            if (bi < 0) throw SchemaError("degenerate Gram matrix");
            for (int k : active) at(bi, k) += at(bj, k);
            for (int k : active) at(k, bi) = at(bi, k);
            at(bi, bi) += at(bi, bj);
            pvt = bi;
        }
        Rat piv = at(pvt, pvt);
        std::vector<int> rest;
        for (int i : active)
            if (i != pvt) rest.push_back(i);
        for (int i : rest) {
            Rat t = -at(i, pvt) / piv;
            if (t != Rat(0)) {
                for (int k : rest) at(i, k) += t * at(pvt, k);
                at(pvt, i) = Rat(0);
                at(i, pvt) = Rat(0);
                for (int k : rest)
                    if (k != i) at(k, i) = at(i, k);
            }
        }
        diag.push_back(piv);
        active = rest;
    }
    return diag;
}

void check_z_integral(const RatMat& g) {
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const Rat& x = g.at(i, j);
            long long den = x.denominator();
            if (i == j ? den != 1 : (den != 1 && den != 2))
                throw SchemaError("lattice over Z needs integer diagonal and half-integer off-diagonal");
        }
}

long long det_times_4(const RatMat& g) {
    Rat d = g.det() * Rat(4);
    if (d.denominator() != 1) throw InternalError("4 det not integral");
    return d.numerator();
}

} // namespace

std::pair<int, int> signature(const RatMat& gram) {
    int pos = 0, neg = 0;
    for (const Rat& d : rat_diagonalize(gram)) (d > Rat(0) ? pos : neg)++;
    return {pos, neg};
}

CoGlobalReport co_global_q(const RatMat& gram) {
    if (gram.n != 3) throw SchemaError("co_global_q needs a ternary lattice");
    check_z_integral(gram);
    CoGlobalReport rep;
    rep.notes.push_back("dyadic scale condition read as ord s(M_p) in [-e, 0]");

    auto [pos, neg] = signature(gram);
    bool indefinite = pos > 0 && neg > 0;

    long long d4 = det_times_4(gram);
    std::vector<long long> primes{2};
    for (auto [p, k] : factor_primes(d4))
        if (p != 2) primes.push_back(p);

    struct LocalCo {
        long long p;
        bool one, delta;
        Field F;
        bool isotropic;
    };
    std::vector<LocalCo> locals;
    for (long long p : primes) {
        Field F = Field::qp(p);
        Lattice L = to_local(F, gram);
        AdcVerdict v = adc_classify(L);
        if (!v.adc) {
            rep.failing_prime = p;
            return rep;
        }
        SpinorReport s = spinor_report(F, v);
        locals.push_back({p, s.co_one, s.co_delta, std::move(F), v.space.isotropic});
    }
    rep.locally_adc = true;
    for (const auto& lc : locals)
        if (!lc.isotropic) rep.empty_by_anisotropy = true;
    if (rep.empty_by_anisotropy) return rep;

    // candidates: sign forced by the archimedean condition, support inside
    // the primes of 2 det
    int sign = indefinite ? 1 : -1;
    int np = static_cast<int>(primes.size());
    for (int mask = 0; mask < (1 << np); ++mask) {
        long long n = 1;
        for (int i = 0; i < np; ++i)
            if (mask & (1 << i)) n *= primes[i];
        if (sign == 1 && n == 1) continue; // the trivial class is excluded
        bool ok = true;
        for (const auto& lc : locals) {
            const Field& F = lc.F;
            Elt a = F.from_int(sign * n);
            int cls = F.class_index(a);
            bool member = (cls == F.class_one()) ? lc.one
                          : (cls == F.class_delta()) ? lc.delta
                                                     : false;
            if (!member) {
                ok = false;
                break;
            }
        }
        if (ok) rep.classes.push_back({sign, n});
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const QClass& a, const QClass& b) { return a.n < b.n; });
    return rep;
}

IndefiniteVerdict indefinite_ternary_adc_q(const RatMat& gram) {
    if (gram.n != 3) throw SchemaError("indefinite_ternary_adc_q needs a ternary lattice");
    check_z_integral(gram);
    auto [pos, neg] = signature(gram);
    if (pos == 0 || neg == 0) throw SchemaError("definite input: the indefinite criterion does not apply");
    long long d4 = det_times_4(gram);
    std::vector<long long> primes{2};
    for (auto [p, k] : factor_primes(d4))
        if (p != 2) primes.push_back(p);
    for (long long p : primes) {
        Field F = Field::qp(p);
        Lattice L = to_local(F, gram);
        try {
            if (!adc_classify(L).adc) return {false, p};
        } catch (const SchemaError&) {
            return {false, p}; // e.g. non-integral at p
        }
    }
    return {true, std::nullopt};
}

} // namespace adclat
