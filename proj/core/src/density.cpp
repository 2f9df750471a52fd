#include "adclat/density.hpp"

namespace adclat {

Rat rep_density_from_vc(const Field& F, const std::map<int, int>& vtable) {
    Rat sum(0);
    long long q = F.q();
    Rat u(2 * ipow(q, F.e()));
    for (const auto& [cls, vc] : vtable) {
        (void)cls;
        if (vc >= kDefInf) continue;
        sum += Rat(1) / (u * pow_rat(q, vc - 1) * Rat(q + 1));
    }
    return sum;
}

DensityReport rep_density(const Field& F, const AdcVerdict& v) {
    if (!v.adc) throw SchemaError("rep_density is defined for ADC lattices");
    DensityReport rep;
    rep.path = "closed-form";
    for (int cls = 0; cls < F.class_count(); ++cls)
        rep.v[cls] = space_represents_class(F, v.space, cls) ? F.class_ord(cls) : kDefInf;

    long long q = F.q();
    long long qe = ipow(q, F.e());
    const SpaceClass& S = v.space;
    int ordc = F.class_ord(S.c);
    switch (S.n) {
        case 1:
            rep.delta = ordc == 0 ? Rat(q, 2 * qe * (q + 1)) : Rat(1, 2 * qe * (q + 1));
            break;
        case 2:
            if (S.c == F.class_one())
                rep.delta = Rat(1);
            else if (S.c == F.class_delta())
                rep.delta = Rat(1) / (pow_rat(q, S.nu - 2) * Rat(q + 1));
            else
                rep.delta = Rat(1, 2);
            break;
        case 3:
            if (S.nu == 1)
                rep.delta = Rat(1);
            else if (ordc == 0)
                rep.delta = Rat((2 * qe - 1) * q + 2 * qe, 2 * qe * (q + 1));
            else
                rep.delta = Rat(2 * qe * q + 2 * qe - 1, 2 * qe * (q + 1));
            break;
        default:
            rep.delta = Rat(1); // rank >= 4 ADC lattices are universal
            break;
    }
    if (rep.delta != rep_density_from_vc(F, rep.v))
        throw InternalError("closed-form density disagrees with its v_c table");
    return rep;
}

DensityReport rep_density(const Lattice& M) {
    AdcVerdict v = adc_classify(M);
    return rep_density(*M.F, v);
}

} // namespace adclat
