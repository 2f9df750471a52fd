#include "adclat/local_density.hpp"

#include <sstream>

namespace adclat {

namespace {

int chi_of_profile(const Field& F, const BinaryProfile& p) {
    // chi is attached to -dV, and dV lies in the square class of a(L)
    return F.chi(F.neg(F.rep(p.a_class)));
}

Rat one_minus_chi_over_q(const Field& F, int chi) { return Rat(1) - Rat(chi, F.q()); }

} // namespace

TRPair t_r_pair(const Field& F, const BinaryProfile& p) {
    long long e = F.e();
    long long R = p.R;
    int chi = chi_of_profile(F, p);
    bool dinf = p.d_minus_a >= kDefInf;
    long long d = p.d_minus_a;
    if (R > 0) {
        if (e == 0) return {0, Rat(2)}; // only the R > 2e case survives
        if (R <= 2 * e) {
            long long alpha = boost::rational_cast<long long>(p.alpha);
            if (!dinf && Rat(alpha) == Rat(R + d)) return {alpha, Rat(2)};
            return {alpha, Rat(1)};
        }
        return {2 * e, Rat(2)};
    }
    if (R == -2 * e) return {2 * e, one_minus_chi_over_q(F, chi)};
    if (!dinf && d <= e - R / 2) return {d, Rat(2)};
    return {e - R / 2, Rat(1)};
}

LocalDensityReport local_density_gamma(const Lattice& L) {
    const Field& F = *L.F;
    if (L.m != 2) throw SchemaError("local_density_gamma needs rank 2");
    BinaryProfile p = binary_profile(L);
    TRPair tr = t_r_pair(F, p);
    LocalDensityReport rep;
    rep.t = tr.t;
    rep.r = tr.r;
    rep.chi = chi_of_profile(F, p);
    rep.s_ord = p.scale_ord;
    rep.v_ord = p.volume_ord;
    long long tfloor = tr.t >= 0 ? tr.t / 2 : -((-tr.t + 1) / 2);
    rep.gamma = F.qpow(p.scale_ord) * F.qpow(p.volume_ord) * F.qpow(F.e() + tfloor) * tr.r;
    rep.beta = F.qpow(F.e()) * rep.gamma;
    return rep;
}

MassLocalFactor mass_local_factor(const Lattice& L) {
    const Field& F = *L.F;
    if (L.m != 2) throw SchemaError("mass_local_factor needs rank 2");
    BinaryProfile p = binary_profile(L);
    long long e = F.e();
    long long R = p.R;
    bool dinf = p.d_minus_a >= kDefInf;
    long long d = p.d_minus_a;
    MassLocalFactor m;
    m.chi = chi_of_profile(F, p);
    m.psi = (R % 2 != 0) ? Rat(R) : p.alpha;
    bool u2;
    if (R % 2 == 0)
        u2 = dinf || p.alpha + Rat(d) > Rat(2 * e);
    else
        u2 = R > 2 * e;
    m.u = (m.chi == 0 && u2) ? 2 : 1;
    if (m.psi <= Rat(2 * e)) {
        long long psi = boost::rational_cast<long long>(m.psi);
        long long fl = psi >= 0 ? psi / 2 : -((-psi + 1) / 2);
        m.upsilon = fl >= 0 ? ipow(F.q(), static_cast<int>(fl)) : 1;
        if (fl < 0) throw InternalError("upsilon exponent negative"); // psi >= 0 always
    } else {
        m.upsilon = 2 * ipow(F.q(), F.e());
    }
    m.w = Rat(m.u, m.upsilon) * one_minus_chi_over_q(F, m.chi);
    m.S = (R % 2 != 0) ? -1 : 2 * std::min<long long>(e, dinf ? e : d / 2);
    m.conductor_exp = (R + m.S) / 2;
    if ((R + m.S) % 2 != 0) throw InternalError("conductor exponent not integral");
    return m;
}

long long conductor_exponent(const Lattice& L) { return mass_local_factor(L).conductor_exp; }

std::pair<long long, long long> fb_db(const Lattice& L) {
    const Field& F = *L.F;
    if (!F.dyadic()) throw SchemaError("fb_db is defined over dyadic fields");
    if (norm_order(L) != 0) throw SchemaError("fb_db needs a primitive lattice");
    MassLocalFactor m = mass_local_factor(L);
    BinaryProfile p = binary_profile(L);
    return {(p.R + m.S) / 2, 2 * F.e() - m.S};
}

// --- table regeneration -------------------------------------------------------

namespace {

std::string fmt_defect(int d) { return d >= kDefInf ? "inf" : std::to_string(d); }
std::string fmt_int(long long v) { return std::to_string(v); }

GkRow gk_row_impl(const Field& F, FamilyKind kind, int c_kind, int d_delta) {
    // c_kind: 0 = "1" or "Delta", 1 = unit delta with odd defect, 2 = eps*pi
    long long e = F.e();
    GkRow g;
    if (kind == FamilyKind::MBinaryDelta) {
        g.gk = "(0,1,1,2)";
        g.egk = e > 2 ? "-" : (e == 2 ? "(1;1;1)" : "(1;0;1)");
        g.jor = "{" + fmt_int(1 - e) + "}";
        return g;
    }
    if (c_kind == 0) {
        g.gk = "(0,0,0,0)";
        g.egk = e > 1 ? "-" : "(2;1;-1)";
        g.jor = "{" + fmt_int(-e) + "}";
        return g;
    }
    if (c_kind == 1) {
        g.gk = "(0,1," + fmt_int(2 * e - d_delta) + "," + fmt_int(2 * e + 1 - d_delta) + ")";
        g.egk = d_delta > 3 ? "-" : (d_delta == 3 ? "(1;1;1)" : "(1,1;0,1;1,0)");
        g.jor = "{" + fmt_int((1 - d_delta) / 2) + "}";
        return g;
    }
    g.gk = "(0,1," + fmt_int(2 * e) + "," + fmt_int(2 * e + 1) + ")";
    g.egk = "(1,1;0,1;1,0)";
    g.jor = "{0,1}";
    return g;
}

} // namespace

GkRow gk_egk_row(const Field& F, const Family& fam, int d_delta) {
    if (!F.dyadic()) throw SchemaError("GK/EGK rows are tabulated for dyadic fields");
    if (fam.kind == FamilyKind::MBinaryDelta) {
        if (fam.nu != 1) throw SchemaError("GK/EGK data is tabulated for primitive lattices only");
        return gk_row_impl(F, fam.kind, 0, 0);
    }
    if (fam.kind != FamilyKind::NMax || fam.n != 2)
        throw SchemaError("GK/EGK rows exist for binary ADC families only");
    if (fam.c == F.class_one() || fam.c == F.class_delta()) {
        if (fam.nu == 2) throw SchemaError("GK/EGK data is tabulated for primitive lattices only");
        return gk_row_impl(F, fam.kind, 0, 0);
    }
    if (F.class_ord(fam.c) == 1) return gk_row_impl(F, fam.kind, 2, 0);
    return gk_row_impl(F, fam.kind, 1, d_delta);
}

TableBundle adc_tables(const Field& F) {
    TableBundle b;
    b.field_name = F.name();
    b.q = F.q();
    b.e = F.e();

    struct RowSpec {
        std::string label;
        Lattice lat;
        Family fam;
        int d_delta = 0;
        bool primitive = true;
        bool split_nu = false; // true when the two nu-scalings differ in tables 3/4
    };
    std::vector<RowSpec> rows;
    auto fam_of = [&](FamilyKind k, int n, int nu, int c) {
        Family f;
        f.kind = k;
        f.n = n;
        f.nu = nu;
        f.c = c;
        return f;
    };
    {
        Family f = fam_of(FamilyKind::NMax, 2, 1, F.class_one());
        rows.push_back({"N_1^2(1)", construct_family(F, f), f, 0, true, false});
    }
    {
        Family f = fam_of(FamilyKind::NMax, 2, 1, F.class_delta());
        rows.push_back({"N_nu^2(Delta)", construct_family(F, f), f, 0, true, true});
    }
    if (F.dyadic()) {
        for (int d = 1; d < 2 * F.e(); d += 2) {
            int cls = -1;
            for (int i = 1; i < F.unit_count(); ++i)
                if (i != F.class_delta() && F.defect(F.rep(i)) == d) {
                    cls = i;
                    break;
                }
            if (cls < 0) throw InternalError("missing unit class of odd defect");
            Family f = fam_of(FamilyKind::NMax, 2, 1, cls);
            std::string lab = "N_nu^2(delta), d(delta)=" + std::to_string(d);
            rows.push_back({lab, construct_family(F, f), f, d, true, false});
        }
    }
    {
        Family f = fam_of(FamilyKind::NMax, 2, 1, F.class_pi());
        rows.push_back({"N_nu^2(eps*pi)", construct_family(F, f), f, 0, true, false});
    }
    if (F.dyadic()) {
        Family f = fam_of(FamilyKind::MBinaryDelta, 2, 1, F.class_delta());
        rows.push_back({"M_nu^2(Delta)", construct_family(F, f), f, 0, true, true});
    }

    Table t1{"Table 1: d(-a(L)), R(L), alpha(L)", {"d(-a)", "R", "alpha"}, {}};
    Table t2{"Table 2: psi, u, upsilon, w", {"psi", "u", "upsilon", "w"}, {}};
    Table t3{"Table 3: N(s), N(v), t, r, gamma", {"N(s)", "N(v)", "t", "r", "gamma"}, {}};
    Table t4{"Table 4: f_B, d_B, beta", {"f_B", "d_B", "beta"}, {}};
    Table t5{"Table 5: GK, EGK, jor", {"GK", "EGK", "jor"}, {}};

    for (const RowSpec& r : rows) {
        BinaryProfile p = binary_profile(r.lat);
        t1.rows.push_back({r.label, {fmt_defect(p.d_minus_a), fmt_int(p.R), rat_str(p.alpha)}});
        MassLocalFactor m = mass_local_factor(r.lat);
        t2.rows.push_back(
            {r.label, {rat_str(m.psi), fmt_int(m.u), fmt_int(m.upsilon), rat_str(m.w)}});

        auto push_t34 = [&](const std::string& lab, const Lattice& L, bool primitive) {
            LocalDensityReport g = local_density_gamma(L);
            t3.rows.push_back({lab,
                               {rat_str(F.qpow(g.s_ord)), rat_str(F.qpow(g.v_ord)), fmt_int(g.t),
                                rat_str(g.r), rat_str(g.gamma)}});
            if (F.dyadic()) {
                if (primitive) {
                    auto [fB, dB] = fb_db(L);
                    t4.rows.push_back({lab, {fmt_int(fB), fmt_int(dB), rat_str(g.beta)}});
                } else {
                    t4.rows.push_back({lab, {"-", "-", rat_str(g.beta)}});
                }
            }
        };
        if (!r.split_nu) {
            push_t34(r.label, r.lat, r.primitive);
        } else {
            std::string l1 = r.label, l2 = r.label;
            auto rep = [&](std::string& s, const char* nu) {
                auto posn = s.find("nu");
                if (posn != std::string::npos) s.replace(posn, 2, nu);
            };
            rep(l1, "1");
            rep(l2, "2");
            push_t34(l1, r.lat, true);
            push_t34(l2, scale_lattice_pi(r.lat, 1), false); // the pi-scaled twin
        }
        if (F.dyadic()) {
            bool in_t5 = !(r.fam.kind == FamilyKind::NMax && r.fam.c == F.class_delta() && r.fam.nu == 2);
            if (in_t5) {
                std::string lab = r.label;
                if (r.fam.kind == FamilyKind::MBinaryDelta) lab = "M_1^2(Delta)";
                if (r.fam.c == F.class_one() || r.fam.c == F.class_delta()) lab = "N_1^2(" + F.class_label(r.fam.c) + ")";
                GkRow g = gk_egk_row(F, r.fam, r.d_delta);
                t5.rows.push_back({lab, {g.gk, g.egk, g.jor}});
            }
        }
    }

    b.tables = {t1, t2, t3};
    if (F.dyadic()) {
        b.tables.push_back(t4);
        b.tables.push_back(t5);
    }
    return b;
}

std::string render_tables_text(const TableBundle& b) {
    std::ostringstream os;
    os << "binary ADC local data over " << b.field_name << " (q=" << b.q << ", e=" << b.e << ")\n";
    for (const Table& t : b.tables) {
        os << "\n" << t.name << "\n";
        std::size_t lw = 8;
        for (const TableRow& r : t.rows) lw = std::max(lw, r.label.size());
        os << std::string(lw, ' ');
        for (const std::string& h : t.headers) {
            os << " | ";
            os << h;
        }
        os << "\n";
        for (const TableRow& r : t.rows) {
            os << r.label << std::string(lw - r.label.size(), ' ');
            for (const std::string& c : r.cells) os << " | " << c;
            os << "\n";
        }
    }
    return os.str();
}

CounterexampleReport gk_egk_counterexample(const Field& F) {
    if (!F.dyadic() || F.e() < 2)
        throw SchemaError("the GK/EGK counterexample needs a ramified dyadic field (e >= 2)");
    int cls = -1;
    for (int i = 1; i < F.unit_count(); ++i)
        if (i != F.class_delta() && F.defect(F.rep(i)) == 2 * F.e() - 1) {
            cls = i;
            break;
        }
    if (cls < 0) throw InternalError("no unit with d(delta) = 2e-1");

    Family f1;
    f1.kind = FamilyKind::NMax;
    f1.n = 2;
    f1.nu = 1;
    f1.c = cls;
    Family f2;
    f2.kind = FamilyKind::MBinaryDelta;
    f2.n = 2;
    f2.nu = 1;
    f2.c = F.class_delta();
    Lattice L1 = construct_family(F, f1);
    Lattice L2 = construct_family(F, f2);

    CounterexampleReport rep;
    rep.delta_label = F.class_label(cls);
    rep.d_delta = 2 * F.e() - 1;
    rep.family1 = f1.display(F);
    rep.family2 = f2.display(F);
    GkRow g1 = gk_egk_row(F, f1, rep.d_delta);
    GkRow g2 = gk_egk_row(F, f2, 0);
    if (g1.gk != g2.gk || g1.egk != g2.egk || g1.jor != g2.jor)
        throw InternalError("counterexample pair has unequal GK/EGK display");
    rep.shared = g1;
    LocalDensityReport d1 = local_density_gamma(L1);
    LocalDensityReport d2 = local_density_gamma(L2);
    rep.gamma1 = d1.gamma;
    rep.gamma2 = d2.gamma;
    rep.beta1 = d1.beta;
    rep.beta2 = d2.beta;
    rep.d_minus_a1 = binary_profile(L1).d_minus_a;
    rep.d_minus_a2 = binary_profile(L2).d_minus_a;
    if (rep.beta1 != Rat(2) * rep.beta2) throw InternalError("counterexample beta ratio is not 2");
    return rep;
}

} // namespace adclat
