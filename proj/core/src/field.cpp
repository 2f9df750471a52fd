#include "adclat/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace adclat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }
u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b; // m < 2^63, no overflow
    return s >= m ? s - m : s;
}
u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 a, u64 n, u64 m) {
    u64 r = 1 % m;
    while (n) {
        if (n & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        n >>= 1;
    }
    return r;
}

// inverse of a unit modulo m = p^k, by Newton lifting from an inverse mod p
u64 invmod_pp(u64 a, u64 m, u64 p) {
    u64 x = (p == 2) ? 1 : powmod(a % p, p - 2, p);
    // each step doubles the number of correct digits
    for (int i = 0; i < 7; ++i) {
        u64 ax = mulmod(a, x, m);
        x = mulmod(x, submod(2 % m, ax, m), m);
    }
    return x;
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int v2_u64(u64 x, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (!(x & 1) && v < cap) {
        x >>= 1;
        ++v;
    }
    return v;
}

} // namespace

std::string ext_type_name(ExtType t) {
    switch (t) {
        case ExtType::Split: return "split";
        case ExtType::Inert: return "inert";
        default: return "ramified";
    }
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::Qp: return "Q" + std::to_string(p_);
        case FieldKind::Unramified2: return "Q2ur";
        default: return "Q2eis";
    }
}

int Field::coord_digits_for(int pi_prec) const {
    if (kind_ == FieldKind::Eisenstein2) return (pi_prec + 1) / 2;
    return pi_prec;
}

Field Field::qp(long long p, int precision) {
    if (!is_prime_ll(p)) throw SchemaError("p must be prime");
    Field F;
    F.kind_ = FieldKind::Qp;
    F.p_ = p;
    F.e_ = (p == 2) ? 1 : 0;
    F.f_ = 1;
    F.q_ = p;
    F.finalize(precision);
    return F;
}

Field Field::unramified2(int precision) {
    Field F;
    F.kind_ = FieldKind::Unramified2;
    F.p_ = 2;
    F.e_ = 1;
    F.f_ = 2;
    F.q_ = 4;
    F.poly_c0_ = 1; // x^2 + x + 1
    F.poly_c1_ = 1;
    F.finalize(precision);
    return F;
}

Field Field::eisenstein2(long long c0, long long c1, int precision) {
    if (c0 % 2 != 0 || c0 % 4 == 0) throw SchemaError("Eisenstein polynomial needs ord(c0) = 1");
    if (c1 % 2 != 0) throw SchemaError("Eisenstein polynomial needs ord(c1) >= 1");
    Field F;
    F.kind_ = FieldKind::Eisenstein2;
    F.p_ = 2;
    F.e_ = 2;
    F.f_ = 1;
    F.q_ = 2;
    F.poly_c0_ = c0;
    F.poly_c1_ = c1;
    F.finalize(precision);
    return F;
}

void Field::finalize(int precision) {
    int def = 6 * e_ + 12;
    prec_ = precision > 0 ? precision : def;
    // clamp so the coordinate modulus fits into 62 bits
    int maxd = 1;
    {
        u64 m = static_cast<u64>(p_);
        while (m <= (u64(1) << 61) / static_cast<u64>(p_)) {
            m *= static_cast<u64>(p_);
            ++maxd;
        }
    }
    int want = coord_digits_for(prec_);
    ncoord_ = std::min(want, maxd);
    if (kind_ == FieldKind::Eisenstein2)
        prec_ = 2 * ncoord_;
    else
        prec_ = ncoord_;
    if (prec_ < 2 * e_ + 4) throw SchemaError("requested precision too small for this field");
    cmod_ = 1;
    for (int i = 0; i < ncoord_; ++i) cmod_ *= static_cast<u64>(p_);
    build_unit_classes();
    if (dyadic()) build_norm_tables();
}

// --- raw coordinate arithmetic ------------------------------------------------

Field::Pair Field::craw_add(const Pair& a, const Pair& b) const {
    return {addmod(a[0], b[0], cmod_), f_ == 2 || kind_ == FieldKind::Eisenstein2 ? addmod(a[1], b[1], cmod_) : 0};
}

Field::Pair Field::craw_sub(const Pair& a, const Pair& b) const {
    return {submod(a[0], b[0], cmod_), f_ == 2 || kind_ == FieldKind::Eisenstein2 ? submod(a[1], b[1], cmod_) : 0};
}

Field::Pair Field::craw_mul(const Pair& a, const Pair& b) const {
    if (kind_ == FieldKind::Qp) return {mulmod(a[0], b[0], cmod_), 0};
    // x^2 = -c1 x - c0
    u64 c0 = static_cast<u64>(((poly_c0_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
    u64 c1 = static_cast<u64>(((poly_c1_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
    u64 t00 = mulmod(a[0], b[0], cmod_);
    u64 t01 = addmod(mulmod(a[0], b[1], cmod_), mulmod(a[1], b[0], cmod_), cmod_);
    u64 t11 = mulmod(a[1], b[1], cmod_);
    u64 r0 = submod(t00, mulmod(c0, t11, cmod_), cmod_);
    u64 r1 = submod(t01, mulmod(c1, t11, cmod_), cmod_);
    return {r0, r1};
}

bool Field::craw_is_zero(const Pair& a) const { return a[0] == 0 && a[1] == 0; }

Field::Pair Field::craw_inv(const Pair& a) const {
    if (kind_ == FieldKind::Qp) {
        if (a[0] % static_cast<u64>(p_) == 0) throw InternalError("craw_inv of non-unit");
        return {invmod_pp(a[0], cmod_, static_cast<u64>(p_)), 0};
    }
    u64 c0 = static_cast<u64>(((poly_c0_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
    u64 c1 = static_cast<u64>(((poly_c1_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
    // multiplication-by-a matrix [[a0, -c0 a1],[a1, a0 - c1 a1]]
    u64 det = addmod(submod(mulmod(a[0], a[0], cmod_), mulmod(c1, mulmod(a[0], a[1], cmod_), cmod_), cmod_),
                     mulmod(c0, mulmod(a[1], a[1], cmod_), cmod_), cmod_);
    if ((det & 1) == 0) throw InternalError("craw_inv of non-unit (even norm)");
    u64 dinv = invmod_pp(det, cmod_, 2);
    u64 b0 = mulmod(dinv, submod(a[0], mulmod(c1, a[1], cmod_), cmod_), cmod_);
    u64 b1 = mulmod(dinv, submod(0, a[1], cmod_), cmod_);
    return {b0, b1};
}

long long Field::craw_ord(const Pair& a) const {
    if (craw_is_zero(a)) return kValInf;
    switch (kind_) {
        case FieldKind::Qp: {
            u64 x = a[0];
            long long v = 0;
            while (x % static_cast<u64>(p_) == 0) {
                x /= static_cast<u64>(p_);
                ++v;
            }
            return v;
        }
        case FieldKind::Unramified2:
            return std::min(v2_u64(a[0], ncoord_), v2_u64(a[1], ncoord_));
        default: { // Eisenstein2: ord(a0 + a1*pi) = min(2 v2(a0), 2 v2(a1) + 1)
            long long v0 = a[0] ? 2LL * v2_u64(a[0], ncoord_) : kValInf;
            long long v1 = a[1] ? 2LL * v2_u64(a[1], ncoord_) + 1 : kValInf;
            return std::min(v0, v1);
        }
    }
}

Field::Pair Field::craw_div_pi(const Pair& a, long long k) const {
    Pair r = a;
    if (kind_ == FieldKind::Qp) {
        for (long long i = 0; i < k; ++i) r[0] /= static_cast<u64>(p_);
        return r;
    }
    if (kind_ == FieldKind::Unramified2) {
        for (long long i = 0; i < k; ++i) {
            r[0] >>= 1;
            r[1] >>= 1;
        }
        return r;
    }
    // Eisenstein: x / pi = (-a0/c0) + (a1 + c1 * (-a0/c0)) pi
    long long odd = k & 1;
    long long t = k / 2;
    // x / pi^2 = (x/2) * (pi^2/2)^{-1},  pi^2/2 = -(c0/2) - (c1/2) pi
    Pair half_pi2 = {static_cast<u64>((((-(poly_c0_ / 2)) % (long long)cmod_) + (long long)cmod_) % (long long)cmod_),
                     static_cast<u64>((((-(poly_c1_ / 2)) % (long long)cmod_) + (long long)cmod_) % (long long)cmod_)};
    Pair half_pi2_inv = craw_inv(half_pi2);
    for (long long i = 0; i < t; ++i) {
        r[0] >>= 1;
        r[1] >>= 1;
        r = craw_mul(r, half_pi2_inv);
    }
    if (odd) {
        u64 gamma = static_cast<u64>((((poly_c0_ / 2) % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
        u64 ginv = invmod_pp(gamma, cmod_, 2);
        u64 b1 = mulmod(submod(0, r[0] >> 1, cmod_), ginv, cmod_);
        u64 c1m = static_cast<u64>(((poly_c1_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
        u64 b0 = addmod(r[1], mulmod(c1m, b1, cmod_), cmod_);
        r = {b0, b1};
    }
    return r;
}

Field::Pair Field::craw_mul_pi(const Pair& a, long long k) const {
    Pair r = a;
    if (kind_ == FieldKind::Qp) {
        for (long long i = 0; i < k; ++i) r[0] = mulmod(r[0], static_cast<u64>(p_), cmod_);
        return r;
    }
    if (kind_ == FieldKind::Unramified2) {
        for (long long i = 0; i < k; ++i) r = {addmod(r[0], r[0], cmod_), addmod(r[1], r[1], cmod_)};
        return r;
    }
    u64 c0 = static_cast<u64>(((poly_c0_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
    u64 c1 = static_cast<u64>(((poly_c1_ % (long long)cmod_) + (long long)cmod_) % (long long)cmod_);
    for (long long i = 0; i < k; ++i) {
        // (a0 + a1 pi) pi = (-c0 a1) + (a0 - c1 a1) pi
        u64 r0 = submod(0, mulmod(c0, r[1], cmod_), cmod_);
        u64 r1 = submod(r[0], mulmod(c1, r[1], cmod_), cmod_);
        r = {r0, r1};
    }
    return r;
}

Elt Field::normalize(Pair a, long long base_val, int prec) const {
    Elt out;
    long long t = craw_ord(a);
    long long rel_cap = prec - base_val; // digits of a that are meaningful
    if (t >= rel_cap || t == kValInf) {
        out.zero = true;
        out.prec = prec;
        return out;
    }
    out.zero = false;
    out.c = craw_div_pi(a, t);
    out.v = base_val + t;
    out.prec = prec;
    return out;
}

// --- element construction ---------------------------------------------------

Elt Field::zero() const {
    Elt z;
    z.zero = true;
    z.prec = prec_;
    return z;
}

Elt Field::from_int(long long n) const {
    long long m = static_cast<long long>(cmod_);
    long long r = ((n % m) + m) % m;
    return normalize({static_cast<u64>(r), 0}, 0, prec_);
}

Elt Field::from_coords(long long a0, long long a1, int val_shift) const {
    long long m = static_cast<long long>(cmod_);
    Pair a{static_cast<u64>(((a0 % m) + m) % m), static_cast<u64>(((a1 % m) + m) % m)};
    if (kind_ == FieldKind::Qp && a[1] != 0) throw SchemaError("Q_p elements have one coordinate");
    Elt x = normalize(a, 0, prec_);
    return val_shift == 0 ? x : mul_pi_pow(x, val_shift);
}

Elt Field::from_rat(const Rat& r) const {
    if (r.numerator() == 0) return zero();
    Elt num = from_int(r.numerator());
    Elt den = from_int(r.denominator());
    return div(num, den);
}

Elt Field::pi() const {
    Elt x = one();
    x.v = 1;
    return x;
}

Elt Field::rho() const {
    if (!dyadic()) throw SchemaError("rho is defined for dyadic fields only");
    return rho_;
}

// --- arithmetic ----------------------------------------------------------------

Elt Field::mul_pi_pow(const Elt& a, long long k) const {
    Elt r = a;
    if (r.zero) {
        r.prec = static_cast<int>(std::min<long long>(r.prec + k, kPrecInf));
        return r;
    }
    r.v += k;
    r.prec = static_cast<int>(std::min<long long>(r.prec + k, kPrecInf));
    return r;
}

Elt Field::add(const Elt& a, const Elt& b) const {
    int prec = std::min(a.prec, b.prec);
    if (a.zero && b.zero) {
        Elt z = zero();
        z.prec = prec;
        return z;
    }
    if (a.zero) {
        Elt r = b;
        r.prec = prec;
        if (!r.zero && r.v >= prec) r.zero = true;
        return r;
    }
    if (b.zero) return add(b, a);
    long long base = std::min(a.v, b.v);
    Pair ar = craw_mul_pi(a.c, a.v - base);
    Pair br = craw_mul_pi(b.c, b.v - base);
    return normalize(craw_add(ar, br), base, prec);
}

Elt Field::neg(const Elt& a) const {
    if (a.zero) return a;
    Elt r = a;
    r.c = craw_sub({0, 0}, a.c);
    return r;
}

Elt Field::sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }

Elt Field::mul(const Elt& a, const Elt& b) const {
    if (a.zero || b.zero) {
        Elt z = zero();
        long long pa = a.zero ? a.prec : a.v;
        long long pb = b.zero ? b.prec : b.v;
        z.prec = static_cast<int>(std::min<long long>(pa + pb, kPrecInf));
        z.zero = true;
        return z;
    }
    int rel = std::min(a.prec - a.v, b.prec - b.v);
    Elt r;
    r.zero = false;
    r.v = a.v + b.v;
    r.c = craw_mul(a.c, b.c);
    r.prec = static_cast<int>(std::min<long long>(r.v + rel, kPrecInf));
    return r;
}

Elt Field::div(const Elt& a, const Elt& b) const {
    if (b.zero) throw PrecisionError("division by zero-at-precision");
    if (a.zero) {
        Elt z = zero();
        z.prec = static_cast<int>(std::min<long long>((long long)a.prec - b.v, kPrecInf));
        return z;
    }
    int rel = std::min(a.prec - a.v, b.prec - b.v);
    Elt r;
    r.zero = false;
    r.v = a.v - b.v;
    r.c = craw_mul(a.c, craw_inv(b.c));
    r.prec = static_cast<int>(std::min<long long>(r.v + rel, kPrecInf));
    return r;
}

bool Field::equal(const Elt& a, const Elt& b) const {
    Elt d = sub(a, b);
    return d.zero;
}

long long Field::valuation(const Elt& a) const {
    if (a.zero) throw PrecisionError("valuation: value vanishes to working precision");
    return a.v;
}

Elt Field::unit_part(const Elt& a) const {
    if (a.zero) throw PrecisionError("unit_part of zero-at-precision");
    Elt r = a;
    r.prec -= static_cast<int>(r.v);
    r.v = 0;
    return r;
}

// --- residue-field helpers (dyadic: F_2 or F_4 with w^2 = w + 1) -------------

namespace {
struct ResElem {
    int b0 = 0, b1 = 0;
};
} // namespace

int Field::residue_trace(const Elt& a) const {
    if (!dyadic()) throw SchemaError("residue_trace: dyadic fields only");
    if (a.zero || a.v != 0) throw SchemaError("residue_trace needs a unit");
    if (f_ == 1) return static_cast<int>(a.c[0] & 1);
    return static_cast<int>(a.c[1] & 1); // Tr(b0 + b1 w) = b1 over F_4
}

// --- quadratic defect --------------------------------------------------------

int Field::defect(const Elt& c) const {
    if (c.zero) throw PrecisionError("defect of zero-at-precision");
    if (c.prec - c.v < 2 * e_ + 2)
        throw PrecisionError("defect needs precision >= 2e+2+ord(c)");
    if (c.v % 2 != 0) return 0;
    Elt u = unit_part(c);
    if (!dyadic()) {
        // Euler criterion on the residue
        u64 r = u.c[0] % static_cast<u64>(p_);
        return powmod(r, static_cast<u64>((p_ - 1) / 2), static_cast<u64>(p_)) == 1 ? kDefInf : 0;
    }
    // dyadic: push ord(u-1) upward while it is even and - below 2e
    for (int iter = 0; iter <= 2 * e_ + 4; ++iter) {
        Elt um1 = sub(u, one());
        long long w = um1.zero ? kValInf : um1.v;
        if (w > 2 * e_) {
            if (um1.zero && um1.prec <= 2 * e_) throw PrecisionError("defect: insufficient precision");
            return kDefInf; // 1 + pi^{2e+1} O consists of squares
        }
        if (w % 2 != 0) return static_cast<int>(w);
        Elt s = mul_pi_pow(um1, -w);
        if (w == 2 * e_) {
            // u = 1 + 4*s', square iff x^2 + x = res(s') is solvable
            Elt sp = div(um1, from_int(4));
            ResElem r{static_cast<int>(sp.c[0] & 1), f_ == 2 ? static_cast<int>(sp.c[1] & 1) : 0};
            int tr = (f_ == 1) ? r.b0 : r.b1;
            if (tr != 0) return 2 * e_;
            // root of x^2 + x = res(s'): 0 -> 0, 1 -> w (F_4)
            Elt x = (r.b0 == 0 && r.b1 == 0) ? zero() : from_coords(0, 1);
            if (f_ == 1 && r.b0 == 1) throw InternalError("defect: F_2 Artin-Schreier");
            Elt t = add(one(), mul(from_int(2), x));
            u = div(u, square(t));
            continue;
        }
        // w even < 2e: divide by (1 + sqrt(res s) pi^{w/2})^2
        ResElem r{static_cast<int>(s.c[0] & 1), f_ == 2 ? static_cast<int>(s.c[1] & 1) : 0};
        ResElem rt = (f_ == 1) ? r : ResElem{(r.b0 + r.b1) & 1, r.b1}; // sqrt = square in F_4
        Elt t = add(one(), mul_pi_pow(from_coords(rt.b0, f_ == 2 ? rt.b1 : 0), w / 2));
        u = div(u, square(t));
    }
    throw InternalError("defect loop failed to terminate");
}

// --- unit square classes -----------------------------------------------------

void Field::build_unit_classes() {
    units_.clear();
    classes_.clear();
    labels_.clear();
    if (!dyadic()) {
        long long d = 2;
        while (powmod(static_cast<u64>(d), static_cast<u64>((p_ - 1) / 2), static_cast<u64>(p_)) == 1) ++d;
        delta_ = from_int(d);
        units_ = {one(), delta_};
        delta_index_ = 1;
    } else {
        // pick rho with Delta = 1 - 4 rho a nonsquare unit (tried in a fixed order)
        std::vector<Elt> rho_candidates = {from_int(-1), from_int(1)};
        if (f_ == 2) {
            rho_candidates.push_back(from_coords(0, 1));
            rho_candidates.push_back(from_coords(1, 1));
        }
        bool found = false;
        for (const Elt& r : rho_candidates) {
            Elt d = sub(one(), mul(from_int(4), r));
            if (defect(d) == 2 * e_) {
                rho_ = r;
                delta_ = d;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("no rho with Delta = 1 - 4 rho nonsquare");
        // generators: 1 + r pi^j for odd j < 2e and residue basis r, then Delta
        std::vector<Elt> gens;
        for (int j = 1; j < 2 * e_; j += 2) {
            gens.push_back(add(one(), mul_pi_pow(one(), j)));
            if (f_ == 2) gens.push_back(add(one(), mul_pi_pow(from_coords(0, 1), j)));
        }
        gens.push_back(delta_);
        int ng = static_cast<int>(gens.size());
        for (int mask = 0; mask < (1 << ng); ++mask) {
            Elt u = one();
            for (int i = 0; i < ng; ++i)
                if (mask & (1 << i)) u = mul(u, gens[i]);
            units_.push_back(u);
        }
        delta_index_ = 1 << (ng - 1);
        if (static_cast<long long>(units_.size()) != 2 * ipow(q_, e_))
            throw InternalError("|U| != 2 q^e");
        // normalization check: d(delta) = ord(delta - 1) for every rep
        for (size_t i = 1; i < units_.size(); ++i) {
            Elt um1 = sub(units_[i], one());
            if (defect(units_[i]) != (um1.zero ? kDefInf : static_cast<int>(um1.v)))
                throw InternalError("unit system violates d(delta) = ord(delta-1)");
        }
    }
    unit_inverses_.clear();
    for (const Elt& u : units_) unit_inverses_.push_back(inv(u));

    classes_ = units_;
    for (const Elt& u : units_) classes_.push_back(mul_pi_pow(u, 1));

    // labels: "1", "Delta", small-integer representatives "u<n>", else "g<i>"
    std::vector<std::string> unit_labels(units_.size());
    for (size_t i = 0; i < units_.size(); ++i) {
        if (static_cast<int>(i) == 0) {
            unit_labels[i] = "1";
            continue;
        }
        if (static_cast<int>(i) == delta_index_) {
            unit_labels[i] = "Delta";
            continue;
        }
        std::string lab;
        for (long long n = 2; n <= 8 * q_ * q_ * ipow(p_, 2 * e_ + 1) && lab.empty(); ++n) {
            if (n % p_ == 0) continue;
            if (is_square(mul(from_int(n), unit_inverses_[i]))) lab = "u" + std::to_string(n);
        }
        unit_labels[i] = lab.empty() ? "g" + std::to_string(i) : lab;
    }
    for (const std::string& l : unit_labels) labels_.push_back(l);
    for (const std::string& l : unit_labels) labels_.push_back(l == "1" ? "pi" : l + "*pi");
}

int Field::class_index(const Elt& a) const {
    if (a.zero) throw PrecisionError("class_index of zero-at-precision");
    int v = static_cast<int>(((a.v % 2) + 2) % 2);
    Elt u = unit_part(a);
    for (size_t i = 0; i < units_.size(); ++i)
        if (is_square(mul(u, unit_inverses_[i]))) return static_cast<int>(i) + v * unit_count();
    throw InternalError("unit class not found");
}

int Field::class_by_label(const std::string& label) const {
    for (int i = 0; i < class_count(); ++i)
        if (labels_[i] == label) return i;
    throw SchemaError("unknown square-class label: " + label);
}

int Field::class_mul(int i, int j) const {
    int vi = class_ord(i), vj = class_ord(j);
    Elt prod = mul(classes_[i], classes_[j]);
    if (vi + vj == 2) prod = mul_pi_pow(prod, -2);
    return class_index(prod);
}

int Field::class_neg(int i) const { return class_index(neg(classes_[i])); }

// --- norm-class tables and the Hilbert symbol ---------------------------------

void Field::build_norm_tables() {
    // For each nonsquare unit class u, the set of square classes of the values
    // of the norm form x^2 - u y^2 equals {1} ∪ {t^2 - u : t in O} ∪
    // {1 - u s^2 : s in pi O}; every value in the first family has
    // ord <= d(u) <= 2e, so classes stabilize once t runs modulo pi^(4e+3).
    norm_classes_.assign(units_.size(), 0);
    int M = 4 * e_ + 3;
    auto enumerate = [&](auto&& fn) {
        if (kind_ == FieldKind::Qp) {
            long long n = ipow(p_, M);
            for (long long i = 0; i < n; ++i) fn(from_coords(i, 0));
        } else if (kind_ == FieldKind::Unramified2) {
            long long n = 1LL << M;
            for (long long i = 0; i < n; ++i)
                for (long long j = 0; j < n; ++j) fn(from_coords(i, j));
        } else {
            long long n0 = 1LL << ((M + 1) / 2), n1 = 1LL << (M / 2);
            for (long long i = 0; i < n0; ++i)
                for (long long j = 0; j < n1; ++j) fn(from_coords(i, j));
        }
    };
    for (size_t iu = 1; iu < units_.size(); ++iu) {
        const Elt& u = units_[iu];
        std::uint32_t mask = 1u << class_one();
        enumerate([&](const Elt& t) {
            Elt w = sub(square(t), u);
            if (!w.zero) mask |= 1u << class_index(w);
            Elt s = mul_pi_pow(t, 1);
            Elt w2 = sub(one(), mul(u, square(s)));
            if (!w2.zero) mask |= 1u << class_index(w2);
        });
        norm_classes_[iu] = mask;
    }
    // sanity: norms from F(sqrt(Delta)) are exactly the even-order classes
    std::uint32_t even = (1u << unit_count()) - 1;
    if (norm_classes_[delta_index_] != even) throw InternalError("norm table for Delta is wrong");
}

int Field::hilbert_classes(int i, int j) const {
    auto unit_sym = [&](int iu, int jcls) -> int {
        if (iu == 0) return 1;
        if (!dyadic()) {
            // (u, b) = leg(u)^{ord b}; the nonsquare unit pairs to -1 with pi-classes
            return (iu == delta_index_ && !class_is_unit(jcls)) ? -1 : 1;
        }
        return (norm_classes_[iu] >> jcls) & 1u ? 1 : -1;
    };
    int vi = class_ord(i), vj = class_ord(j);
    int ui = i % unit_count(), uj = j % unit_count();
    int r = unit_sym(ui, uj);
    if (vj) r *= unit_sym(ui, class_pi());
    if (vi) r *= unit_sym(uj, class_pi());
    if (vi && vj) {
        // (pi, pi) = (pi, -1)
        int m1 = class_index(from_int(-1));
        r *= (m1 == class_one()) ? 1 : unit_sym(m1, class_pi());
    }
    return r;
}

int Field::hilbert(const Elt& a, const Elt& b) const {
    if (a.zero || b.zero) throw PrecisionError("hilbert symbol needs nonzero arguments");
    return hilbert_classes(class_index(a), class_index(b));
}

ExtType Field::extension_type(const Elt& a) const {
    int cl = class_index(a);
    if (cl == class_one()) return ExtType::Split;
    if (cl == class_delta()) return ExtType::Inert;
    return ExtType::Ramified;
}

int Field::chi(const Elt& a) const {
    switch (extension_type(a)) {
        case ExtType::Split: return 1;
        case ExtType::Inert: return -1;
        default: return 0;
    }
}

bool Field::in_norm_group(const Elt& b, const Elt& a) const {
    if (is_square(a)) return true;
    return hilbert(a, b) == 1;
}

Elt Field::sharp(const Elt& c) const {
    if (!dyadic()) throw SchemaError("sharp companion is defined for dyadic fields");
    int cl = class_index(c);
    if (cl == class_one() || cl == class_delta())
        throw SchemaError("sharp companion is undefined for classes 1 and Delta");
    if (class_ord(cl) == 1) return delta_;
    // c ~ delta = 1 + b pi^{d} with b a unit (U reps are normalized)
    const Elt& d_rep = units_[cl % unit_count()];
    int d = defect(d_rep);
    Elt b = mul_pi_pow(sub(d_rep, one()), -d);
    Elt res = add(one(), mul_pi_pow(mul(mul(from_int(4), rho_), inv(b)), -d));
    return res;
}

} // namespace adclat
