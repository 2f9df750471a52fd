#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "adclat/rat.hpp"

namespace adclat {

// Error taxonomy shared by the whole library.  The CLI maps these to exit
// codes: SchemaError -> 2, Inconclusive/PrecisionError -> 3, InternalError -> 4.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Defect order d(c) lives in N ∪ {∞}.
inline constexpr int kDefInf = std::numeric_limits<int>::max() / 4;
inline constexpr long long kValInf = std::numeric_limits<long long>::max() / 4;
inline constexpr int kPrecInf = std::numeric_limits<int>::max() / 4;

enum class FieldKind { Qp, Unramified2, Eisenstein2 };
enum class ExtType { Split, Inert, Ramified };

// Element of a local field known modulo pi^prec.  Coordinates are in the
// defining basis {1, x}; for Q_p only c[0] is used.  Invariant: if !zero the
// coordinate vector is a unit and v holds the exact valuation.
struct Elt {
    long long v = 0;
    std::array<std::uint64_t, 2> c{0, 0};
    int prec = 0;
    bool zero = true;
};

// A supported non-archimedean local field: Q_p for a prime p, the unramified
// quadratic extension of Q_2, or a ramified quadratic (Eisenstein) extension
// of Q_2.  Immutable after construction; every operation is a pure function
// of its arguments, so concurrent use needs no synchronization.
class Field {
public:
    static Field qp(long long p, int precision = 0);
    static Field unramified2(int precision = 0);
    // poly = (c0, c1) for x^2 + c1 x + c0 with ord(c1) >= 1 and ord(c0) = 1.
    static Field eisenstein2(long long c0 = -2, long long c1 = 0, int precision = 0);

    FieldKind kind() const { return kind_; }
    long long p() const { return p_; }
    int e() const { return e_; }
    int f() const { return f_; }
    long long q() const { return q_; }
    int precision() const { return prec_; }
    bool dyadic() const { return p_ == 2; }
    std::string name() const;

    // --- element construction -------------------------------------------
    Elt zero() const;
    Elt one() const { return from_int(1); }
    Elt from_int(long long n) const;
    Elt from_rat(const Rat& r) const;
    // coordinates (a0, a1) in the defining basis, times pi^val_shift
    Elt from_coords(long long a0, long long a1, int val_shift = 0) const;
    Elt pi() const;
    Elt delta() const { return delta_; }
    Elt rho() const; // dyadic only

    // --- arithmetic -------------------------------------------------------
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt div(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const { return div(one(), a); }
    Elt square(const Elt& a) const { return mul(a, a); }
    Elt mul_pi_pow(const Elt& a, long long k) const; // a * pi^k
    bool is_zero(const Elt& a) const { return a.zero; }
    // true if a and b agree at the smaller of their precisions
    bool equal(const Elt& a, const Elt& b) const;

    // valuation; throws PrecisionError when the value vanishes to its full
    // stored precision (the caller must raise precision).
    long long valuation(const Elt& a) const;
    Elt unit_part(const Elt& a) const; // a * pi^{-ord(a)}

    // --- square classes and symbols ----------------------------------------
    // quadratic defect order d(c); kDefInf encodes infinity (c a square)
    int defect(const Elt& c) const;
    bool is_square(const Elt& c) const { return defect(c) == kDefInf; }
    int hilbert(const Elt& a, const Elt& b) const; // ±1
    ExtType extension_type(const Elt& a) const;
    int chi(const Elt& a) const; // split 1, ramified 0, inert -1
    bool in_norm_group(const Elt& b, const Elt& a) const;
    Elt sharp(const Elt& c) const; // c^# companion, dyadic, c not in {1,Delta}

    // --- canonical representative systems -----------------------------------
    // U: unit square classes, each delta with d(delta) = ord(delta-1);
    // V = U ∪ pi·U.  Indices into V are "class indices" used across modules.
    const std::vector<Elt>& unit_reps() const { return units_; }
    const std::vector<Elt>& class_reps() const { return classes_; }
    const std::vector<std::string>& class_labels() const { return labels_; }
    int unit_count() const { return static_cast<int>(units_.size()); }
    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_one() const { return 0; }
    int class_delta() const { return delta_index_; }
    int class_pi() const { return unit_count(); }
    bool class_is_unit(int idx) const { return idx < unit_count(); }
    int class_ord(int idx) const { return idx < unit_count() ? 0 : 1; }
    // index of the square class of a in V
    int class_index(const Elt& a) const;
    const std::string& class_label(const Elt& a) const { return labels_[class_index(a)]; }
    const std::string& class_label(int idx) const { return labels_[idx]; }
    // class arithmetic on V indices
    int class_mul(int i, int j) const;
    int class_neg(int i) const; // class of -rep
    int hilbert_classes(int i, int j) const;
    Elt rep(int idx) const { return classes_[idx]; }
    // parse a label as produced by class_label
    int class_by_label(const std::string& label) const;

    Rat qpow(long long k) const { return pow_rat(q_, k); }

    // residue-field trace of the reduction of a unit (F_2 or F_4 -> F_2);
    // dyadic only, used by tests.
    int residue_trace(const Elt& a) const;

private:
    Field() = default;
    void finalize(int precision);
    void build_unit_classes();
    void build_norm_tables();

    // raw coordinate helpers (coordinates modulo cmod_)
    using Pair = std::array<std::uint64_t, 2>;
    Pair craw_add(const Pair& a, const Pair& b) const;
    Pair craw_sub(const Pair& a, const Pair& b) const;
    Pair craw_mul(const Pair& a, const Pair& b) const;
    Pair craw_inv(const Pair& a) const; // a must be a unit
    bool craw_is_zero(const Pair& a) const;
    // exact valuation of the element with coordinates a (< coordinate range)
    long long craw_ord(const Pair& a) const;
    Pair craw_div_pi(const Pair& a, long long k) const; // divide by pi^k (exact)
    Pair craw_mul_pi(const Pair& a, long long k) const; // multiply by pi^k
    Elt normalize(Pair a, long long base_val, int prec) const;

    int coord_digits_for(int pi_prec) const;

    FieldKind kind_ = FieldKind::Qp;
    long long p_ = 2;
    int e_ = 1;
    int f_ = 1;
    long long q_ = 2;
    int prec_ = 0;      // default absolute precision, pi-adic digits
    int ncoord_ = 0;    // coordinate digits (base p)
    std::uint64_t cmod_ = 0; // p^ncoord_
    long long poly_c0_ = 0, poly_c1_ = 0; // x^2 + c1 x + c0 = 0 (extensions)

    Elt delta_;
    Elt rho_;
    int delta_index_ = 0;
    std::vector<Elt> units_;
    std::vector<Elt> classes_;
    std::vector<std::string> labels_;
    std::vector<Elt> unit_inverses_;
    // norm-class table: for unit class index iu (nonsquare), bit j set iff
    // class j of V is represented by the norm form x^2 - u y^2.
    std::vector<std::uint32_t> norm_classes_;
};

std::string ext_type_name(ExtType t);

} // namespace adclat
