#pragma once

#include <optional>
#include <vector>

#include "adclat/field.hpp"
#include "adclat/rat.hpp"

namespace adclat {

// Symmetric matrix of exact rationals: the portable presentation of a
// quadratic lattice (entries are B(x_i, x_j), so Q(x_i) on the diagonal).
struct RatMat {
    int n = 0;
    std::vector<Rat> a;

    RatMat() = default;
    explicit RatMat(int dim) : n(dim), a(dim * dim, Rat(0)) {}
    Rat& at(int i, int j) { return a[i * n + j]; }
    const Rat& at(int i, int j) const { return a[i * n + j]; }
    static RatMat diag(std::vector<Rat> d) {
        RatMat m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n; ++i) m.at(i, i) = d[i];
        return m;
    }
    Rat det() const;
};

// A quadratic lattice over a local field, presented by its Gram matrix.
struct Lattice {
    const Field* F = nullptr;
    int m = 0;
    std::vector<Elt> g;

    Lattice() = default;
    Lattice(const Field& field, int dim) : F(&field), m(dim), g(dim * dim, field.zero()) {}
    Elt& at(int i, int j) { return g[i * m + j]; }
    const Elt& at(int i, int j) const { return g[i * m + j]; }
    Elt det() const;
    Elt quad(const std::vector<Elt>& x) const;           // Q(x)
    Elt bilin(const std::vector<Elt>& x, int j) const;   // B(x, e_j)
};

Lattice to_local(const Field& F, const RatMat& gram);
Lattice diag_lattice(const Field& F, const std::vector<Elt>& d);
Lattice scale_lattice(const Lattice& L, const Elt& c);
Lattice scale_lattice_pi(const Lattice& L, long long k);
Lattice orthogonal_sum(const Lattice& A, const Lattice& B);
// Gram of the same lattice in a new basis, T integral with unit determinant.
Lattice basis_change(const Lattice& L, const std::vector<long long>& T);

bool is_nondegenerate(const Lattice& L);
bool is_integral(const Lattice& L); // n(L) ⊆ O_F

long long scale_order(const Lattice& L);
long long norm_order(const Lattice& L);
long long volume_order(const Lattice& L);
// Leading weight order R_1 + min(e, alpha_1); binary dyadic lattices only.
long long weight_order(const Lattice& L);

struct JordanComponent {
    long long scale = 0;
    std::vector<Elt> diag;
};
// Non-dyadic Jordan splitting into modular components of increasing scale.
std::vector<JordanComponent> jordan_split(const Lattice& L);

// Good BONG of a lattice of rank <= 3 together with the derived invariants.
struct BongInvariants {
    std::vector<Elt> a;          // BONG diagonal a_1..a_m
    std::vector<long long> R;    // R_i = ord(a_i)
    std::vector<Rat> alpha;      // alpha_1..alpha_{m-1}
    std::vector<int> d_adj;      // d(-a_i a_{i+1}), kDefInf = infinity
    long long norm_ord = 0;
    long long scale_ord = 0;
    long long volume_ord = 0;
    std::optional<long long> weight_ord; // binary dyadic only
    int det_class = 0;                   // class index of dL
};
BongInvariants good_bong(const Lattice& L);

// Invariants of a binary lattice: a(L) = a_2/a_1, R = R_2 - R_1 and
// alpha = min{R/2 + e, R + d(-a)}, with the sorted Jordan diagonal playing
// the role of the BONG over non-dyadic fields.
struct BinaryProfile {
    int a_class = 0;  // class index of a(L)
    long long R1 = 0, R2 = 0, R = 0;
    Rat alpha;
    int d_minus_a = 0; // kDefInf = infinity
    long long norm_ord = 0, scale_ord = 0, volume_ord = 0;
};
BinaryProfile binary_profile(const Lattice& L);

// d[c a_{i..j}] = min{d(c a_i ... a_j), alpha_{i-1}, alpha_j}, undefined
// alpha_0 / alpha_m terms dropped. Indices are 1-based as in the invariant
// calculus; used by the spinor cross-checks.
Rat d_bracket(const Field& F, const BongInvariants& bong, const Elt& c, int i, int j);

} // namespace adclat
