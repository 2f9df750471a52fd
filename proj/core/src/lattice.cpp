#include "adclat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace adclat {

Rat RatMat::det() const {
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n == 3)
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    throw SchemaError("RatMat::det supports rank <= 3");
}

Elt Lattice::det() const {
    const Field& K = *F;
    if (m == 1) return at(0, 0);
    if (m == 2) return K.sub(K.mul(at(0, 0), at(1, 1)), K.mul(at(0, 1), at(1, 0)));
    if (m == 3) {
        Elt t0 = K.sub(K.mul(at(1, 1), at(2, 2)), K.mul(at(1, 2), at(2, 1)));
        Elt t1 = K.sub(K.mul(at(1, 0), at(2, 2)), K.mul(at(1, 2), at(2, 0)));
        Elt t2 = K.sub(K.mul(at(1, 0), at(2, 1)), K.mul(at(1, 1), at(2, 0)));
        return K.add(K.sub(K.mul(at(0, 0), t0), K.mul(at(0, 1), t1)), K.mul(at(0, 2), t2));
    }
    throw SchemaError("Lattice::det supports rank <= 3");
}

Elt Lattice::quad(const std::vector<Elt>& x) const {
    const Field& K = *F;
    Elt s = K.zero();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s = K.add(s, K.mul(K.mul(x[i], x[j]), at(i, j)));
    return s;
}

Elt Lattice::bilin(const std::vector<Elt>& x, int j) const {
    const Field& K = *F;
    Elt s = K.zero();
    for (int i = 0; i < m; ++i) s = K.add(s, K.mul(x[i], at(i, j)));
    return s;
}

Lattice to_local(const Field& F, const RatMat& gram) {
    Lattice L(F, gram.n);
    for (int i = 0; i < gram.n; ++i)
        for (int j = 0; j < gram.n; ++j) L.at(i, j) = F.from_rat(gram.at(i, j));
    return L;
}

Lattice diag_lattice(const Field& F, const std::vector<Elt>& d) {
    Lattice L(F, static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) L.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return L;
}

Lattice scale_lattice(const Lattice& L, const Elt& c) {
    Lattice R = L;
    for (Elt& x : R.g) x = L.F->mul(x, c);
    return R;
}

Lattice scale_lattice_pi(const Lattice& L, long long k) {
    Lattice R = L;
    for (Elt& x : R.g) x = L.F->mul_pi_pow(x, k);
    return R;
}

Lattice orthogonal_sum(const Lattice& A, const Lattice& B) {
    Lattice R(*A.F, A.m + B.m);
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.m; ++j) R.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.m; ++i)
        for (int j = 0; j < B.m; ++j) R.at(A.m + i, A.m + j) = B.at(i, j);
    return R;
}

Lattice basis_change(const Lattice& L, const std::vector<long long>& T) {
    const Field& K = *L.F;
    int m = L.m;
    std::vector<Elt> t(m * m);
    for (int i = 0; i < m * m; ++i) t[i] = K.from_int(T[i]);
    Lattice R(K, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Elt s = K.zero();
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    s = K.add(s, K.mul(K.mul(t[k * m + i], t[l * m + j]), L.at(k, l)));
            R.at(i, j) = s;
        }
    return R;
}

bool is_nondegenerate(const Lattice& L) { return !L.F->is_zero(L.det()); }

long long scale_order(const Lattice& L) {
    long long s = kValInf;
    for (const Elt& x : L.g)
        if (!L.F->is_zero(x)) s = std::min(s, x.v);
    return s;
}

long long norm_order(const Lattice& L) {
    const Field& K = *L.F;
    long long n = K.e() + scale_order(L);
    for (int i = 0; i < L.m; ++i)
        if (!K.is_zero(L.at(i, i))) n = std::min(n, L.at(i, i).v);
    return n;
}

long long volume_order(const Lattice& L) {
    Elt d = L.det();
    if (L.F->is_zero(d)) throw PrecisionError("volume of degenerate lattice");
    return d.v;
}

bool is_integral(const Lattice& L) { return norm_order(L) >= 0; }

// --- Jordan splitting (non-dyadic) -------------------------------------------

std::vector<JordanComponent> jordan_split(const Lattice& L) {
    const Field& K = *L.F;
    if (K.dyadic()) throw SchemaError("jordan_split: use good_bong for dyadic fields");
    if (!is_nondegenerate(L)) throw SchemaError("jordan_split of degenerate lattice");
    int m = L.m;
    std::vector<Elt> G = L.g;
    auto at = [&](int i, int j) -> Elt& { return G[i * m + j]; };
    std::vector<int> active(m);
    std::iota(active.begin(), active.end(), 0);
    std::vector<Elt> diag;

    while (!active.empty()) {
        long long best = kValInf;
        for (int i : active)
            for (int j : active) {
                const Elt& x = at(i, j);
                if (!K.is_zero(x)) best = std::min(best, x.v);
            }
        if (best == kValInf) throw PrecisionError("jordan_split: block vanishes at precision");
        int bi = -1, bj = -1;
        for (int i : active)
            if (!K.is_zero(at(i, i)) && at(i, i).v == best) {
                bi = bj = i;
                break;
            }
        if (bi < 0)
            for (int i : active) {
                for (int j : active)
                    if (i != j && !K.is_zero(at(i, j)) && at(i, j).v == best) {
                        bi = i;
                        bj = j;
                        break;
                    }
                if (bi >= 0) break;
            }
        if (bi != bj) {
            // pull the minimum onto the diagonal: e_bi += e_bj (2 is a unit)
            for (int k : active) {
                Elt v = K.add(at(bi, k), at(bj, k));
                at(bi, k) = v;
            }
            for (int k : active) at(k, bi) = at(bi, k);
            at(bi, bi) = K.add(at(bi, bi), at(bi, bj)); // row op already applied once
        }
        int pvt = bi;
        Elt piv = at(pvt, pvt);
        if (K.is_zero(piv) || piv.v != best) throw InternalError("jordan pivot lost minimality");
        // clear row/column of pvt
        std::vector<int> rest;
        for (int i : active)
            if (i != pvt) rest.push_back(i);
        for (int i : rest) {
            Elt t = K.neg(K.div(at(i, pvt), piv));
            if (!K.is_zero(t)) {
                for (int k : rest) at(i, k) = K.add(at(i, k), K.mul(t, at(pvt, k)));
                at(pvt, i) = K.zero();
                at(i, pvt) = K.zero();
                for (int k : rest)
                    if (k != i) at(k, i) = at(i, k);
            }
        }
        diag.push_back(piv);
        active = rest;
    }

    std::stable_sort(diag.begin(), diag.end(), [](const Elt& x, const Elt& y) { return x.v < y.v; });
    std::vector<JordanComponent> comps;
    for (const Elt& d : diag) {
        if (comps.empty() || comps.back().scale != d.v) comps.push_back({d.v, {}});
        comps.back().diag.push_back(d);
    }
    return comps;
}

// --- good BONGs ---------------------------------------------------------------

namespace {

// enumerate representatives of O/pi^w as field elements, canonical lifts
std::vector<Elt> coset_reps(const Field& F, int w) {
    std::vector<Elt> out;
    if (F.kind() == FieldKind::Qp) {
        long long n = ipow(F.p(), w);
        for (long long i = 0; i < n; ++i) out.push_back(F.from_coords(i, 0));
    } else if (F.kind() == FieldKind::Unramified2) {
        long long n = 1LL << w;
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) out.push_back(F.from_coords(i, j));
    } else {
        long long n0 = 1LL << ((w + 1) / 2), n1 = 1LL << (w / 2);
        for (long long i = 0; i < n0; ++i)
            for (long long j = 0; j < n1; ++j) out.push_back(F.from_coords(i, j));
    }
    return out;
}

// candidate norm generators of L: primitive coefficient vectors modulo pi^w
// whose Q-value has order norm_order(L)
std::vector<std::vector<Elt>> norm_generator_candidates(const Lattice& L, int w) {
    const Field& K = *L.F;
    long long n0 = norm_order(L);
    std::vector<Elt> reps = coset_reps(K, w);
    std::vector<std::vector<Elt>> out;
    std::vector<size_t> idx(L.m, 0);
    while (true) {
        std::vector<Elt> x(L.m);
        bool primitive = false;
        for (int i = 0; i < L.m; ++i) {
            x[i] = reps[idx[i]];
            if (!K.is_zero(x[i]) && x[i].v == 0) primitive = true;
        }
        if (primitive) {
            Elt qv = L.quad(x);
            if (!K.is_zero(qv) && qv.v == n0) out.push_back(x);
        }
        int pos = 0;
        while (pos < L.m && ++idx[pos] == reps.size()) idx[pos++] = 0;
        if (pos == L.m) break;
    }
    return out;
}

// Gram of the projection of L onto the orthogonal complement of x
Lattice project_away(const Lattice& L, const std::vector<Elt>& x) {
    const Field& K = *L.F;
    int m = L.m;
    int pvt = -1;
    for (int i = 0; i < m && pvt < 0; ++i)
        if (!K.is_zero(x[i]) && x[i].v == 0) pvt = i;
    if (pvt < 0) throw InternalError("project_away: non-primitive vector");
    // basis (x, e_j for j != pvt)
    std::vector<std::vector<Elt>> basis;
    basis.push_back(x);
    for (int j = 0; j < m; ++j) {
        if (j == pvt) continue;
        std::vector<Elt> ej(m, K.zero());
        ej[j] = K.one();
        basis.push_back(ej);
    }
    std::vector<Elt> B(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Elt s = K.zero();
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) s = K.add(s, K.mul(K.mul(basis[a][i], basis[b][j]), L.at(i, j)));
            B[a * m + b] = s;
        }
    Elt q = B[0];
    Lattice P(K, m - 1);
    for (int a = 1; a < m; ++a)
        for (int b = 1; b < m; ++b)
            P.at(a - 1, b - 1) = K.sub(B[a * m + b], K.div(K.mul(B[a * m + 0], B[b * m + 0]), q));
    return P;
}

bool search_bong(const Lattice& L, int widen, std::vector<Elt>& out,
                 const std::function<bool(const std::vector<Elt>&)>& accept) {
    const Field& K = *L.F;
    if (L.m == 1) {
        const Elt& a = L.at(0, 0);
        if (K.is_zero(a)) return false;
        out = {a};
        return accept(out);
    }
    for (const auto& x : norm_generator_candidates(L, widen)) {
        Elt q = L.quad(x);
        Lattice P = project_away(L, x);
        std::vector<Elt> tail;
        bool ok = search_bong(P, widen, tail, [&](const std::vector<Elt>& t) {
            std::vector<Elt> full;
            full.push_back(q);
            full.insert(full.end(), t.begin(), t.end());
            return accept(full);
        });
        if (ok) {
            out.clear();
            out.push_back(q);
            out.insert(out.end(), tail.begin(), tail.end());
            return true;
        }
    }
    return false;
}

std::vector<Rat> alphas_from_diag(const Field& F, const std::vector<Elt>& a,
                                  const std::vector<long long>& R, const std::vector<int>& d_adj) {
    int m = static_cast<int>(a.size());
    std::vector<Rat> alpha;
    for (int i = 1; i <= m - 1; ++i) {
        Rat best = Rat(R[i] - R[i - 1]) / 2 + Rat(F.e());
        for (int j = 1; j <= m - 1; ++j) {
            if (d_adj[j - 1] == kDefInf) continue;
            long long t;
            if (j <= i)
                t = R[i] - R[j - 1] + d_adj[j - 1];
            else
                t = R[j] - R[i - 1] + d_adj[j - 1];
            best = std::min(best, Rat(t));
        }
        alpha.push_back(best);
    }
    return alpha;
}

} // namespace

BongInvariants good_bong(const Lattice& L) {
    const Field& K = *L.F;
    if (L.m < 1 || L.m > 3) throw SchemaError("good_bong supports rank 1..3");
    if (!is_nondegenerate(L)) throw SchemaError("good_bong of degenerate lattice");

    std::vector<Elt> diag;
    if (!K.dyadic()) {
        for (const auto& comp : jordan_split(L))
            for (const Elt& d : comp.diag) diag.push_back(d);
    } else {
        auto good = [&](const std::vector<Elt>& cand) {
            if (static_cast<int>(cand.size()) != L.m) return false;
            for (size_t i = 0; i + 2 < cand.size(); ++i)
                if (cand[i].v > cand[i + 2].v) return false;
            return true;
        };
        bool found = false;
        for (int w = 1; w <= 2 * K.e() + 3 && !found; ++w)
            found = search_bong(L, w, diag, good);
        if (!found) throw Inconclusive("good BONG search exhausted at coset bound 2e+3");
    }

    BongInvariants inv;
    inv.a = diag;
    for (const Elt& x : diag) inv.R.push_back(x.v);
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        inv.d_adj.push_back(K.defect(K.neg(K.mul(diag[i], diag[i + 1]))));
    inv.alpha = alphas_from_diag(K, diag, inv.R, inv.d_adj);
    inv.norm_ord = norm_order(L);
    inv.scale_ord = scale_order(L);
    inv.volume_ord = volume_order(L);
    if (L.m == 2 && K.dyadic()) {
        long long mine = std::min<long long>(K.e(), boost::rational_cast<long long>(
                                                         inv.alpha[0].denominator() == 1 ? inv.alpha[0] : Rat(K.e())));
        inv.weight_ord = inv.R[0] + mine;
    }
    inv.det_class = K.class_index(L.det());

    // consistency: the BONG realizes the lattice invariants
    long long rsum = 0;
    Elt prod = K.one();
    for (const Elt& x : diag) {
        rsum += x.v;
        prod = K.mul(prod, x);
    }
    if (rsum != inv.volume_ord || K.class_index(prod) != inv.det_class)
        throw InternalError("BONG determinant mismatch");
    if (inv.R[0] != inv.norm_ord) throw InternalError("BONG norm mismatch");
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
        long long dd = inv.d_adj[i] == kDefInf ? 0 : inv.d_adj[i];
        if (inv.R[i + 1] - inv.R[i] + dd < 0 && inv.d_adj[i] != kDefInf)
            throw InternalError("BONG adjacency inequality violated");
        if (inv.R[i + 1] - inv.R[i] + 2 * K.e() < 0) throw InternalError("BONG 2e inequality violated");
    }
    return inv;
}

BinaryProfile binary_profile(const Lattice& L) {
    const Field& K = *L.F;
    if (L.m != 2) throw SchemaError("binary_profile needs rank 2");
    BongInvariants bong = good_bong(L);
    BinaryProfile p;
    p.R1 = bong.R[0];
    p.R2 = bong.R[1];
    p.R = p.R2 - p.R1;
    Elt a = K.div(bong.a[1], bong.a[0]);
    p.a_class = K.class_index(a);
    p.d_minus_a = K.defect(K.neg(a));
    p.alpha = std::min(Rat(p.R) / 2 + Rat(K.e()),
                       p.d_minus_a == kDefInf ? Rat(p.R) / 2 + Rat(K.e()) : Rat(p.R + p.d_minus_a));
    p.norm_ord = bong.norm_ord;
    p.scale_ord = bong.scale_ord;
    p.volume_ord = bong.volume_ord;
    if (p.norm_ord != p.R1 || p.volume_ord != p.R1 + p.R2)
        throw InternalError("binary profile inconsistent with ideals");
    return p;
}

long long weight_order(const Lattice& L) {
    const Field& K = *L.F;
    if (!K.dyadic() || L.m != 2) throw SchemaError("weight_order: binary dyadic lattices only");
    BinaryProfile p = binary_profile(L);
    Rat mn = std::min(Rat(K.e()), p.alpha);
    return p.R1 + boost::rational_cast<long long>(mn);
}

Rat d_bracket(const Field& F, const BongInvariants& bong, const Elt& c, int i, int j) {
    int m = static_cast<int>(bong.a.size());
    Elt prod = c;
    for (int k = i; k <= j; ++k) prod = F.mul(prod, bong.a[k - 1]);
    int d = F.defect(prod);
    Rat best = d == kDefInf ? Rat(kDefInf) : Rat(d);
    if (i - 1 >= 1) best = std::min(best, bong.alpha[i - 2]);
    if (j <= m - 1) best = std::min(best, bong.alpha[j - 1]);
    return best;
}

} // namespace adclat
