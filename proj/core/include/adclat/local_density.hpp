#pragma once

#include <string>
#include <vector>

#include "adclat/adc.hpp"
#include "adclat/lattice.hpp"

namespace adclat {

// The exponent/factor pair behind the local density of a binary lattice.
struct TRPair {
    long long t = 0;
    Rat r;
};
TRPair t_r_pair(const Field& F, const BinaryProfile& p);

struct LocalDensityReport {
    long long t = 0;
    Rat r;
    int chi = 0;
    Rat gamma; // N(s) N(v) q^{e + floor(t/2)} r
    Rat beta;  // q^e gamma
    long long s_ord = 0, v_ord = 0;
};
LocalDensityReport local_density_gamma(const Lattice& L);

struct MassLocalFactor {
    int chi = 0;
    Rat psi;
    int u = 1;
    long long upsilon = 1;
    Rat w;
    long long S = 0;
    long long conductor_exp = 0;
};
MassLocalFactor mass_local_factor(const Lattice& L);
long long conductor_exponent(const Lattice& L);

// Gross-Keating style invariants f_B, d_B of a primitive binary lattice over
// a dyadic field.
std::pair<long long, long long> fb_db(const Lattice& L);

// --- table regeneration ----------------------------------------------------------

struct TableRow {
    std::string label;
    std::vector<std::string> cells;
};
struct Table {
    std::string name;
    std::vector<std::string> headers;
    std::vector<TableRow> rows;
};
struct TableBundle {
    std::string field_name;
    long long q = 0;
    int e = 0;
    std::vector<Table> tables;
};
// Local quantities of every binary ADC family over F (tables 4 and 5 exist
// for dyadic F only).
TableBundle adc_tables(const Field& F);
std::string render_tables_text(const TableBundle& b);

// GK / EGK display strings of the classified binary families (dyadic).
struct GkRow {
    std::string gk, egk, jor;
};
GkRow gk_egk_row(const Field& F, const Family& fam, int d_delta);

// Pair of binary lattices over a ramified dyadic field (e >= 2) with equal
// GK and EGK data but local densities in ratio 2.
struct CounterexampleReport {
    std::string delta_label;
    int d_delta = 0;
    std::string family1, family2;
    GkRow shared;
    Rat gamma1, gamma2, beta1, beta2;
    int d_minus_a1 = 0, d_minus_a2 = 0;
};
CounterexampleReport gk_egk_counterexample(const Field& F);

} // namespace adclat
