#pragma once

// Class groups and K-groups of hypersurfaces uv = f_1^{a_1} ... f_t^{a_t},
// given by their exponent data, and the cDV report formulas.

#include "abelian_lattice.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace duval {

enum class Setting { global, complete_local };

inline const char* to_string(Setting s) { return s == Setting::global ? "global" : "complete_local"; }

struct ViehwegData {
    std::vector<long> exponents;  // a_1..a_t
    int ambient_extra_vars = 1;   // number of x variables besides u, v

    ViehwegData() = default;
    ViehwegData(std::vector<long> a, int extra = 1) : exponents(std::move(a)), ambient_extra_vars(extra) { validate(); }

    std::size_t branches() const { return exponents.size(); }

    void validate() const {
        if (exponents.empty()) throw std::invalid_argument("ViehwegData: need at least one exponent");
        for (long a : exponents)
            if (a < 1) throw std::invalid_argument("ViehwegData: exponents must be positive, got " + std::to_string(a));
        if (ambient_extra_vars < 0) throw std::invalid_argument("ViehwegData: negative variable count");
    }

    // Krull dimension of C[u,v,x_1..x_n]/(uv - f).
    int krull_dimension() const { return ambient_extra_vars + 1; }
};

// Z^t / (a_1, ..., a_t).
inline FinAbGroup class_group(const ViehwegData& d) {
    d.validate();
    IntMatrix col(d.branches(), 1);
    for (std::size_t i = 0; i < d.branches(); ++i) col(i, 0) = d.exponents[i];
    return cokernel(col);
}

// Stable category of CM modules: the same group, whatever the number of
// double suspensions.
inline FinAbGroup k0_stable_cm(const ViehwegData& d) { return class_group(d); }

inline FinAbGroup g0_surface(const ViehwegData& d) {
    d.validate();
    if (d.krull_dimension() != 2)
        throw std::invalid_argument("g0_surface: needs Krull dimension 2 (one extra variable), got " +
                                    std::to_string(d.krull_dimension()));
    return direct_sum(FinAbGroup::free(1), class_group(d));
}

// Read for the complete local ring at the origin.
inline FinAbGroup g0_cdv_type_a(const ViehwegData& d) { return direct_sum(FinAbGroup::free(1), class_group(d)); }

struct ViehwegReport {
    ViehwegData data;
    Setting setting = Setting::global;
    FinAbGroup cl;
    FinAbGroup k0_stable;
    FinAbGroup g0;  // Z + Cl
    bool g0_from_surface_theorem = false;
};

inline ViehwegReport viehweg_report(const ViehwegData& d, Setting s) {
    ViehwegReport r;
    r.data = d;
    r.setting = s;
    r.cl = class_group(d);
    r.k0_stable = k0_stable_cm(d);
    r.g0_from_surface_theorem = s == Setting::global && d.krull_dimension() == 2;
    r.g0 = r.g0_from_surface_theorem ? g0_surface(d) : g0_cdv_type_a(d);
    return r;
}

// A double suspension f -> f + uv. `inner` is the factorization before,
// `outer` the factorization of the suspended equation in the bigger ring.
struct SuspensionReport {
    FinAbGroup g0;  // Z + K0 of the stable category, unchanged by suspension
    FinAbGroup cl;
    bool g0_equals_z_plus_cl = false;
};

inline SuspensionReport suspension_report(const ViehwegData& inner, const ViehwegData& outer) {
    SuspensionReport r;
    r.g0 = direct_sum(FinAbGroup::free(1), k0_stable_cm(inner));
    r.cl = class_group(outer);
    r.g0_equals_z_plus_cl = r.g0 == direct_sum(FinAbGroup::free(1), r.cl);
    return r;
}

struct CdvReport {
    int curve_count = 0;
    FinAbGroup g0;
    FinAbGroup cl;
    FinAbGroup k0_sg;
    bool g0_equals_z_plus_cl = false;
};

// Isolated cDV singularity whose NCCR has t exceptional curves.
inline CdvReport cdv_report(int t) {
    if (t < 0) throw std::invalid_argument("cdv_report: curve count must be nonnegative");
    CdvReport r;
    r.curve_count = t;
    r.g0 = FinAbGroup::free(static_cast<std::size_t>(t) + 1);
    r.cl = FinAbGroup::free(static_cast<std::size_t>(t));
    r.k0_sg = FinAbGroup::trivial();
    r.g0_equals_z_plus_cl = r.g0 == direct_sum(FinAbGroup::free(1), r.cl);
    return r;
}

}  // namespace duval
