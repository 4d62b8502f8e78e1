#pragma once

// Stratification of QMap_d(P^k, P^n) by the type of the proper quasimap
// locus: codimensions and closure shapes (up to birational equivalence) of
// the freckle and scar strata, as tabulated for k = 1, 2.

#include "qmcount/counting.hpp"

#include <string>
#include <vector>

namespace qmc {

struct StratumRow {
    enum class Kind { maps, freckle, scar };
    Kind kind = Kind::maps;
    long param = 0;  // freckle count m, or scar degree delta; 0 for maps
    long codim = 0;
    std::string shape;
    bool generic_caveat = false;  // emitted without a small-d vanishing check
};

// codimension m(n+1-k) of the m-freckle stratum, valid for n >= k where
// freckles are isolated conditions
inline long freckle_codim(long k, long n, long m) {
    if (m < 1) throw counting_error("freckle_codim: m must be >= 1");
    if (n < k)
        throw counting_error("freckle_codim: n < k, every quasimap is proper (see scar_locus_dim)");
    return m * (n + 1 - k);
}

// generic dimension k-n-1 of the proper quasimap locus when n < k
inline long scar_locus_dim(long k, long n, long d) {
    if (n >= k) throw counting_error("scar_locus_dim: requires n < k");
    if (d < 1) throw counting_error("scar_locus_dim: requires d >= 1");
    return k - n - 1;
}

// the closure of the degree-delta scar stratum for source P^2 is
// P^{n_{2,n,d-delta}} x P^{n_{2,0,delta}}; returns the two factor dimensions
inline std::pair<long, long> scar_closure_shape(long n, long d, long delta) {
    if (delta < 1 || delta > d) throw counting_error("scar_closure_shape: delta out of range");
    return {to_long(n_knd(2, n, d - delta), "scar factor dimension"),
            to_long(n_knd(2, 0, delta), "scar factor dimension")};
}

namespace detail {

inline std::string conf_name(long m, long k) {
    if (m == 1) return "P^" + std::to_string(k);
    return "Conf_" + std::to_string(m) + "(P^" + std::to_string(k) + ")";
}

}  // namespace detail

inline std::vector<StratumRow> stratification_table(long k, long n, long d) {
    if (k != 1 && k != 2) throw counting_error("stratification_table: only k = 1, 2 supported");
    if (d < 1) throw counting_error("stratification_table: requires d >= 1");
    std::vector<StratumRow> rows;
    long N = to_long(n_knd(k, n, d), "moduli dimension");

    if (n < k) {
        // every quasimap is proper; the generic stratum carries a scar point
        rows.push_back({StratumRow::Kind::freckle, 1, 0, "P^" + std::to_string(N), false});
        for (long delta = 1; delta <= d; ++delta) {
            auto [a, b] = scar_closure_shape(n, d, delta);
            rows.push_back({StratumRow::Kind::scar, delta, N - a - b,
                            "P^" + std::to_string(a) + " x P^" + std::to_string(b), false});
        }
        return rows;
    }

    rows.push_back({StratumRow::Kind::maps, 0, 0, "P^" + std::to_string(N), false});

    if (k == 1) {
        // m-freckle closure QMap_{d-m}(P^1,P^n) x P^m
        for (long m = 1; m <= d; ++m)
            rows.push_back({StratumRow::Kind::freckle, m, freckle_codim(1, n, m),
                            "QMap_" + std::to_string(d - m) + "(P^1,P^" + std::to_string(n) +
                                ") x P^" + std::to_string(m),
                            false});
        return rows;
    }

    // k = 2: m-freckle rows, capped where the stratum is known to vanish
    // (d = 1: a line through 2 points is not free; d = 2, n = 2: a conic in
    // P^2 is determined by 5 points); no general criterion for other d
    long m_max;
    bool caveat = false;
    if (d == 1) {
        m_max = 1;
    } else if (d == 2 && n == 2) {
        m_max = 4;
    } else {
        m_max = N / (n + 1);  // fiber dimension N - m(n+1) must stay >= 0
        caveat = true;
    }
    for (long m = 1; m <= m_max; ++m) {
        long fiber = N - m * (n + 1);
        rows.push_back({StratumRow::Kind::freckle, m, freckle_codim(2, n, m),
                        "P^" + std::to_string(fiber) + "-bundle over " + detail::conf_name(m, 2),
                        caveat});
    }
    for (long delta = 1; delta <= d; ++delta) {
        auto [a, b] = scar_closure_shape(n, d, delta);
        rows.push_back({StratumRow::Kind::scar, delta, N - a - b,
                        "P^" + std::to_string(a) + " x P^" + std::to_string(b), false});
    }
    return rows;
}

}  // namespace qmc
