#pragma once

// Counting data for quasimaps P^{k_1} x ... x P^{k_s} --> P^n of multi-degree
// (d_1,...,d_s), dimension formulas, QM numbers as Euler class integrals and
// easy KM numbers. The single source factor case is s = 1 throughout.

#include "qmcount/ring.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace qmc {

struct counting_error : std::runtime_error {
    explicit counting_error(const std::string& what) : std::runtime_error(what) {}
};

inline mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// dim QMap_d(P^k, P^n) = (n+1) C(d+k, k) - 1
inline mpz_class n_knd(long k, long n, long d) {
    if (k < 0 || n < 0 || d < 0) throw counting_error("n_knd: negative argument");
    return (n + 1) * binom(d + k, k) - 1;
}

// product source: (n+1) prod_i C(d_i + k_i, k_i) - 1
inline mpz_class n_multi(const std::vector<long>& ks, long n, const std::vector<long>& ds) {
    if (ks.size() != ds.size()) throw counting_error("n_multi: ks and ds length mismatch");
    mpz_class r = n + 1;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 0 || ds[i] < 0) throw counting_error("n_multi: negative argument");
        r *= binom(ds[i] + ks[i], ks[i]);
    }
    return r - 1;
}

inline long to_long(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw counting_error(std::string(what) + " does not fit a machine word");
    return v.get_si();
}

// a source cycle c^X (product of linear subspaces, one dimension per source
// factor) mapped to a target cycle c^Y cut out by target_codim hyperplanes
struct CyclePair {
    std::vector<long> source_dims;
    long target_codim = 0;

    CyclePair() = default;
    CyclePair(std::vector<long> dims, long codim)
        : source_dims(std::move(dims)), target_codim(codim) {}
    CyclePair(long dim, long codim) : source_dims{dim}, target_codim(codim) {}

    long total_source_dim() const {
        return std::accumulate(source_dims.begin(), source_dims.end(), 0L);
    }
};

struct CountingData {
    std::vector<long> ks;
    long n = 0;
    std::vector<long> ds;
    std::vector<CyclePair> cycles;

    CountingData() = default;
    CountingData(long k, long n_, long d, std::vector<CyclePair> cyc = {})
        : ks{k}, n(n_), ds{d}, cycles(std::move(cyc)) {}
    CountingData(std::vector<long> ks_, long n_, std::vector<long> ds_,
                 std::vector<CyclePair> cyc = {})
        : ks(std::move(ks_)), n(n_), ds(std::move(ds_)), cycles(std::move(cyc)) {}

    void validate() const {
        if (ks.empty() || ks.size() != ds.size())
            throw counting_error("counting data: ks and ds must be non-empty and of equal length");
        for (const auto& c : cycles) {
            if (c.source_dims.size() != ks.size())
                throw counting_error("cycle source dimensions must match the source factors");
            for (std::size_t j = 0; j < ks.size(); ++j)
                if (c.source_dims[j] < 0 || c.source_dims[j] > ks[j])
                    throw counting_error("cycle source dimension out of range");
            if (c.target_codim < 0 || c.target_codim > n + 1)
                throw counting_error("cycle target codimension out of range");
        }
    }

    mpz_class moduli_dim() const { return n_multi(ks, n, ds); }
};

// virtual dimension n + sum dim c_i^X - sum codim c_i^Y; zero means balanced
inline mpz_class virtual_dimension(const CountingData& D) {
    D.validate();
    mpz_class r = D.moduli_dim();
    for (const auto& c : D.cycles) r += c.total_source_dim() - c.target_codim;
    return r;
}

// name of the source hyperplane class attached to cycle i, factor j
inline std::string h_name(std::size_t cycle, std::size_t factor, std::size_t nfactors) {
    std::string s = "h" + std::to_string(cycle + 1);
    if (nfactors > 1) s += "_" + std::to_string(factor + 1);
    return s;
}

// H^*(QMap x prod_i c_i^X): H of nilpotency n_knd, one h per positive
// dimensional cycle factor with nilpotency equal to the cycle's dimension
inline ring_ptr counting_ring(const CountingData& D) {
    long N = to_long(D.moduli_dim(), "moduli dimension");
    std::vector<std::pair<std::string, int>> gens{{"H", static_cast<int>(N)}};
    for (std::size_t i = 0; i < D.cycles.size(); ++i)
        for (std::size_t j = 0; j < D.ks.size(); ++j)
            if (D.cycles[i].source_dims[j] > 0)
                gens.emplace_back(h_name(i, j, D.ks.size()),
                                  static_cast<int>(D.cycles[i].source_dims[j]));
    return make_ring(std::move(gens));
}

// prod_i (H + sum_j d_j h_{i,j})^{codim_i} over the counting ring
inline Class euler_integrand(const CountingData& D, const ring_ptr& ring) {
    Class r = Class::constant(ring, 1);
    Class H = Class::generator(ring, "H");
    for (std::size_t i = 0; i < D.cycles.size(); ++i) {
        Class lin = H;
        for (std::size_t j = 0; j < D.ks.size(); ++j)
            if (D.cycles[i].source_dims[j] > 0)
                lin = lin + mpz_class(D.ds[j]) *
                                Class::generator(ring, h_name(i, j, D.ks.size()));
        r = r * pow(lin, D.cycles[i].target_codim);
    }
    return r;
}

// QM number: integral of the Euler class over QMap x prod c_i^X.
// Unbalanced data is rejected unless force is set, in which case the top
// coefficient is returned anyway (it is not the advertised count).
inline mpz_class qm_number(const CountingData& D, bool force = false) {
    mpz_class vd = virtual_dimension(D);
    if (vd != 0 && !force)
        throw counting_error("unbalanced counting data: virtual dimension is " + vd.get_str());
    ring_ptr ring = counting_ring(D);
    return integrate(euler_integrand(D, ring));
}

// easy problems (all source cycles points): 1 if the codims fill the moduli
// dimension exactly, else 0
inline int km_easy(long k, long n, long d, const std::vector<long>& codims) {
    mpz_class sum = 0;
    for (long c : codims) sum += c;
    return sum == n_knd(k, n, d) ? 1 : 0;
}

}  // namespace qmc
