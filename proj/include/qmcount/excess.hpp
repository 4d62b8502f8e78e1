#pragma once

// Excess intersection contributions of quasi-stable strata Z of the proper
// quasimap locus. For the equation bundle E with c(E) = prod (1 + H + d h_i)
// and Var = QMap x prod c_i^X, the excess bundle over Z has
//
//   c(B_Z) = c(E)|_Z . c(Z) / ( c(QMap)|_Z . prod c(c_i^X)|_Z )
//
// and the stratum's contribution to QM - KM is the integral of c(B_Z) over Z.
// Strata are user-described: intrinsic ring, restriction of H and the h_i,
// intrinsic total Chern class.

#include "qmcount/counting.hpp"
#include "qmcount/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmc {

struct Stratum {
    std::string label;
    ring_ptr ring;
    std::map<std::string, Class> restriction;  // generator name -> image; absent means 0
    Class chern_Z;
    std::optional<Class> chern_cycles;  // override of prod c(c_i^X)|_Z

    explicit Stratum(std::string lbl, ring_ptr r)
        : label(std::move(lbl)), ring(std::move(r)), chern_Z(Class::constant(ring, 1)) {}

    // zero dimensional stratum; every restriction image is 0
    static Stratum point(std::string label) {
        return Stratum(std::move(label), make_ring({}));
    }

    // Z = P^dim with hyperplane class z, H restricted to z, c(Z) = (1+z)^{dim+1}
    static Stratum projective(std::string label, long dim) {
        Stratum s(std::move(label), make_ring({{"z", static_cast<int>(dim)}}));
        s.chern_Z = pow(Class::constant(s.ring, 1) + s.zeta(), dim + 1);
        s.restriction.emplace("H", s.zeta());
        return s;
    }

    // Z = P^{a_1} x ... x P^{a_s} with classes z1..zs; restriction left to the
    // caller, c(Z) = prod (1+z_i)^{a_i+1}
    static Stratum product(std::string label, const std::vector<long>& dims) {
        std::vector<std::pair<std::string, int>> gens;
        for (std::size_t i = 0; i < dims.size(); ++i)
            gens.emplace_back("z" + std::to_string(i + 1), static_cast<int>(dims[i]));
        Stratum s(std::move(label), make_ring(std::move(gens)));
        Class c = Class::constant(s.ring, 1);
        for (std::size_t i = 0; i < dims.size(); ++i)
            c = c * pow(Class::constant(s.ring, 1) + s.zeta(i), dims[i] + 1);
        s.chern_Z = c;
        return s;
    }

    Class zeta(std::size_t i = 0) const { return Class::generator(ring, ring->name(i)); }
    Class zero() const { return Class(ring); }
    Class unit() const { return Class::constant(ring, 1); }

    Stratum& map_H(Class img) { return map_gen("H", std::move(img)); }
    // cycle index is 0-based; names follow the counting ring convention
    Stratum& map_h(std::size_t cycle, Class img, std::size_t factor = 0,
                   std::size_t nfactors = 1) {
        return map_gen(h_name(cycle, factor, nfactors), std::move(img));
    }
    Stratum& map_gen(const std::string& name, Class img) {
        restriction.insert_or_assign(name, std::move(img));
        return *this;
    }
    Stratum& with_chern_Z(Class c) {
        chern_Z = std::move(c);
        return *this;
    }
    Stratum& with_chern_cycles(Class c) {
        chern_cycles = std::move(c);
        return *this;
    }

    Class image_of(const std::string& name) const {
        auto it = restriction.find(name);
        return it == restriction.end() ? Class(ring) : it->second;
    }
};

// c(B_Z) in the intrinsic ring of Z
inline Class excess_chern(const CountingData& D, const Stratum& Z) {
    D.validate();
    const Class one = Z.unit();
    Class rH = Z.image_of("H");

    Class numerator = Z.chern_Z;
    for (std::size_t i = 0; i < D.cycles.size(); ++i) {
        Class lin = rH;
        for (std::size_t j = 0; j < D.ks.size(); ++j)
            if (D.cycles[i].source_dims[j] > 0)
                lin = lin + mpz_class(D.ds[j]) * Z.image_of(h_name(i, j, D.ks.size()));
        numerator = numerator * pow(one + lin, D.cycles[i].target_codim);
    }

    long N = to_long(D.moduli_dim(), "moduli dimension");
    Class denominator = pow(one + rH, N + 1);
    if (Z.chern_cycles) {
        denominator = denominator * *Z.chern_cycles;
    } else {
        // default c(c_i^X)|_Z: trivial for points, (1 + image(h))^{dim+1}
        // for projective source cycles, since c(P^m) = (1+h)^{m+1}
        for (std::size_t i = 0; i < D.cycles.size(); ++i)
            for (std::size_t j = 0; j < D.ks.size(); ++j)
                if (D.cycles[i].source_dims[j] > 0)
                    denominator = denominator *
                                  pow(one + Z.image_of(h_name(i, j, D.ks.size())),
                                      D.cycles[i].source_dims[j] + 1);
    }
    return numerator * invert_unit(denominator);
}

// integral of c(B_Z) over Z
inline mpz_class pqm_contribution(const CountingData& D, const Stratum& Z) {
    return integrate(excess_chern(D, Z));
}

struct Ledger {
    mpz_class qm;
    std::optional<mpz_class> km;
    std::vector<std::pair<std::string, mpz_class>> contributions;
    bool quasi_stable = true;
    mpz_class naive_sum;                // sum of the per stratum integrals
    std::optional<mpz_class> residual;  // quasi-stable: qm - km - naive_sum;
                                        // otherwise qm - km (needs Segre classes)
};

// For quasi-stable data QM = KM + sum of stratum contributions and the
// residual verifies as 0. Non-quasistable runs report the naive sum and the
// residual separately; the per stratum integrals are not valid contributions
// because the strata intersect.
inline Ledger build_ledger(const CountingData& D, std::optional<mpz_class> km,
                           const std::vector<Stratum>& strata, bool quasi_stable,
                           bool force = false) {
    Ledger L;
    L.qm = qm_number(D, force);
    L.km = std::move(km);
    L.quasi_stable = quasi_stable;
    L.naive_sum = 0;
    for (const auto& Z : strata) {
        mpz_class c = pqm_contribution(D, Z);
        L.naive_sum += c;
        L.contributions.emplace_back(Z.label, std::move(c));
    }
    if (L.km)
        L.residual = quasi_stable ? mpz_class(L.qm - *L.km - L.naive_sum)
                                  : mpz_class(L.qm - *L.km);
    return L;
}

}  // namespace qmc
