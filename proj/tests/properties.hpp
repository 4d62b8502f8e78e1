#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each check throws std::runtime_error with a description on the
// first counterexample.

#include "qmcount/counting.hpp"
#include "qmcount/ring.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmc_test {

using qmc::Class;
using qmc::CountingData;
using qmc::CyclePair;
using qmc::ring_ptr;

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error("property violated: " + what);
}

inline int coeff_for(std::mt19937_64& rng) {
    return static_cast<int>(rng() % 19) - 9;
}

inline ring_ptr random_ring(std::mt19937_64& rng) {
    static const char* names[] = {"a", "b", "c"};
    std::uniform_int_distribution<int> ngen(1, 3), order(1, 6);
    int g = ngen(rng);
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 0; i < g; ++i) gens.emplace_back(names[i], order(rng));
    return qmc::make_ring(std::move(gens));
}

inline Class random_class(std::mt19937_64& rng, const ring_ptr& ring, bool unit = false) {
    std::uniform_int_distribution<int> nterm(0, 5), coeff(-9, 9);
    Class r = Class(ring);
    if (unit) r = Class::constant(ring, rng() % 2 ? 1 : -1);
    int terms = nterm(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(ring->size());
        bool zero_exp = true;
        for (std::size_t i = 0; i < ring->size(); ++i) {
            e[i] = static_cast<int>(rng() % (ring->order(i) + 1));
            zero_exp = zero_exp && e[i] == 0;
        }
        if (unit && zero_exp) continue;  // keep the constant term a unit
        mpz_class c = coeff(rng);
        if (rng() % 8 == 0) c *= mpz_class("1000000000000000000000");  // stress big ints
        r = r + Class::monomial(ring, e, c);
    }
    return r;
}

// ring axioms, unit inversion, integrate linearity, substitute morphism
inline void ring_axioms_check(int iterations, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < iterations; ++it) {
        ring_ptr ring = random_ring(rng);
        Class a = random_class(rng, ring);
        Class b = random_class(rng, ring);
        Class c = random_class(rng, ring);
        require((a + b) + c == a + (b + c), "additive associativity");
        require(a + b == b + a, "additive commutativity");
        require((a * b) * c == a * (b * c), "multiplicative associativity");
        require(a * b == b * a, "multiplicative commutativity");
        require(a * (b + c) == a * b + a * c, "distributivity");
        require(qmc::integrate(a + b) == qmc::integrate(a) + qmc::integrate(b),
                "integrate linearity");

        Class u = random_class(rng, ring, true);
        require(u * qmc::invert_unit(u) == Class::constant(ring, 1), "unit inversion");

        // substitute along a random endomorphism is a ring morphism; images
        // c*g_i + c'*top respect the nilpotency relations (top kills every
        // positive-degree monomial, so (c g_i + c' top)^{m_i+1} = 0)
        std::map<std::string, Class> images;
        for (std::size_t i = 0; i < ring->size(); ++i) {
            Class img = mpz_class(coeff_for(rng)) * Class::generator(ring, ring->name(i)) +
                        Class::monomial(ring, ring->top(), coeff_for(rng));
            images.emplace(ring->name(i), std::move(img));
        }
        require(qmc::substitute(a + b, ring, images) ==
                    qmc::substitute(a, ring, images) + qmc::substitute(b, ring, images),
                "substitute over add");
        require(qmc::substitute(a * b, ring, images) ==
                    qmc::substitute(a, ring, images) * qmc::substitute(b, ring, images),
                "substitute over mul");
    }
}

// single generator pow/mul against a dense polynomial oracle with truncation
inline void dense_oracle_check(int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int deg = 1; deg <= max_degree; ++deg) {
        ring_ptr ring = qmc::make_ring({{"g", deg}});
        std::uniform_int_distribution<int> len(1, deg);
        int la = len(rng), lb = len(rng);
        std::vector<mpz_class> da(la + 1), db(lb + 1);
        Class a(ring), b(ring);
        for (int i = 0; i <= la; ++i) {
            da[i] = coeff(rng);
            a = a + Class::monomial(ring, {i}, da[i]);
        }
        for (int i = 0; i <= lb; ++i) {
            db[i] = coeff(rng);
            b = b + Class::monomial(ring, {i}, db[i]);
        }
        // dense convolution, truncated at g^{deg+1} = 0
        std::vector<mpz_class> dp(deg + 1);
        for (int i = 0; i <= la; ++i)
            for (int j = 0; j <= lb && i + j <= deg; ++j) dp[i + j] += da[i] * db[j];
        Class p = a * b;
        for (int i = 0; i <= deg; ++i)
            require(p.coefficient({i}) == dp[i], "dense oracle mul at degree " + std::to_string(deg));

        // pow against repeated dense multiplication
        int e = 1 + static_cast<int>(rng() % 4);
        std::vector<mpz_class> dq(deg + 1);
        dq[0] = 1;
        for (int rep = 0; rep < e; ++rep) {
            std::vector<mpz_class> nx(deg + 1);
            for (int i = 0; i <= deg; ++i)
                for (int j = 0; j <= la && i + j <= deg; ++j) nx[i + j] += dq[i] * da[j];
            dq = std::move(nx);
        }
        Class q = qmc::pow(a, e);
        for (int i = 0; i <= deg; ++i)
            require(q.coefficient({i}) == dq[i], "dense oracle pow at degree " + std::to_string(deg));
    }
}

inline CountingData random_balanced_problem(std::mt19937_64& rng) {
    for (;;) {
        long k = 1 + static_cast<long>(rng() % 2);
        long n = 1 + static_cast<long>(rng() % 3);
        long d = static_cast<long>(rng() % 3);
        CountingData D(k, n, d);
        int base = static_cast<int>(rng() % 4);
        for (int i = 0; i < base; ++i) {
            long dim = static_cast<long>(rng() % (k + 1));
            long codim = 1 + static_cast<long>(rng() % n);
            D.cycles.emplace_back(dim, codim);
        }
        mpz_class vd = qmc::virtual_dimension(D);
        if (vd < 0) continue;
        // top up with point cycles until balanced
        while (vd > 0) {
            long c = std::min<long>(n, qmc::to_long(vd, "vd"));
            D.cycles.emplace_back(0L, c);
            vd -= c;
        }
        if (qmc::virtual_dimension(D) != 0) continue;
        return D;
    }
}

// the QM integral does not depend on the order of the cycle list
inline void qm_permutation_check(int problems, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < problems; ++it) {
        CountingData D = random_balanced_problem(rng);
        mpz_class ref = qmc::qm_number(D);
        CountingData P = D;
        std::shuffle(P.cycles.begin(), P.cycles.end(), rng);
        require(qmc::qm_number(P) == ref,
                "qm permutation invariance on problem " + std::to_string(it));
    }
}

}  // namespace qmc_test
