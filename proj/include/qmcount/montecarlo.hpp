#pragma once

// Importance-sampled Monte Carlo verification of the smooth count integrals.
// Every coordinate is drawn from the Fubini-Study density
//   p(z) = 1 / (pi (1 + |z|^2)^2)
// on its C chart (total mass 1), which matches the ~|z|^-4 tails of the
// built-in integrands and keeps the weight f/p bounded. Sampling is split
// into fixed-size blocks keyed by block index, and blocks are reduced in
// index order, so a run is bit-exact for a given seed at any thread count.

#include "qmcount/philox.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qmc {

struct mc_error : std::runtime_error {
    explicit mc_error(const std::string& what) : std::runtime_error(what) {}
};

struct Integrand {
    std::string id;
    int arity = 0;  // number of complex variables
    std::function<double(const std::complex<double>*)> density;
};

struct MCEstimate {
    std::uint64_t samples = 0;
    double mean = 0;
    double std_error = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double wall_time = 0;
    std::uint64_t rejected = 0;  // non-finite weights, excluded from the mean
};

namespace detail {

inline double sq(double x) { return x * x; }
inline double norm2(const std::complex<double>& z) { return std::norm(z); }

}  // namespace detail

inline Integrand builtin_integrand(const std::string& id) {
    using C = std::complex<double>;
    const double pi = 3.14159265358979323846;
    if (id == "one-or-two") {
        // variables (b, z); pullback of omega^2 through f_b(z) = (bz, (1+b)z)
        double norm = 2.0 / (pi * pi);
        return {id, 2, [norm](const C* v) {
                    double den = 1.0 + detail::norm2(v[0] * v[1]) +
                                 detail::norm2((1.0 + v[0]) * v[1]);
                    return norm * detail::norm2(v[1]) / (den * den * den);
                }};
    }
    if (id == "one-or-four") {
        // variables (alpha, beta, w1, w2); f(w) = (alpha w, beta (1-w))
        double norm = 4.0 / (pi * pi * pi * pi);
        return {id, 4, [norm](const C* v) {
                    double a2 = detail::norm2(v[0]), b2 = detail::norm2(v[1]);
                    auto F = [&](const C& w) {
                        return 1.0 + a2 * detail::norm2(w) + b2 * detail::norm2(1.0 - w);
                    };
                    double f1 = F(v[2]), f2 = F(v[3]);
                    double den = detail::sq(f1 * f2) * (f1 * f2);
                    return norm * a2 * b2 * detail::norm2(v[2] - v[3]) / den;
                }};
    }
    if (id == "one-or-sixteen") {
        // variables (alpha, beta, z1, z2); f(z) = (alpha(1 - 1/z), beta(1 - z))
        double norm = 4.0 / (pi * pi * pi * pi);
        return {id, 4, [norm](const C* v) {
                    double a2 = detail::norm2(v[0]), b2 = detail::norm2(v[1]);
                    auto F = [&](const C& z) {
                        double z2 = detail::norm2(z), u2 = detail::norm2(1.0 - z);
                        return z2 + a2 * u2 + b2 * z2 * u2;
                    };
                    double f1 = F(v[2]), f2 = F(v[3]);
                    double den = detail::sq(f1 * f2) * (f1 * f2);
                    double num = a2 * b2 * detail::norm2(v[2]) * detail::norm2(v[3]) *
                                 detail::norm2(1.0 - v[2]) * detail::norm2(1.0 - v[3]) *
                                 detail::norm2(v[2] - v[3]);
                    return norm * num / den;
                }};
    }
    throw mc_error("unknown integrand " + id);
}

// the reference density itself; estimates exactly 1 with zero variance
inline Integrand reference_integrand(int arity) {
    const double pi = 3.14159265358979323846;
    return {"reference", arity, [arity, pi](const std::complex<double>* v) {
                double p = 1.0;
                for (int i = 0; i < arity; ++i) {
                    double t = detail::norm2(v[i]);
                    p *= 1.0 / (pi * detail::sq(1.0 + t));
                }
                return p;
            }};
}

inline unsigned default_threads() {
    if (const char* env = std::getenv("QMC_THREADS")) {
        long t = std::atol(env);
        if (t >= 1) return static_cast<unsigned>(t);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

inline MCEstimate integrate_mc(const Integrand& f, std::uint64_t samples,
                               std::uint64_t seed, unsigned threads = 0) {
    if (samples < 1) throw mc_error("need at least one sample");
    if (f.arity < 1 || f.arity > 16) throw mc_error("unsupported arity");
    if (threads == 0) threads = default_threads();
    auto t0 = std::chrono::steady_clock::now();

    constexpr std::uint64_t block_size = 65536;
    const std::uint64_t nblocks = (samples + block_size - 1) / block_size;
    struct partial {
        double sum = 0, sumsq = 0;
        std::uint64_t rejected = 0;
    };
    std::vector<partial> parts(nblocks);
    std::atomic<std::uint64_t> next{0};
    const double two_pi = 2.0 * 3.14159265358979323846;
    const double inv_pi = 1.0 / 3.14159265358979323846;

    auto worker = [&]() {
        std::complex<double> z[16];
        for (;;) {
            std::uint64_t b = next.fetch_add(1);
            if (b >= nblocks) break;
            std::uint64_t count = std::min(block_size, samples - b * block_size);
            philox_stream rng(seed, b);
            partial acc;
            for (std::uint64_t s = 0; s < count; ++s) {
                double p = 1.0;
                for (int i = 0; i < f.arity; ++i) {
                    double u = rng.uniform();
                    double v = rng.uniform();
                    double t = u / (1.0 - u);  // |z|^2 has density 1/(1+t)^2
                    double r = std::sqrt(t);
                    z[i] = std::polar(r, two_pi * v);
                    p *= inv_pi / detail::sq(1.0 + t);
                }
                double w = f.density(z) / p;
                if (std::isfinite(w))
                    acc.sum += w, acc.sumsq += w * w;
                else
                    ++acc.rejected;
            }
            parts[b] = acc;
        }
    };

    std::vector<std::thread> pool;
    unsigned nworkers = static_cast<unsigned>(std::min<std::uint64_t>(threads, nblocks));
    for (unsigned i = 1; i < nworkers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    double sum = 0, sumsq = 0;
    std::uint64_t rejected = 0;
    for (const partial& p : parts) {  // fixed order keeps the result bit-exact
        sum += p.sum;
        sumsq += p.sumsq;
        rejected += p.rejected;
    }
    std::uint64_t kept = samples - rejected;
    if (rejected * 10000 > samples)
        throw mc_error("too many non-finite sample weights: " + std::to_string(rejected) +
                       " of " + std::to_string(samples));
    if (kept == 0) throw mc_error("all samples rejected");

    MCEstimate e;
    e.samples = samples;
    e.seed = seed;
    e.threads = threads;
    e.rejected = rejected;
    double n = static_cast<double>(kept);
    e.mean = sum / n;
    double var = sumsq / n - e.mean * e.mean;
    if (var < 0) var = 0;
    e.std_error = std::sqrt(var / n);
    e.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

}  // namespace qmc
