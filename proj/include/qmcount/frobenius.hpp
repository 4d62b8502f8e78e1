#pragma once

// The higher quantum cohomology Frobenius algebra A = C[[q]][x] attached to
// quasimaps P^{k_1} x ... x P^{k_s} --> P^n, with one formal q variable per
// source factor. The counit eta sends x^j to q^dvec exactly when
// j = n_multi(ks, n, dvec) and kills every other monomial; q series are
// truncated at a caller-chosen cutoff with exact integer coefficients.

#include "qmcount/counting.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qmc {

struct QGeometry {
    std::vector<long> ks;
    long n = 0;

    QGeometry(long k, long n_) : ks{k}, n(n_) {}
    QGeometry(std::vector<long> ks_, long n_) : ks(std::move(ks_)), n(n_) {
        if (ks.empty()) throw counting_error("QGeometry: empty source");
        for (long k : ks)
            if (k < 1) throw counting_error("QGeometry: source dimensions must be >= 1");
    }

    std::size_t q_vars() const { return ks.size(); }
};

class FrobeniusElement {
public:
    // key: (x exponent, q exponent vector)
    using key = std::pair<long, std::vector<long>>;
    using term_map = std::map<key, mpz_class>;

    FrobeniusElement(std::vector<long> q_cutoff) : cutoff_(std::move(q_cutoff)) {}

    static FrobeniusElement zero(std::vector<long> q_cutoff) {
        return FrobeniusElement(std::move(q_cutoff));
    }

    static FrobeniusElement monomial(long x_exp, std::vector<long> q_exp,
                                     mpz_class coeff, std::vector<long> q_cutoff) {
        if (x_exp < 0) throw counting_error("negative x exponent");
        if (q_exp.size() != q_cutoff.size()) throw counting_error("q exponent arity mismatch");
        FrobeniusElement p(std::move(q_cutoff));
        for (std::size_t i = 0; i < q_exp.size(); ++i) {
            if (q_exp[i] < 0) throw counting_error("negative q exponent");
            if (q_exp[i] > p.cutoff_[i]) return p;  // beyond the cutoff
        }
        if (coeff != 0) p.terms_[{x_exp, std::move(q_exp)}] = std::move(coeff);
        return p;
    }

    static FrobeniusElement x_pow(long j, std::vector<long> q_cutoff) {
        std::vector<long> qe(q_cutoff.size(), 0);
        return monomial(j, std::move(qe), 1, std::move(q_cutoff));
    }

    static FrobeniusElement q_pow(std::vector<long> q_exp, std::vector<long> q_cutoff) {
        return monomial(0, std::move(q_exp), 1, std::move(q_cutoff));
    }

    const term_map& terms() const { return terms_; }
    const std::vector<long>& q_cutoff() const { return cutoff_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coefficient(long x_exp, const std::vector<long>& q_exp) const {
        auto it = terms_.find({x_exp, q_exp});
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    long x_degree() const {  // -1 for the zero element
        long d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }

    long q_degree(std::size_t var = 0) const {  // -1 for zero
        long d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second[var]);
        return d;
    }

    FrobeniusElement with_cutoff(std::vector<long> q_cutoff) const {
        FrobeniusElement p(std::move(q_cutoff));
        for (const auto& [k, c] : terms_) {
            bool keep = true;
            for (std::size_t i = 0; i < p.cutoff_.size(); ++i)
                keep = keep && k.second[i] <= p.cutoff_[i];
            if (keep) p.terms_[k] = c;
        }
        return p;
    }

    friend FrobeniusElement operator+(const FrobeniusElement& a, const FrobeniusElement& b) {
        a.check_cutoff(b);
        FrobeniusElement r = a;
        for (const auto& [k, c] : b.terms_) {
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend FrobeniusElement operator-(const FrobeniusElement& a) {
        FrobeniusElement r = a;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend FrobeniusElement operator-(const FrobeniusElement& a, const FrobeniusElement& b) {
        return a + (-b);
    }

    friend FrobeniusElement operator*(const FrobeniusElement& a, const FrobeniusElement& b) {
        a.check_cutoff(b);
        FrobeniusElement r(a.cutoff_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                key k{ka.first + kb.first, ka.second};
                bool dead = false;
                for (std::size_t i = 0; i < k.second.size(); ++i) {
                    k.second[i] += kb.second[i];
                    if (k.second[i] > a.cutoff_[i]) { dead = true; break; }
                }
                if (dead) continue;
                auto it = r.terms_.find(k);
                if (it == r.terms_.end()) {
                    mpz_class c = ca * cb;
                    if (c != 0) r.terms_.emplace(std::move(k), std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    friend FrobeniusElement operator*(const mpz_class& s, const FrobeniusElement& a) {
        FrobeniusElement r(a.cutoff_);
        if (s == 0) return r;
        r = a;
        for (auto& [k, c] : r.terms_) c *= s;
        return r;
    }

    friend bool operator==(const FrobeniusElement& a, const FrobeniusElement& b) {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

private:
    void check_cutoff(const FrobeniusElement& other) const {
        if (cutoff_ != other.cutoff_) throw counting_error("q cutoff mismatch");
    }

    std::vector<long> cutoff_;
    term_map terms_;
};

namespace detail {

// all multi-degrees dvec with dvec <= bound (componentwise)
inline void enumerate_degrees(const std::vector<long>& bound, std::size_t pos,
                              std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (pos == bound.size()) {
        out.push_back(cur);
        return;
    }
    for (long d = 0; d <= bound[pos]; ++d) {
        cur[pos] = d;
        enumerate_degrees(bound, pos + 1, cur, out);
    }
}

}  // namespace detail

// counit: x^j q^e |--> sum over dvec with n_multi(ks, n, dvec) = j of q^{e+dvec}
inline FrobeniusElement eta(const FrobeniusElement& p, const QGeometry& geom) {
    const std::vector<long>& cutoff = p.q_cutoff();
    if (cutoff.size() != geom.q_vars())
        throw counting_error("eta: q arity does not match the source factors");
    std::vector<std::vector<long>> degrees;
    std::vector<long> cur(cutoff.size(), 0);
    detail::enumerate_degrees(cutoff, 0, cur, degrees);

    FrobeniusElement r = FrobeniusElement::zero(cutoff);
    for (const auto& [k, c] : p.terms()) {
        for (const auto& dvec : degrees) {
            if (n_multi(geom.ks, geom.n, dvec) != k.first) continue;
            std::vector<long> qe = k.second;
            bool keep = true;
            for (std::size_t i = 0; i < qe.size(); ++i) {
                qe[i] += dvec[i];
                keep = keep && qe[i] <= cutoff[i];
            }
            if (keep)
                r = r + FrobeniusElement::monomial(0, std::move(qe), c, cutoff);
        }
    }
    return r;
}

// cyclic higher quantum product of cohomology classes x^{j_i} of P^n
inline FrobeniusElement cqp(const std::vector<long>& js, const QGeometry& geom,
                            std::vector<long> q_cutoff) {
    long total = 0;
    for (long j : js) {
        if (j < 0 || j > geom.n)
            throw counting_error("cqp: x^" + std::to_string(j) +
                                 " is not a cohomology class of P^" + std::to_string(geom.n));
        total += j;
    }
    return eta(FrobeniusElement::x_pow(total, q_cutoff), geom);
}

// M[a][b] = eta(x^{a+b}) for 0 <= a, b <= x_max
inline std::vector<std::vector<FrobeniusElement>> pairing_matrix(
    const QGeometry& geom, long x_max, std::vector<long> q_cutoff) {
    std::vector<std::vector<FrobeniusElement>> M;
    for (long a = 0; a <= x_max; ++a) {
        std::vector<FrobeniusElement> row;
        for (long b = 0; b <= x_max; ++b)
            row.push_back(eta(FrobeniusElement::x_pow(a + b, q_cutoff), geom));
        M.push_back(std::move(row));
    }
    return M;
}

struct KernelWitness {
    long j = 0;      // eta(p * x^j) != 0
    long d = 0;      // auxiliary degree from the construction
    long q_exp = 0;  // the certified nonzero coefficient sits at q^{q_exp}
    mpz_class coefficient;
};

// Constructive form of the zero-kernel lemma for k >= 2: writing
// p = sum_i p_i(x) q^i with top q degree delta, pick d so that
// n_knd(k,n,d) >= deg p_delta and n_knd(k,n,d) + deg p_i < n_knd(k,n,d+1)
// for i < delta; then j = n_knd(k,n,d) - deg p_delta makes the q^{delta+d}
// coefficient of eta(p x^j) equal to the leading coefficient of p_delta.
// The gaps n_knd(d+1) - n_knd(d) are unbounded for k >= 2, so d exists.
inline KernelWitness kernel_witness_check(const QGeometry& geom, const FrobeniusElement& p) {
    if (geom.ks.size() != 1 || geom.ks[0] < 2)
        throw counting_error("kernel_witness_check: requires a single source factor with k >= 2");
    if (p.is_zero()) throw counting_error("kernel_witness_check: p = 0");
    long k = geom.ks[0], n = geom.n;

    long delta = p.q_degree(0);
    long deg_top = -1;   // deg p_delta
    long deg_rest = -1;  // max over i < delta of deg p_i
    for (const auto& [key, c] : p.terms()) {
        if (key.second[0] == delta)
            deg_top = std::max(deg_top, key.first);
        else
            deg_rest = std::max(deg_rest, key.first);
    }

    long d = 0;
    for (;; ++d) {
        mpz_class nd = n_knd(k, n, d);
        if (nd < deg_top) continue;
        if (deg_rest >= 0 && nd + deg_rest >= n_knd(k, n, d + 1)) continue;
        break;
    }
    long nd = to_long(n_knd(k, n, d), "n_knd");

    KernelWitness w;
    w.j = nd - deg_top;
    w.d = d;
    w.q_exp = delta + d;
    std::vector<long> cutoff{std::max(p.q_cutoff()[0], w.q_exp)};
    FrobeniusElement prod = p.with_cutoff(cutoff) * FrobeniusElement::x_pow(w.j, cutoff);
    w.coefficient = eta(prod, geom).coefficient(0, {w.q_exp});
    if (w.coefficient == 0)
        throw counting_error("kernel_witness_check: construction failed (internal error)");
    return w;
}

}  // namespace qmc
