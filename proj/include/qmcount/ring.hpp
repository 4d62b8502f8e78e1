#pragma once

// Exact arithmetic in truncated polynomial rings
//   Z[g_1,...,g_r] / (g_1^{m_1+1}, ..., g_r^{m_r+1})
// with big-integer coefficients. This models the cohomology ring of a
// product of projective spaces P^{m_1} x ... x P^{m_r}; integration over
// the product is extraction of the coefficient of g_1^{m_1}...g_r^{m_r}.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmc {

struct ring_error : std::runtime_error {
    explicit ring_error(const std::string& what) : std::runtime_error(what) {}
};

class Ring {
public:
    // each generator is (name, nilpotency order m), meaning g^{m+1} = 0
    explicit Ring(std::vector<std::pair<std::string, int>> gens)
        : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].second < 1)
                throw ring_error("nilpotency order must be >= 1 for generator " + gens_[i].first);
            for (std::size_t j = 0; j < i; ++j)
                if (gens_[j].first == gens_[i].first)
                    throw ring_error("duplicate generator name " + gens_[i].first);
        }
    }

    std::size_t size() const { return gens_.size(); }
    const std::string& name(std::size_t i) const { return gens_[i].first; }
    int order(std::size_t i) const { return gens_[i].second; }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].first == name) return static_cast<int>(i);
        return -1;
    }

    // exponent vector of the top monomial g_1^{m_1}...g_r^{m_r}
    std::vector<int> top() const {
        std::vector<int> e(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) e[i] = gens_[i].second;
        return e;
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.gens_ == b.gens_; }

private:
    std::vector<std::pair<std::string, int>> gens_;
};

using ring_ptr = std::shared_ptr<const Ring>;

inline ring_ptr make_ring(std::vector<std::pair<std::string, int>> gens) {
    return std::make_shared<const Ring>(std::move(gens));
}

class Class {
public:
    using term_map = std::map<std::vector<int>, mpz_class>;

    explicit Class(ring_ptr ring) : ring_(std::move(ring)) {
        if (!ring_) throw ring_error("null ring");
    }

    static Class constant(ring_ptr ring, mpz_class c) {
        Class a(std::move(ring));
        if (c != 0) a.terms_[std::vector<int>(a.ring_->size(), 0)] = std::move(c);
        return a;
    }

    static Class generator(const ring_ptr& ring, const std::string& name) {
        int i = ring->index_of(name);
        if (i < 0) throw ring_error("unknown generator " + name);
        Class a(ring);
        std::vector<int> e(ring->size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        a.terms_[e] = 1;
        return a;
    }

    // single monomial coeff * prod g_i^{e_i}; zero if truncated away
    static Class monomial(const ring_ptr& ring, const std::vector<int>& exps, mpz_class coeff) {
        if (exps.size() != ring->size()) throw ring_error("exponent vector length mismatch");
        Class a(ring);
        if (coeff == 0) return a;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0) throw ring_error("negative exponent");
            if (exps[i] > ring->order(i)) return a;
        }
        a.terms_[exps] = std::move(coeff);
        return a;
    }

    const ring_ptr& ring() const { return ring_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coefficient(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    mpz_class constant_term() const {
        return coefficient(std::vector<int>(ring_->size(), 0));
    }

    friend Class operator+(const Class& a, const Class& b) {
        a.check_same_ring(b);
        Class r = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend Class operator-(const Class& a) {
        Class r = a;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Class operator-(const Class& a, const Class& b) { return a + (-b); }

    friend Class operator*(const Class& a, const Class& b) {
        a.check_same_ring(b);
        Class r(a.ring_);
        const Ring& ring = *a.ring_;
        std::vector<int> e(ring.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                bool dead = false;
                for (std::size_t i = 0; i < ring.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > ring.order(i)) { dead = true; break; }
                }
                if (dead) continue;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    mpz_class c = ca * cb;
                    if (c != 0) r.terms_.emplace(e, std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    friend Class operator*(const mpz_class& s, const Class& a) {
        Class r(a.ring_);
        if (s == 0) return r;
        r = a;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }

    friend bool operator==(const Class& a, const Class& b) {
        a.check_same_ring(b);
        return a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c >= 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            mpz_class ac = abs(c);
            bool any_gen = false;
            for (int ei : e) any_gen = any_gen || ei > 0;
            if (ac != 1 || !any_gen) os << ac.get_str();
            bool star = ac != 1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (star) os << "*";
                os << ring_->name(i);
                if (e[i] > 1) os << "^" << e[i];
                star = true;
            }
        }
        return os.str();
    }

private:
    void check_same_ring(const Class& other) const {
        if (ring_ == other.ring_) return;
        if (*ring_ == *other.ring_) return;
        throw ring_error("operands live in different rings");
    }

    ring_ptr ring_;
    term_map terms_;
};

inline Class pow(const Class& a, long e) {
    if (e < 0) throw ring_error("negative exponent in pow");
    Class r = Class::constant(a.ring(), 1);
    Class base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

// exact inverse of a unit (constant term +1 or -1) by the finite geometric
// series 1/(1+u) = sum (-u)^t, which terminates by nilpotency
inline Class invert_unit(const Class& a) {
    mpz_class c0 = a.constant_term();
    if (c0 != 1 && c0 != -1)
        throw ring_error("invert_unit: constant term must be +1 or -1, got " + c0.get_str());
    Class u = mpz_class(c0) * a - Class::constant(a.ring(), 1);  // nilpotent part
    Class r = Class::constant(a.ring(), 1);
    Class upow = u;
    int sign = -1;
    while (!upow.is_zero()) {
        r = r + mpz_class(sign) * upow;
        upow = upow * u;
        sign = -sign;
    }
    return mpz_class(c0) * r;
}

// integration over P^{m_1} x ... x P^{m_r}: coefficient of the top monomial
inline mpz_class integrate(const Class& a) {
    return a.coefficient(a.ring()->top());
}

// ring homomorphism determined by generator images over the target ring
inline Class substitute(const Class& a, const ring_ptr& target,
                        const std::map<std::string, Class>& images) {
    const Ring& src = *a.ring();
    std::vector<const Class*> img(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = images.find(src.name(i));
        if (it == images.end()) throw ring_error("no image for generator " + src.name(i));
        if (!(*it->second.ring() == *target)) throw ring_error("image not over target ring");
        img[i] = &it->second;
    }
    Class r(target);
    for (const auto& [e, c] : a.terms()) {
        Class t = Class::constant(target, c);
        for (std::size_t i = 0; i < src.size(); ++i)
            if (e[i] > 0) t = t * pow(*img[i], e[i]);
        r = r + t;
    }
    return r;
}

}  // namespace qmc
