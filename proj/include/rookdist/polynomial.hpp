#pragma once

// Exact sparse multivariate polynomials over the integers. Monomials are
// fixed-length exponent vectors keyed by hash; coefficients are
// arbitrary-precision; zero coefficients are never stored.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rookdist/common.hpp"

namespace rookdist {

using Monomial = std::vector<std::uint8_t>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint8_t e : m) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class SparsePoly {
public:
    using TermMap = std::unordered_map<Monomial, BigInt, MonomialHash>;

    explicit SparsePoly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("SparsePoly: negative arity");
    }

    static SparsePoly constant(int arity, BigInt value) {
        SparsePoly p(arity);
        p.add_term(Monomial(arity, 0), std::move(value));
        return p;
    }

    static SparsePoly variable(int arity, int var, BigInt coeff = 1) {
        if (var < 0 || var >= arity) throw std::invalid_argument("SparsePoly: bad variable");
        SparsePoly p(arity);
        Monomial m(arity, 0);
        m[var] = 1;
        p.add_term(std::move(m), std::move(coeff));
        return p;
    }

    int arity() const { return arity_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    BigInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(Monomial m, BigInt coeff) {
        if (static_cast<int>(m.size()) != arity_)
            throw std::invalid_argument("SparsePoly: monomial arity mismatch");
        if (sgn(coeff) == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [m, c] : terms_) {
            int d = 0;
            for (std::uint8_t e : m) d += e;
            deg = std::max(deg, d);
        }
        return deg;
    }

    BigInt evaluate(const std::vector<BigInt>& point) const {
        if (static_cast<int>(point.size()) != arity_)
            throw std::invalid_argument("SparsePoly: evaluation point arity mismatch");
        BigInt total = 0;
        for (const auto& [m, c] : terms_) {
            BigInt term = c;
            for (int v = 0; v < arity_; ++v)
                for (int e = 0; e < m[v]; ++e) term *= point[v];
            total += term;
        }
        return total;
    }

    bool operator==(const SparsePoly& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

    friend SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("poly_add: arity mismatch");
        SparsePoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b,
                               std::size_t term_budget = std::numeric_limits<std::size_t>::max()) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("poly_mul: arity mismatch");
        const SparsePoly& outer = a.term_count() >= b.term_count() ? a : b;
        const SparsePoly& inner = a.term_count() >= b.term_count() ? b : a;
        SparsePoly out(a.arity_);
        out.terms_.reserve(outer.term_count() * 2);
        Monomial key(a.arity_);
        for (const auto& [ma, ca] : outer.terms_) {
            for (const auto& [mb, cb] : inner.terms_) {
                for (int v = 0; v < a.arity_; ++v) {
                    unsigned sum = unsigned(ma[v]) + unsigned(mb[v]);
                    if (sum > 255) throw std::overflow_error("poly_mul: exponent overflow");
                    key[v] = static_cast<std::uint8_t>(sum);
                }
                auto [it, inserted] = out.terms_.try_emplace(key, ca);
                if (inserted) {
                    it->second *= cb;
                } else {
                    it->second += ca * cb;
                    if (sgn(it->second) == 0) out.terms_.erase(it);
                }
                if (out.terms_.size() > term_budget)
                    throw BudgetExceeded("poly_mul: term budget exceeded");
            }
        }
        return out;
    }

    /// Coefficient of `target` in a*b, by convolution over the support of the
    /// smaller factor. Exact and independent of any full product expansion.
    friend BigInt product_coefficient(const SparsePoly& a, const SparsePoly& b,
                                      const Monomial& target) {
        if (a.arity_ != b.arity_) throw std::invalid_argument("product_coefficient: arity mismatch");
        if (static_cast<int>(target.size()) != a.arity_)
            throw std::invalid_argument("product_coefficient: target arity mismatch");
        const SparsePoly& small = a.term_count() <= b.term_count() ? a : b;
        const SparsePoly& large = a.term_count() <= b.term_count() ? b : a;
        BigInt total = 0;
        Monomial rest(a.arity_);
        for (const auto& [m, c] : small.terms_) {
            bool divides = true;
            for (int v = 0; v < a.arity_; ++v) {
                if (m[v] > target[v]) {
                    divides = false;
                    break;
                }
                rest[v] = static_cast<std::uint8_t>(target[v] - m[v]);
            }
            if (!divides) continue;
            auto it = large.terms_.find(rest);
            if (it != large.terms_.end()) total += c * it->second;
        }
        return total;
    }

private:
    int arity_;
    TermMap terms_;
};

}  // namespace rookdist
