#pragma once

// Outward-rounded interval arithmetic over MPFR. Every lower endpoint is
// computed rounding down and every upper endpoint rounding up, so the true
// real value of an expression is always enclosed and endpoint comparisons
// between intervals are conclusive. Used by the inequality validators,
// where bare double comparisons would eventually produce spurious results
// as margins shrink.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include <mpfr.h>

#include "rookdist/common.hpp"

namespace rookdist {

class Interval {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 192;

    explicit Interval(mpfr_prec_t prec = kDefaultPrecision) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    Interval(const Interval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    Interval& operator=(Interval o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }

    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static Interval from_bigint(const BigInt& v, mpfr_prec_t prec = kDefaultPrecision) {
        Interval r(prec);
        mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
        return r;
    }

    static Interval from_ratio(const BigInt& num, const BigInt& den,
                               mpfr_prec_t prec = kDefaultPrecision) {
        if (sgn(den) == 0) throw std::invalid_argument("Interval: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        Interval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

    double width_d() const {
        mpfr_t w;
        mpfr_init2(w, prec_);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double out = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return out;
    }

    bool valid() const { return mpfr_cmp(lo_, hi_) <= 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_greater(const Interval& o) const { return o.certainly_less(*this); }
    bool certainly_at_most(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }

    /// hi < v is a proof that the enclosed value is below the integer v.
    bool certainly_below_int(const BigInt& v) const { return mpfr_cmp_z(hi_, v.get_mpz_t()) < 0; }
    /// v <= lo is a proof that the enclosed value is at least the integer v.
    bool certainly_at_least_int(const BigInt& v) const {
        return mpfr_cmp_z(lo_, v.get_mpz_t()) >= 0;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    std::string str(int digits = 20) const {
        char* a = nullptr;
        char* b = nullptr;
        mpfr_asprintf(&a, "%.*Rg", digits, lo_);
        mpfr_asprintf(&b, "%.*Rg", digits, hi_);
        std::string out = std::string("[") + a + ", " + b + "]";
        mpfr_free_str(a);
        mpfr_free_str(b);
        return out;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a) {
        Interval r(a.prec_);
        mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        bool first = true;
        for (const auto* x : {&a.lo_, &a.hi_}) {
            for (const auto* y : {&b.lo_, &b.hi_}) {
                mpfr_mul(t, *x, *y, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, *x, *y, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        }
        mpfr_clear(t);
        return r;
    }

    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw std::domain_error("Interval: division by interval containing 0");
        Interval r(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        bool first = true;
        for (const auto* x : {&a.lo_, &a.hi_}) {
            for (const auto* y : {&b.lo_, &b.hi_}) {
                mpfr_div(t, *x, *y, MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_div(t, *x, *y, MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        }
        mpfr_clear(t);
        return r;
    }

    friend Interval sqrt(const Interval& a) {
        if (mpfr_sgn(a.lo_) < 0) throw std::domain_error("Interval: sqrt of negative");
        Interval r(a.prec_);
        mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval log(const Interval& a) {
        if (mpfr_sgn(a.lo_) <= 0) throw std::domain_error("Interval: log needs positive argument");
        Interval r(a.prec_);
        mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval exp(const Interval& a) {
        Interval r(a.prec_);
        mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }

    /// base^e for a certainly positive base, as exp(e * log(base)).
    friend Interval pow(const Interval& base, const Interval& e) {
        if (!base.certainly_positive())
            throw std::domain_error("Interval: pow needs certainly positive base");
        return exp(e * log(base));
    }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

}  // namespace rookdist
