#ifndef QSCHUR_SCALAR_HPP
#define QSCHUR_SCALAR_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

#include "qschur/errors.hpp"

namespace qschur {

using Int = mpz_class;
using Rat = mpq_class;

// Exact coefficient: a rational in characteristic zero, or an element of
// F_p when a modulus is attached. The modulus is fixed per session; mixing
// two different nonzero moduli is an error, and a characteristic-zero zero
// absorbs the modulus of the other operand. Integers are rationals with
// unit denominator; no floating point anywhere.
class Scalar {
  public:
    Scalar() : v_(0), p_(0) {}
    Scalar(long n) : v_(n), p_(0) {}
    Scalar(const Int& n) : v_(n), p_(0) {}
    Scalar(const Rat& q) : v_(q), p_(0) {}

    static Scalar mod_p(const Int& n, uint32_t p) {
        Scalar s;
        s.p_ = p;
        s.v_ = Rat(n);
        s.reduce();
        return s;
    }

    uint32_t modulus() const { return p_; }
    const Rat& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    // Integer value; throws if the scalar is not integral.
    Int as_int() const {
        if (!is_integer()) throw Error("scalar " + str() + " is not integral");
        return v_.get_num();
    }

    Scalar operator-() const {
        Scalar r(*this);
        r.v_ = -r.v_;
        r.reduce();
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        unify(o);
        v_ += o.v_;
        reduce();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        unify(o);
        v_ -= o.v_;
        reduce();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        unify(o);
        v_ *= o.v_;
        reduce();
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar div(const Scalar& o) const {
        if (o.is_zero()) throw NotDivisible("division by zero scalar");
        Scalar r(*this);
        r.unify(o);
        if (r.p_ == 0) {
            r.v_ /= o.v_;
        } else {
            r.v_ = Rat(modinv(o.v_.get_num(), r.p_) * r.v_.get_num());
            r.reduce();
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }

  private:
    void reduce() {
        if (p_ != 0) {
            Int n = v_.get_num() % Int(p_);
            if (n < 0) n += p_;
            v_ = Rat(n);
        }
    }
    void unify(const Scalar& o) {
        if (p_ == o.p_) return;
        if (p_ == 0) {
            if (!is_zero() && !is_integer())
                throw Error("mixing rational and mod-p scalars");
            p_ = o.p_;
            reduce();
            return;
        }
        // integer literals reduce into F_p through the result's modulus
        if (o.p_ == 0 && (o.is_zero() || o.is_integer())) return;
        throw Error("mixing scalars of different characteristic");
    }
    static Int modinv(const Int& a, uint32_t p) {
        Int r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), Int(p).get_mpz_t()) == 0)
            throw NotDivisible("noninvertible scalar mod p");
        return r;
    }

    Rat v_;
    uint32_t p_;
};

} // namespace qschur

#endif
