#include "qinterp/rational.hpp"

#include <stdexcept>

#include "qinterp/errors.hpp"

namespace qinterp {

RationalQ::RationalQ(LaurentV n, LaurentV d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalQ: zero denominator");
    normalize();
}

void RationalQ::normalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    const LaurentV g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const int shift = den_.min_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.leading_coeff() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

LaurentV RationalQ::as_laurent() const {
    if (!den_.is_one())
        throw NotDivisible("fraction (" + str() + ") is not a Laurent polynomial");
    return num_;
}

RationalQ RationalQ::operator-() const {
    RationalQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQ& RationalQ::operator+=(const RationalQ& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalQ& RationalQ::operator-=(const RationalQ& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalQ& RationalQ::operator*=(const RationalQ& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalQ& RationalQ::operator/=(const RationalQ& o) {
    if (o.is_zero()) throw std::invalid_argument("RationalQ: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalQ RationalQ::inverse() const {
    if (is_zero()) throw std::invalid_argument("RationalQ: inverse of zero");
    RationalQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

RationalQ RationalQ::q_inverted() const {
    RationalQ r;
    r.num_ = num_.v_inverted();
    r.den_ = den_.v_inverted();
    r.normalize();
    return r;
}

std::string RationalQ::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qinterp
