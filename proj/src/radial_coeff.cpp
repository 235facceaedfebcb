#include "radialop/radial_coeff.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace radialop {

RadialCoeff::RadialCoeff(DimPoly constant) {
    set(0, std::move(constant));
}

RadialCoeff RadialCoeff::monomial(DimPoly coeff, int exponent) {
    RadialCoeff c;
    c.set(exponent, std::move(coeff));
    return c;
}

void RadialCoeff::set(int exponent, DimPoly value) {
    if (value.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(value);
}

DimPoly RadialCoeff::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? DimPoly() : it->second;
}

int RadialCoeff::min_exponent() const {
    if (terms_.empty())
        throw std::logic_error("RadialCoeff: zero has no exponents");
    return terms_.begin()->first;
}

int RadialCoeff::max_exponent() const {
    if (terms_.empty())
        throw std::logic_error("RadialCoeff: zero has no exponents");
    return terms_.rbegin()->first;
}

RadialCoeff RadialCoeff::operator-() const {
    RadialCoeff c;
    for (const auto& [e, p] : terms_)
        c.terms_.emplace(e, -p);
    return c;
}

RadialCoeff& RadialCoeff::operator+=(const RadialCoeff& o) {
    for (const auto& [e, p] : o.terms_)
        set(e, coeff(e) + p);
    return *this;
}

RadialCoeff& RadialCoeff::operator-=(const RadialCoeff& o) {
    for (const auto& [e, p] : o.terms_)
        set(e, coeff(e) - p);
    return *this;
}

RadialCoeff& RadialCoeff::operator*=(const RadialCoeff& o) {
    std::map<int, DimPoly> product;
    for (const auto& [ea, pa] : terms_) {
        for (const auto& [eb, pb] : o.terms_) {
            auto [it, inserted] = product.emplace(ea + eb, pa * pb);
            if (!inserted)
                it->second += pa * pb;
        }
    }
    terms_.clear();
    for (auto& [e, p] : product)
        set(e, std::move(p));
    return *this;
}

RadialCoeff& RadialCoeff::operator*=(const DimPoly& p) {
    if (p.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= p;
    return *this;
}

RadialCoeff& RadialCoeff::operator*=(const Rational& q) {
    return *this *= DimPoly(q);
}

RadialCoeff RadialCoeff::derivative() const {
    RadialCoeff d;
    for (const auto& [e, p] : terms_) {
        if (e != 0)
            d.set(e - 1, p * Rational(e));
    }
    return d;
}

RadialCoeff RadialCoeff::substitute_n(const Rational& n0) const {
    RadialCoeff c;
    for (const auto& [e, p] : terms_)
        c.set(e, DimPoly(p.eval_at(n0)));
    return c;
}

double RadialCoeff::evaluate(double r) const {
    double sum = 0.0;
    for (const auto& [e, p] : terms_) {
        if (!p.is_constant())
            throw std::domain_error("RadialCoeff::evaluate: coefficient still symbolic in n");
        sum += p.coeff(0).to_double() * std::pow(r, e);
    }
    return sum;
}

}  // namespace radialop
