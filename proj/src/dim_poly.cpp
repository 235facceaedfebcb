#include "radialop/dim_poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace radialop {

DimPoly::DimPoly(Rational constant) {
    set(0, std::move(constant));
}

DimPoly DimPoly::variable() {
    return monomial(Rational(1), 1);
}

DimPoly DimPoly::monomial(Rational coeff, int degree) {
    if (degree < 0)
        throw std::invalid_argument("DimPoly: negative degree");
    DimPoly p;
    p.set(degree, std::move(coeff));
    return p;
}

void DimPoly::set(int degree, Rational value) {
    if (value.is_zero())
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(value);
}

bool DimPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

int DimPoly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Rational DimPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational DimPoly::leading_coeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
}

DimPoly DimPoly::operator-() const {
    DimPoly p;
    for (const auto& [d, c] : coeffs_)
        p.coeffs_.emplace(d, -c);
    return p;
}

DimPoly& DimPoly::operator+=(const DimPoly& o) {
    for (const auto& [d, c] : o.coeffs_)
        set(d, coeff(d) + c);
    return *this;
}

DimPoly& DimPoly::operator-=(const DimPoly& o) {
    for (const auto& [d, c] : o.coeffs_)
        set(d, coeff(d) - c);
    return *this;
}

DimPoly& DimPoly::operator*=(const DimPoly& o) {
    std::map<int, Rational> product;
    for (const auto& [da, ca] : coeffs_) {
        for (const auto& [db, cb] : o.coeffs_) {
            auto [it, inserted] = product.emplace(da + db, ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    coeffs_.clear();
    for (auto& [d, c] : product)
        set(d, std::move(c));
    return *this;
}

DimPoly& DimPoly::operator*=(const Rational& q) {
    if (q.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [d, c] : coeffs_)
        c *= q;
    return *this;
}

Rational DimPoly::eval_at(const Rational& n0) const {
    // Horner over the sparse map, highest degree first.
    Rational acc(0);
    int prev_degree = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_degree >= 0)
            acc *= n0.pow(prev_degree - it->first);
        acc += it->second;
        prev_degree = it->first;
    }
    if (prev_degree > 0)
        acc *= n0.pow(prev_degree);
    return acc;
}

std::set<BigInt> DimPoly::roots_over_integers() const {
    std::set<BigInt> roots;
    if (degree() <= 0)
        return roots;

    // Clear denominators: the integer roots are unchanged by scaling.
    BigInt scale = 1;
    for (const auto& [d, c] : coeffs_)
        scale = boost::multiprecision::lcm(scale, c.den());

    // Strip n^v; v > 0 means n = 0 is a root.
    int trailing_degree = coeffs_.begin()->first;
    if (trailing_degree > 0)
        roots.insert(BigInt(0));

    BigInt a0 = boost::multiprecision::abs((coeffs_.begin()->second * Rational(scale)).num());
    // Candidate roots are the divisors of the trailing coefficient.
    for (BigInt d = 1; d * d <= a0; ++d) {
        if (a0 % d != 0)
            continue;
        const BigInt paired = a0 / d;
        for (const BigInt& divisor : {d, paired}) {
            for (int sign : {1, -1}) {
                BigInt candidate = sign * divisor;
                if (eval_at(Rational(candidate)).is_zero())
                    roots.insert(candidate);
            }
        }
    }
    return roots;
}

}  // namespace radialop
