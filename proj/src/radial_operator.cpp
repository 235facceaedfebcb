#include "radialop/radial_operator.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace radialop {

RadialOperator RadialOperator::one() {
    return multiplication(RadialCoeff::one());
}

RadialOperator RadialOperator::partial(int order) {
    return term(RadialCoeff::one(), order);
}

RadialOperator RadialOperator::multiplication(RadialCoeff c) {
    return term(std::move(c), 0);
}

RadialOperator RadialOperator::term(RadialCoeff c, int order) {
    if (order < 0)
        throw std::invalid_argument("RadialOperator: negative derivative order");
    RadialOperator a;
    if (!c.is_zero())
        a.terms_.emplace(order, std::move(c));
    return a;
}

int RadialOperator::order() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

RadialCoeff RadialOperator::coeff(int order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? RadialCoeff() : it->second;
}

void RadialOperator::add_term(int order, const RadialCoeff& c) {
    auto [it, inserted] = terms_.emplace(order, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

RadialOperator RadialOperator::operator-() const {
    RadialOperator a;
    for (const auto& [k, c] : terms_)
        a.terms_.emplace(k, -c);
    return a;
}

RadialOperator& RadialOperator::operator+=(const RadialOperator& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

RadialOperator& RadialOperator::operator-=(const RadialOperator& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

RadialOperator operator*(const RadialOperator& a, const RadialOperator& b) {
    RadialOperator out;
    for (const auto& [k, c] : a.terms_) {
        for (const auto& [l, d] : b.terms_) {
            // Leibniz expansion of d^k past the coefficient d.
            RadialCoeff dj = d;      // j-th derivative of d
            BigInt binom = 1;        // C(k, j)
            for (int j = 0; j <= k; ++j) {
                if (j > 0) {
                    binom = binom * (k - j + 1) / j;
                    dj = dj.derivative();
                    if (dj.is_zero())
                        break;
                }
                out.add_term(k - j + l, c * dj * Rational(binom));
            }
        }
    }
    return out;
}

RadialOperator operator*(const RadialCoeff& c, RadialOperator a) {
    if (c.is_zero())
        return RadialOperator();
    for (auto it = a.terms_.begin(); it != a.terms_.end();) {
        it->second = c * it->second;
        it = it->second.is_zero() ? a.terms_.erase(it) : std::next(it);
    }
    return a;
}

RadialOperator operator*(const Rational& q, RadialOperator a) {
    return RadialCoeff(q) * std::move(a);
}

RadialCoeff RadialOperator::apply(const RadialCoeff& p) const {
    RadialCoeff result;
    RadialCoeff pk = p;  // k-th derivative of p
    int prev = 0;
    for (const auto& [k, c] : terms_) {
        for (int j = prev; j < k; ++j)
            pk = pk.derivative();
        prev = k;
        result += c * pk;
    }
    return result;
}

RadialOperator commutator(const RadialOperator& a, const RadialOperator& b) {
    return a * b - b * a;
}

RadialOperator pow(const RadialOperator& a, int k) {
    if (k < 0)
        throw std::invalid_argument("pow(RadialOperator): negative power");
    RadialOperator result = RadialOperator::one();
    for (int i = 0; i < k; ++i)
        result = result * a;
    return result;
}

RadialOperator substitute_n(const RadialOperator& a, const Rational& n0) {
    RadialOperator out;
    for (const auto& [k, c] : a.terms())
        out += RadialOperator::term(c.substitute_n(n0), k);
    return out;
}

namespace {

// Powers gen^0 .. gen^max_order, each expanded to normal form.
std::vector<RadialOperator> generator_powers(const RadialOperator& gen, int max_order) {
    std::vector<RadialOperator> powers;
    powers.reserve(static_cast<size_t>(max_order) + 1);
    powers.push_back(RadialOperator::one());
    for (int k = 1; k <= max_order; ++k)
        powers.push_back(powers.back() * gen);
    return powers;
}

}  // namespace

RadialOperator conjugate_by_r_power(const RadialOperator& a, const DimPoly& w) {
    RadialOperator gen = RadialOperator::partial()
        + RadialOperator::multiplication(RadialCoeff::monomial(w, -1));
    auto powers = generator_powers(gen, a.order());
    RadialOperator out;
    for (const auto& [k, c] : a.terms())
        out += RadialOperator::multiplication(c) * powers[k];
    return out;
}

RadialOperator formal_adjoint(const RadialOperator& a) {
    // d+ = -d - (n-1)/r; (c d^k)+ = (d+)^k (c.)
    RadialOperator dagger = -RadialOperator::partial()
        - RadialOperator::multiplication(
              RadialCoeff::monomial(DimPoly::variable() - DimPoly(1), -1));
    auto powers = generator_powers(dagger, a.order());
    RadialOperator out;
    for (const auto& [k, c] : a.terms())
        out += powers[k] * RadialOperator::multiplication(c);
    return out;
}

}  // namespace radialop
