#include "radialop/prefactor.hpp"

#include <utility>
#include <vector>

namespace radialop {

Prefactor::Prefactor(int i_power, int hbar_power, int mass_power, Rational scalar)
    : i_power_(((i_power % 4) + 4) % 4),
      hbar_power_(hbar_power),
      mass_power_(mass_power),
      scalar_(std::move(scalar)) {
    if (scalar_.is_negative()) {
        scalar_ = -scalar_;
        i_power_ = (i_power_ + 2) % 4;
    }
    if (scalar_.is_zero()) {
        i_power_ = 0;
        hbar_power_ = 0;
        mass_power_ = 0;
    }
}

Prefactor Prefactor::conjugated() const {
    return Prefactor((4 - i_power_) % 4, hbar_power_, mass_power_, scalar_);
}

Prefactor operator*(const Prefactor& a, const Prefactor& b) {
    return Prefactor(a.i_power_ + b.i_power_, a.hbar_power_ + b.hbar_power_,
                     a.mass_power_ + b.mass_power_, a.scalar_ * b.scalar_);
}

Prefactor operator*(const Prefactor& a, const Rational& q) {
    return Prefactor(a.i_power_, a.hbar_power_, a.mass_power_, a.scalar_ * q);
}

std::string Prefactor::str() const {
    if (scalar_.is_zero())
        return "0";

    std::string sign = (i_power_ >= 2) ? "-" : "";
    bool imaginary = (i_power_ % 2) == 1;

    auto symbol_power = [](const std::string& name, int p) {
        return p == 1 ? name : name + "^" + std::to_string(p);
    };

    std::vector<std::string> nums;
    std::vector<std::string> dens;
    if (imaginary)
        nums.push_back("i");
    if (scalar_.num() != 1)
        nums.push_back(scalar_.num().str());
    if (hbar_power_ > 0)
        nums.push_back(symbol_power("hbar", hbar_power_));
    if (mass_power_ > 0)
        nums.push_back(symbol_power("m", mass_power_));
    if (scalar_.den() != 1)
        dens.push_back(scalar_.den().str());
    if (hbar_power_ < 0)
        dens.push_back(symbol_power("hbar", -hbar_power_));
    if (mass_power_ < 0)
        dens.push_back(symbol_power("m", -mass_power_));

    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
                s += "*";
            s += parts[i];
        }
        return s;
    };

    std::string out = sign + (nums.empty() ? "1" : join(nums));
    if (!dens.empty())
        out += "/" + (dens.size() > 1 ? "(" + join(dens) + ")" : dens.front());
    return out;
}

}  // namespace radialop
