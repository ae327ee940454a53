#include "ratbound/blaschke.hpp"

#include <cmath>
#include <complex>

namespace ratbound {

Complex BlaschkeProduct::operator()(Complex z) const {
    poles_.check_clear(z);
    Complex acc{1.0, 0.0};
    for (const auto& a : poles_.poles()) acc *= (1.0 - std::conj(a) * z) / (z - a);
    return acc;
}

void require_unit_circle(Complex z) {
    if (std::abs(std::abs(z) - 1.0) > kCircleTolerance)
        throw OffCircle("point is not on the unit circle");
}

double BlaschkeProduct::deriv_modulus_on_unit_circle(Complex z) const {
    require_unit_circle(z);
    poles_.check_clear(z);
    double sum = 0.0;
    for (const auto& a : poles_.poles()) sum += (std::norm(a) - 1.0) / std::norm(z - a);
    return sum;
}

RationalFunction BlaschkeProduct::as_rational(Complex lambda) const {
    // prod (1 - conj(a) z) = prod(-conj(a)) * prod (z - 1/conj(a))
    std::vector<Complex> zeros;
    Complex leading = lambda;
    for (const auto& a : poles_.poles()) {
        zeros.push_back(1.0 / std::conj(a));
        leading *= -std::conj(a);
    }
    return RationalFunction(Polynomial::from_roots(std::move(zeros), leading), poles_);
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) { return b(z); }

double blaschke_deriv_modulus_on_T1(const BlaschkeProduct& b, Complex z) {
    return b.deriv_modulus_on_unit_circle(z);
}

double star_transform_deriv_modulus(const RationalFunction& r, Complex z) {
    require_unit_circle(z);
    const BlaschkeProduct b(r.poles());
    const double bprime = b.deriv_modulus_on_unit_circle(z);
    return std::abs(bprime * r(z) - z * r.derivative(z));
}

}  // namespace ratbound
