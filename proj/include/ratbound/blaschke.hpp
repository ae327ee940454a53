#pragma once

#include "ratbound/ratfun.hpp"

namespace ratbound {

/// Tolerance on ||z| - 1| for operations restricted to the unit circle.
inline constexpr double kCircleTolerance = 1e-12;

/// B(z) = prod (1 - conj(a_j) z) / (z - a_j) over a prescribed pole set.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(PoleSet poles) : poles_(std::move(poles)) {}

    const PoleSet& poles() const { return poles_; }
    int n() const { return poles_.n(); }

    /// Factor-by-factor product; throws NearPole.
    Complex operator()(Complex z) const;

    /// |B'(z)| on the unit circle as sum (|a_j|^2 - 1) / |z - a_j|^2.
    /// Throws OffCircle.
    double deriv_modulus_on_unit_circle(Complex z) const;

    /// B as a member of R_n: numerator prod (1 - conj(a_j) z) in root form,
    /// times a unimodular factor lambda.
    RationalFunction as_rational(Complex lambda = {1.0, 0.0}) const;

private:
    PoleSet poles_;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);
double blaschke_deriv_modulus_on_T1(const BlaschkeProduct& b, Complex z);

/// Throws OffCircle unless ||z| - 1| <= kCircleTolerance.
void require_unit_circle(Complex z);

/// |(r*)'(z)| on the unit circle, where r*(z) = B(z) conj(r(1/conj z)),
/// evaluated through the identity |z (r*)'(z)| = | |B'(z)| r(z) - z r'(z) |.
double star_transform_deriv_modulus(const RationalFunction& r, Complex z);

}  // namespace ratbound
