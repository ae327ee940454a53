#include "ratbound/ratfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ratbound {

Complex checked(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InvalidArgument("non-finite complex value");
    return z;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) checked(c);
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::vector<Complex> roots, Complex leading) {
    checked(leading);
    if (leading == Complex{}) throw InvalidArgument("leading coefficient must be nonzero");
    for (auto& b : roots) checked(b);
    Polynomial p;
    p.coeffs_ = expand_roots(roots, leading);
    p.roots_ = std::move(roots);
    return p;
}

Polynomial Polynomial::constant(Complex c) {
    if (c == Complex{}) return Polynomial{};
    return from_roots({}, c);
}

Complex Polynomial::leading() const {
    return coeffs_.empty() ? Complex{} : coeffs_.back();
}

std::vector<Complex> Polynomial::roots() const {
    if (roots_) return *roots_;
    return poly_roots(*this);
}

Complex Polynomial::operator()(Complex z) const {
    if (!roots_) return horner(z);
    Complex acc = coeffs_.back();
    for (const auto& b : *roots_) acc *= (z - b);
    return acc;
}

Complex Polynomial::derivative(Complex z) const {
    if (!roots_) return derivative().horner(z);
    const auto& rs = *roots_;
    // leading * sum_j prod_{i != j} (z - b_i)
    Complex sum{};
    for (std::size_t j = 0; j < rs.size(); ++j) {
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (i != j) prod *= (z - rs[i]);
        sum += prod;
    }
    return coeffs_.back() * sum;
}

Complex Polynomial::horner(Complex z) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex poly_eval(const Polynomial& p, Complex z) { return p.horner(z); }

std::vector<Complex> expand_roots(std::span<const Complex> roots, Complex leading) {
    std::vector<Complex> c{leading};
    for (const auto& b : roots) {
        c.push_back(Complex{});
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - b * c[i];
        c[0] = -b * c[0];
    }
    return c;
}

std::vector<Complex> poly_roots(const Polynomial& p, RootOptions opts) {
    if (p.is_zero()) throw InvalidArgument("poly_roots: zero polynomial");
    auto coeffs = p.coeffs();

    // Exact zero roots come off the low end first.
    std::size_t shift = 0;
    while (coeffs[shift] == Complex{}) ++shift;
    std::vector<Complex> out(shift, Complex{});
    const Polynomial q(std::vector<Complex>(coeffs.begin() + static_cast<std::ptrdiff_t>(shift), coeffs.end()));
    const int deg = q.degree();
    if (deg <= 0) return out;

    const auto qc = q.coeffs();
    const Polynomial dq = q.derivative();
    const double radius = std::pow(std::abs(qc.front() / qc.back()), 1.0 / deg);
    std::vector<Complex> z(static_cast<std::size_t>(deg));
    for (int j = 0; j < deg; ++j)
        z[static_cast<std::size_t>(j)] =
            std::polar(radius, 2.0 * std::numbers::pi * j / deg + 0.4);

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        bool moved = false;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const Complex pv = q.horner(z[i]);
            if (pv == Complex{}) continue;
            const Complex ratio = pv / dq.horner(z[i]);
            Complex s{};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            Complex step = ratio / (1.0 - ratio * s);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[i] -= step;
            if (std::abs(step) > 1e-15 * std::max(1.0, std::abs(z[i]))) moved = true;
        }
        if (!moved) break;
    }

    const double scale = q.max_abs_coeff();
    for (const auto& root : z) {
        const double bound = 1e-10 * scale * std::pow(std::max(1.0, std::abs(root)), deg);
        if (!(std::abs(q.horner(root)) <= bound))
            throw NonConvergence("poly_roots: residual test failed after " +
                                 std::to_string(opts.max_sweeps) + " sweeps");
    }
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

// ---------------------------------------------------------------------------
// PoleSet

PoleSet::PoleSet(std::vector<Complex> poles) : poles_(std::move(poles)) {
    for (const auto& a : poles_) {
        checked(a);
        if (!(std::abs(a) > 1.0)) throw InvalidArgument("pole must satisfy |a| > 1");
    }
}

PoleSet PoleSet::repeated(Complex a, int n) {
    if (n < 0) throw InvalidArgument("negative pole count");
    return PoleSet(std::vector<Complex>(static_cast<std::size_t>(n), a));
}

Complex PoleSet::w(Complex z) const {
    Complex acc{1.0, 0.0};
    for (const auto& a : poles_) acc *= (z - a);
    return acc;
}

Complex PoleSet::w_derivative(Complex z) const {
    Complex sum{};
    for (std::size_t j = 0; j < poles_.size(); ++j) {
        Complex prod{1.0, 0.0};
        for (std::size_t i = 0; i < poles_.size(); ++i)
            if (i != j) prod *= (z - poles_[i]);
        sum += prod;
    }
    return sum;
}

Complex PoleSet::log_derivative_times_z(Complex z) const {
    Complex sum{};
    for (const auto& a : poles_) sum += z / (z - a);
    return sum;
}

double PoleSet::distance_to_nearest(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& a : poles_) d = std::min(d, std::abs(z - a));
    return d;
}

void PoleSet::check_clear(Complex z) const {
    if (distance_to_nearest(z) < kPoleCutoff) throw NearPole("evaluation point too close to a pole");
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial numer, PoleSet poles)
    : numer_(std::move(numer)), poles_(std::move(poles)) {
    if (numer_.is_zero()) throw InvalidArgument("numerator is identically zero");
    if (numer_.degree() > poles_.n())
        throw InvalidArgument("numerator degree exceeds the number of poles");
    zeros_ = numer_.roots();
    for (const auto& b : zeros_)
        if (poles_.distance_to_nearest(b) < kPoleCutoff)
            throw InvalidArgument("numerator root coincides with a pole (reducible)");
}

RationalFunction RationalFunction::from_roots(std::vector<Complex> zeros, Complex leading,
                                              std::vector<Complex> poles) {
    return RationalFunction(Polynomial::from_roots(std::move(zeros), leading),
                            PoleSet(std::move(poles)));
}

Complex RationalFunction::operator()(Complex z) const {
    poles_.check_clear(z);
    return numer_(z) / poles_.w(z);
}

Complex RationalFunction::derivative(Complex z) const {
    poles_.check_clear(z);
    const Complex w = poles_.w(z);
    return (numer_.derivative(z) * w - numer_(z) * poles_.w_derivative(z)) / (w * w);
}

Complex RationalFunction::derivative_log_form(Complex z) const {
    poles_.check_clear(z);
    Complex s{};
    for (const auto& b : zeros_) s += 1.0 / (z - b);
    for (const auto& a : poles_.poles()) s -= 1.0 / (z - a);
    return (*this)(z) * s;
}

Complex rat_eval(const RationalFunction& r, Complex z) { return r(z); }
Complex rat_derivative_eval(const RationalFunction& r, Complex z) { return r.derivative(z); }

bool classify_zeros(const RationalFunction& r, const ZeroLocation& loc) {
    for (const auto& b : r.zeros()) {
        const double gap = std::abs(b) - loc.k;
        switch (loc.mode) {
            case ZeroMode::AllOutsideOrOn:
                if (gap < -kRegionTolerance) return false;
                break;
            case ZeroMode::AllInsideOrOn:
                if (gap > kRegionTolerance) return false;
                break;
            case ZeroMode::Unconstrained:
                break;
        }
    }
    return true;
}

double min_zero_distance_to_circle(const RationalFunction& r, double k) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& b : r.zeros()) d = std::min(d, std::abs(std::abs(b) - k));
    return d;
}

}  // namespace ratbound
