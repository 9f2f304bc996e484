#include "dqlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace dqlab::spectral {

namespace {

// Recursive adaptive Simpson with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Integral of f(u) u^{k-1} over [0, inf) for a decaying f: doubling windows
// until the increment falls below tol.
double integrate_decaying(const CutoffFunction& f, int k, double tol) {
    const auto integrand = [&f, k](double u) { return f(u) * std::pow(u, k - 1); };
    if (auto end = f.support_end())
        return integrate(integrand, 0.0, *end, tol * 0.1);
    double upper = 1.0;
    double total = integrate(integrand, 0.0, upper, tol * 0.1);
    while (upper < 1e6) {
        const double inc = integrate(integrand, upper, 2.0 * upper, tol * 0.1);
        total += inc;
        upper *= 2.0;
        if (upper >= 8.0 && std::abs(inc) < 0.1 * tol) return total;
    }
    throw NonConvergentTail("spectral: integrand did not decay by u = 1e6");
}

} // namespace

CutoffFunction CutoffFunction::gaussian() {
    CutoffFunction f;
    f.kind_ = Kind::Gaussian;
    return f;
}

CutoffFunction CutoffFunction::exponential() {
    CutoffFunction f;
    f.kind_ = Kind::Exponential;
    return f;
}

CutoffFunction CutoffFunction::sharp(double u_max) {
    if (!(u_max > 0.0)) throw ValidationError("spectral: sharp cutoff needs u_max > 0");
    CutoffFunction f;
    f.kind_ = Kind::Sharp;
    f.u_max_ = u_max;
    return f;
}

CutoffFunction CutoffFunction::sampled(std::vector<double> u, std::vector<double> f) {
    if (u.size() != f.size() || u.size() < 2)
        throw ValidationError("spectral: sampled cutoff needs matching grids with >= 2 points");
    if (u.front() != 0.0) throw ValidationError("spectral: sampled cutoff grid must start at 0");
    for (std::size_t i = 1; i < u.size(); ++i)
        if (!(u[i] > u[i - 1])) throw ValidationError("spectral: sample grid must increase");
    for (double v : f)
        if (v < 0.0 || !std::isfinite(v))
            throw ValidationError("spectral: cutoff values must be finite and >= 0");
    CutoffFunction c;
    c.kind_ = Kind::Sampled;
    c.su_ = std::move(u);
    c.sf_ = std::move(f);
    return c;
}

double CutoffFunction::operator()(double u) const {
    switch (kind_) {
        case Kind::Gaussian: return std::exp(-u * u);
        case Kind::Exponential: return std::exp(-u);
        case Kind::Sharp: return u <= u_max_ ? 1.0 : 0.0;
        case Kind::Sampled: {
            if (u <= su_.front()) return sf_.front();
            if (u >= su_.back()) return 0.0;
            const auto it = std::upper_bound(su_.begin(), su_.end(), u);
            const std::size_t hi = static_cast<std::size_t>(it - su_.begin());
            const double t = (u - su_[hi - 1]) / (su_[hi] - su_[hi - 1]);
            return sf_[hi - 1] + t * (sf_[hi] - sf_[hi - 1]);
        }
    }
    return 0.0;
}

std::optional<double> CutoffFunction::support_end() const {
    if (kind_ == Kind::Sharp) return u_max_;
    if (kind_ == Kind::Sampled) return su_.back();
    return std::nullopt;
}

std::optional<Momenta> CutoffFunction::closed_form() const {
    switch (kind_) {
        case Kind::Gaussian: return Momenta{1.0, 0.5, 0.5};
        case Kind::Exponential: return Momenta{1.0, 1.0, 6.0};
        case Kind::Sharp: {
            const double u2 = u_max_ * u_max_;
            return Momenta{1.0, 0.5 * u2, 0.25 * u2 * u2};
        }
        case Kind::Sampled: return std::nullopt;
    }
    return std::nullopt;
}

const std::vector<double>& CutoffFunction::sample_grid() const { return su_; }

Momenta cutoff_momenta(const CutoffFunction& f, double abs_tol) {
    Momenta m;
    m.f0 = f.f0();

    if (f.kind() == CutoffFunction::Kind::Sampled) {
        const auto& grid = f.sample_grid();
        const double u_last = grid.back();
        const double f_last = f(std::nextafter(u_last, 0.0));
        // Crude tail bound assuming at-best 1/u^5 decay past the last sample.
        if (f_last * u_last * u_last * u_last * u_last > 100.0 * abs_tol)
            throw NonConvergentTail("spectral: sampled cutoff has not decayed by u = " +
                                    std::to_string(u_last));
        // f is linear on each sample cell, so f(u) u^{k-1} is a polynomial of
        // degree k there; 3-point Gauss-Legendre integrates it exactly.
        static constexpr double gx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
        static constexpr double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
        const auto cell = [&f](double a, double b, int k) {
            const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
            double acc = 0.0;
            for (int g = 0; g < 3; ++g) {
                const double u = mid + half * gx[g];
                acc += gw[g] * f(u) * std::pow(u, k - 1);
            }
            return acc * half;
        };
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            m.f2 += cell(grid[i], grid[i + 1], 2);
            m.f4 += cell(grid[i], grid[i + 1], 4);
        }
        return m;
    }

    m.f2 = integrate_decaying(f, 2, abs_tol);
    m.f4 = integrate_decaying(f, 4, abs_tol);
    return m;
}

ActionTerms assemble_action(const Momenta& m, double a0, double a2, double a4, double Lambda) {
    if (Lambda < 0.0) throw ValidationError("spectral: Lambda must be >= 0");
    ActionTerms t;
    const double L2 = Lambda * Lambda;
    t.cosmological = 2.0 * L2 * L2 * m.f4 * a0;
    t.einstein_hilbert = 2.0 * L2 * m.f2 * a2;
    t.yang_mills = m.f0 * a4;
    t.total = t.cosmological + t.einstein_hilbert + t.yang_mills;
    return t;
}

} // namespace dqlab::spectral
