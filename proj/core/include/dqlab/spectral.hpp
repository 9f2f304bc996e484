// Cutoff-function momenta and the truncated bosonic spectral-action
// expansion
//
//   Tr f(D/Lambda) ~ 2 Lambda^4 f4 a0 + 2 Lambda^2 f2 a2 + f0 a4,
//
// with f0 = f(0) and f_k = Int_0^inf f(u) u^{k-1} du. The Seeley-deWitt
// coefficients a0, a2, a4 are opaque numeric inputs; higher momenta f_{-2k}
// are dropped (vanishing Taylor tail), so exactly three terms survive.
#pragma once

#include <optional>
#include <vector>

#include "dqlab/errors.hpp"

namespace dqlab::spectral {

struct Momenta {
    double f0 = 0.0;
    double f2 = 0.0;
    double f4 = 0.0;
};

class CutoffFunction {
  public:
    enum class Kind { Gaussian, Exponential, Sharp, Sampled };

    static CutoffFunction gaussian();              // e^{-u^2}
    static CutoffFunction exponential();           // e^{-u}
    static CutoffFunction sharp(double u_max);     // 1 on [0, u_max]
    // Piecewise-linear samples on an increasing grid starting at u = 0;
    // f is taken as 0 beyond the last sample.
    static CutoffFunction sampled(std::vector<double> u, std::vector<double> f);

    Kind kind() const { return kind_; }
    double operator()(double u) const;
    double f0() const { return (*this)(0.0); }
    // Finite support end for Sharp/Sampled kinds.
    std::optional<double> support_end() const;
    // Exact momenta for the built-in kinds (cross-check for the quadrature).
    std::optional<Momenta> closed_form() const;
    // Sample abscissae (empty for built-in kinds).
    const std::vector<double>& sample_grid() const;

  private:
    CutoffFunction() = default;
    Kind kind_ = Kind::Gaussian;
    double u_max_ = 0.0;
    std::vector<double> su_, sf_;
};

// f0 = f(0); f2, f4 by adaptive quadrature (trapezoid on the sample grid for
// Sampled kinds). Throws NonConvergentTail when a sampled function has not
// decayed by its last sample.
Momenta cutoff_momenta(const CutoffFunction& f, double abs_tol = 1e-9);

struct ActionTerms {
    double cosmological = 0.0;     // 2 Lambda^4 f4 a0
    double einstein_hilbert = 0.0; // 2 Lambda^2 f2 a2
    double yang_mills = 0.0;       // f0 a4
    double total = 0.0;
};

ActionTerms assemble_action(const Momenta& m, double a0, double a2, double a4, double Lambda);

} // namespace dqlab::spectral
