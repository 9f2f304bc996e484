#include "dqlab/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dqlab::quantum {

using cd = std::complex<double>;

// --- Grid1D ------------------------------------------------------------------

Grid1D Grid1D::uniform(double x_min, double x_max, int n) {
    if (n < 16) throw GridTooCoarse("quantum: Grid1D requires n >= 16, got " + std::to_string(n));
    if (!(x_max > x_min)) throw ValidationError("quantum: Grid1D requires x_max > x_min");
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n = n;
    g.dx = (x_max - x_min) / static_cast<double>(n - 1);
    return g;
}

std::vector<double> Grid1D::points() const {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = point(i);
    return xs;
}

// --- WaveFunction --------------------------------------------------------------

double WaveFunction::norm_sq() const { return psi.squaredNorm() * grid.dx; }

WaveFunction& WaveFunction::normalize() {
    const double n2 = norm_sq();
    if (!(n2 > 0.0)) throw ValidationError("quantum: cannot normalize a zero wavefunction");
    psi /= std::sqrt(n2);
    return *this;
}

WaveFunction ho_eigenstate(const Grid1D& grid, int level, double m, double omega, double hbar) {
    if (level < 0) throw NegativeIndex("quantum: ho_eigenstate level must be >= 0");
    WaveFunction wf{grid, Eigen::VectorXcd(grid.n)};
    const double scale = std::sqrt(m * omega / hbar);
    for (int i = 0; i < grid.n; ++i) {
        const double xi = scale * grid.point(i);
        // Hermite recurrence H_{k+1} = 2 xi H_k - 2 k H_{k-1}
        double h_prev = 0.0, h = 1.0;
        for (int k = 0; k < level; ++k) {
            const double h_next = 2.0 * xi * h - 2.0 * static_cast<double>(k) * h_prev;
            h_prev = h;
            h = h_next;
        }
        wf.psi[i] = h * std::exp(-0.5 * xi * xi);
    }
    wf.normalize();
    return wf;
}

Eigen::VectorXd harmonic_potential(const Grid1D& grid, double m, double omega) {
    Eigen::VectorXd v(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.point(i);
        v[i] = 0.5 * m * omega * omega * x * x;
    }
    return v;
}

EigenBasis discrete_eigenbasis(const Grid1D& grid, const Eigen::VectorXd& V, double m, double hbar,
                               int count) {
    if (V.size() != grid.n) throw IncompatibleGrids("quantum: potential/grid size mismatch");
    if (count < 1 || count > grid.n)
        throw ValidationError("quantum: eigenbasis count out of range");
    const double kin = hbar * hbar / (2.0 * m * grid.dx * grid.dx);
    Eigen::VectorXd diag(grid.n), off(grid.n - 1);
    for (int i = 0; i < grid.n; ++i) diag[i] = 2.0 * kin + V[i];
    off.setConstant(-kin);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    EigenBasis basis;
    basis.energies = es.eigenvalues().head(count);
    basis.states = es.eigenvectors().leftCols(count) / std::sqrt(grid.dx);
    return basis;
}

// --- DensityMatrix --------------------------------------------------------------

double DensityMatrix::trace() const { return rho.diagonal().real().sum() * grid.dx; }

double DensityMatrix::hermiticity_defect() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::purity() const {
    return ((rho * rho).diagonal().real().sum()) * grid.dx * grid.dx;
}

DensityMatrix density_from_wavefunction(const WaveFunction& psi, double norm_tol) {
    const double n2 = psi.norm_sq();
    if (std::abs(n2 - 1.0) > norm_tol)
        throw UnnormalizedInput("quantum: wavefunction norm^2 = " + std::to_string(n2));
    DensityMatrix dm{psi.grid, psi.psi * psi.psi.adjoint()};
    return dm;
}

// --- DoubledEvolver --------------------------------------------------------------

DoubledEvolver::DoubledEvolver(const Grid1D& grid, const Eigen::VectorXd& V, double m, double hbar,
                               double dt)
    : n_(grid.n), dt_(dt) {
    if (V.size() != grid.n) throw IncompatibleGrids("quantum: potential/grid size mismatch");
    if (!(dt > 0.0)) throw ValidationError("quantum: dt must be > 0");
    if (!(m > 0.0) || !(hbar > 0.0)) throw NonPositiveParameter("quantum: m, hbar must be > 0");

    const double kin = hbar * hbar / (2.0 * m * grid.dx * grid.dx);
    const cd ilam(0.0, 0.5 * dt / hbar);

    rhs_diag_.resize(n_);
    rhs_off_.resize(n_); // rhs_off_[n-1] unused
    lhs_cprime_.resize(n_);
    lhs_inv_den_.resize(n_);

    Eigen::VectorXcd lhs_diag(n_);
    for (int i = 0; i < n_; ++i) {
        const double h_ii = 2.0 * kin + V[i];
        rhs_diag_[i] = 1.0 - ilam * h_ii;
        lhs_diag[i] = 1.0 + ilam * h_ii;
    }
    const cd h_off = -kin;
    for (int i = 0; i < n_; ++i) rhs_off_[i] = -ilam * h_off;
    const cd lhs_off = ilam * h_off;

    // Thomas prefactorization of the constant tridiagonal LHS.
    cd den = lhs_diag[0];
    lhs_inv_den_[0] = 1.0 / den;
    lhs_cprime_[0] = lhs_off * lhs_inv_den_[0];
    for (int i = 1; i < n_; ++i) {
        den = lhs_diag[i] - lhs_off * lhs_cprime_[i - 1];
        lhs_inv_den_[i] = 1.0 / den;
        lhs_cprime_[i] = lhs_off * lhs_inv_den_[i];
    }
}

void DoubledEvolver::step(Eigen::VectorXcd& psi) const {
    if (psi.size() != n_) throw IncompatibleGrids("quantum: state/grid size mismatch");
    // b = (1 - i lam H) psi
    Eigen::VectorXcd b(n_);
    for (int i = 0; i < n_; ++i) {
        cd acc = rhs_diag_[i] * psi[i];
        if (i > 0) acc += rhs_off_[i] * psi[i - 1];
        if (i + 1 < n_) acc += rhs_off_[i] * psi[i + 1];
        b[i] = acc;
    }
    // Solve (1 + i lam H) psi' = b with prefactored Thomas sweep.
    const cd lhs_off = -(rhs_off_[0]); // i lam kin, constant off-diagonal of the LHS
    b[0] *= lhs_inv_den_[0];
    for (int i = 1; i < n_; ++i) b[i] = (b[i] - lhs_off * b[i - 1]) * lhs_inv_den_[i];
    for (int i = n_ - 2; i >= 0; --i) b[i] -= lhs_cprime_[i] * b[i + 1];
    psi.swap(b);
}

void DoubledEvolver::apply_columns(Eigen::MatrixXcd& m) const {
    Eigen::VectorXcd col(n_);
    for (int j = 0; j < m.cols(); ++j) {
        col = m.col(j);
        step(col);
        m.col(j) = col;
    }
}

void DoubledEvolver::step(DensityMatrix& rho) const {
    if (rho.rho.rows() != n_ || rho.rho.cols() != n_)
        throw IncompatibleGrids("quantum: density matrix/grid size mismatch");
    // rho <- U rho U^dagger = (U (U rho)^dagger)^dagger
    apply_columns(rho.rho);
    rho.rho.adjointInPlace();
    apply_columns(rho.rho);
    rho.rho.adjointInPlace();
}

std::vector<DensityMatrix> evolve_doubled(const DensityMatrix& rho0, const Eigen::VectorXd& V,
                                          const model::OscillatorParams& p, double dt, double t_end,
                                          int sample_stride) {
    if (sample_stride < 1) throw ValidationError("quantum: sample_stride must be >= 1");
    const DoubledEvolver evolver(rho0.grid, V, p.m, p.hbar, dt);
    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
    std::vector<DensityMatrix> samples;
    samples.reserve(n_steps / static_cast<std::size_t>(sample_stride) + 2);
    DensityMatrix rho = rho0;
    samples.push_back(rho);
    for (std::size_t s = 0; s < n_steps; ++s) {
        evolver.step(rho);
        if ((s + 1) % static_cast<std::size_t>(sample_stride) == 0 || s + 1 == n_steps)
            samples.push_back(rho);
    }
    return samples;
}

std::vector<cd> evolve_entry_series(const WaveFunction& psi0, const Eigen::VectorXd& V,
                                    const model::OscillatorParams& p, double dt, int n_samples,
                                    int i, int j, int record_every) {
    if (record_every < 1) throw ValidationError("quantum: record_every must be >= 1");
    if (i < 0 || i >= psi0.grid.n || j < 0 || j >= psi0.grid.n)
        throw ValidationError("quantum: entry index out of range");
    const DoubledEvolver evolver(psi0.grid, V, p.m, p.hbar, dt);
    Eigen::VectorXcd psi = psi0.psi;
    std::vector<cd> series;
    series.reserve(static_cast<std::size_t>(n_samples));
    series.push_back(psi[i] * std::conj(psi[j]));
    for (int s = 1; s < n_samples; ++s) {
        for (int r = 0; r < record_every; ++r) evolver.step(psi);
        series.push_back(psi[i] * std::conj(psi[j]));
    }
    return series;
}

// --- Bohr frequencies -------------------------------------------------------------

std::vector<SpectralPeak> bohr_frequencies(const std::vector<cd>& series, double dt,
                                           double rel_threshold) {
    const std::size_t n = series.size();
    if (n < 256)
        throw InsufficientSamples("quantum: bohr_frequencies needs >= 256 samples, got " +
                                  std::to_string(n));
    if (!(dt > 0.0)) throw ValidationError("quantum: dt must be > 0");

    cd mean(0.0, 0.0);
    for (const auto& z : series) mean += z;
    mean /= static_cast<double>(n);
    double max_dev = 0.0;
    for (const auto& z : series) max_dev = std::max(max_dev, std::abs(z - mean));

    // One-sided amplitude spectrum of the detrended series.
    const std::size_t n_half = n / 2;
    std::vector<double> amp(n_half + 1, 0.0);
    const double w0 = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 1; k <= n_half; ++k) {
        cd zk(0.0, 0.0), znk(0.0, 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            const double phase = w0 * static_cast<double>(k * t % n);
            const cd e(std::cos(phase), -std::sin(phase));
            const cd z = series[t] - mean;
            zk += z * e;
            znk += z * std::conj(e);
        }
        const double pk = std::norm(zk) + (k == n_half && n % 2 == 0 ? 0.0 : std::norm(znk));
        amp[k] = std::sqrt(pk) / static_cast<double>(n);
    }

    // Noise floor: constant series produce only rounding-level bins.
    const double floor = 1e-12 * std::max(1.0, std::abs(mean)) + 1e-9 * max_dev;
    double max_amp = 0.0;
    for (std::size_t k = 1; k <= n_half; ++k) max_amp = std::max(max_amp, amp[k]);
    if (max_amp <= floor) return {};

    std::vector<SpectralPeak> peaks;
    const double domega = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
    for (std::size_t k = 1; k <= n_half; ++k) {
        const double left = k > 1 ? amp[k - 1] : 0.0;
        const double right = k < n_half ? amp[k + 1] : 0.0;
        if (amp[k] >= left && amp[k] > right && amp[k] >= rel_threshold * max_amp &&
            amp[k] > floor)
            peaks.push_back({domega * static_cast<double>(k), amp[k]});
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const SpectralPeak& a, const SpectralPeak& b) { return a.amplitude > b.amplitude; });
    return peaks;
}

// --- Wigner transform ---------------------------------------------------------------

WignerFunction wigner_transform(const DensityMatrix& rho, double hbar) {
    if (!(hbar > 0.0)) throw NonPositiveParameter("quantum: hbar must be > 0");
    const int n = rho.grid.n;
    const double dx = rho.grid.dx;

    // g_i(k) = rho(i+k, i-k) on the anti-diagonal lattice, k stored mod n.
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int m = std::min(i, n - 1 - i);
        for (int k = -m; k <= m; ++k) {
            const int kk = k >= 0 ? k : k + n;
            g(i, kk) = rho.rho(i + k, i - k);
        }
    }

    // Fourier kernel F(kk, jj) = exp(-2 pi i j k / n) with j = jj - n/2.
    const int j0 = n / 2;
    Eigen::MatrixXcd f(n, n);
    const double w0 = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (int kk = 0; kk < n; ++kk) {
        const int k = kk <= n / 2 ? kk : kk - n;
        for (int jj = 0; jj < n; ++jj) {
            const int j = jj - j0;
            const double phase = -w0 * static_cast<double>(j) * static_cast<double>(k);
            f(kk, jj) = cd(std::cos(phase), std::sin(phase));
        }
    }

    const double dp = std::numbers::pi * hbar / (static_cast<double>(n) * dx);
    const Eigen::MatrixXcd wc = (dx / (std::numbers::pi * hbar)) * (g * f);

    WignerFunction w;
    w.x = rho.grid.points();
    w.p.resize(static_cast<std::size_t>(n));
    for (int jj = 0; jj < n; ++jj) w.p[static_cast<std::size_t>(jj)] = dp * static_cast<double>(jj - j0);
    w.dx = dx;
    w.dp = dp;
    w.W = wc.real();
    w.max_imag_residue = wc.imag().cwiseAbs().maxCoeff();
    return w;
}

double WignerFunction::normalization() const { return W.sum() * dx * dp; }

std::vector<double> x_marginal(const WignerFunction& w) {
    std::vector<double> m(static_cast<std::size_t>(w.W.rows()));
    for (Eigen::Index i = 0; i < w.W.rows(); ++i)
        m[static_cast<std::size_t>(i)] = w.W.row(i).sum() * w.dp;
    return m;
}

std::vector<double> p_marginal(const WignerFunction& w) {
    std::vector<double> m(static_cast<std::size_t>(w.W.cols()));
    for (Eigen::Index j = 0; j < w.W.cols(); ++j)
        m[static_cast<std::size_t>(j)] = w.W.col(j).sum() * w.dx;
    return m;
}

// --- radial sector ---------------------------------------------------------------------

namespace {

// Lowest eigenvalues of -(hbar^2/2m)(1/r)(r R')' + (K/2) r^2 R = E R,
// conservative flux form on r_i = (i + 1/2) h, symmetrized by diag(sqrt r).
std::vector<double> radial_eigenvalues(double m, double hbar, double K, double r_max, int n,
                                       int n_levels) {
    const double h = r_max / static_cast<double>(n);
    const double kin = hbar * hbar / (2.0 * m * h * h);
    Eigen::VectorXd diag(n), off(n - 1);
    for (int i = 0; i < n; ++i) {
        const double r = (static_cast<double>(i) + 0.5) * h;
        const double r_minus = static_cast<double>(i) * h;    // inner face; zero flux at r = 0
        const double r_plus = static_cast<double>(i + 1) * h; // outer face; Dirichlet past r_max
        diag[i] = kin * (r_plus + r_minus) / r + 0.5 * K * r * r;
    }
    for (int i = 0; i + 1 < n; ++i) {
        const double r = (static_cast<double>(i) + 0.5) * h;
        const double r_next = (static_cast<double>(i) + 1.5) * h;
        const double r_face = static_cast<double>(i + 1) * h;
        off[i] = -kin * r_face / std::sqrt(r * r_next);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    std::vector<double> levels(static_cast<std::size_t>(n_levels));
    for (int i = 0; i < n_levels; ++i) levels[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
    return levels;
}

} // namespace

std::vector<double> radial_spectrum(const model::DerivedParams& d, double m, double hbar,
                                    const RadialGrid& grid, int n_levels, double convergence_tol) {
    if (!(m > 0.0) || !(hbar > 0.0)) throw NonPositiveParameter("quantum: m, hbar must be > 0");
    if (!(grid.r_max > 0.0)) throw ValidationError("quantum: r_max must be > 0");
    if (n_levels < 1) throw ValidationError("quantum: n_levels must be >= 1");
    if (grid.n < 4 * n_levels || grid.n < 32)
        throw GridTooCoarse("quantum: radial grid too small for requested levels");

    const auto fine = radial_eigenvalues(m, hbar, d.K, grid.r_max, grid.n, n_levels);
    const auto coarse = radial_eigenvalues(m, hbar, d.K, grid.r_max, grid.n / 2, n_levels);
    for (int i = 0; i < n_levels; ++i) {
        // O(h^2) scheme: Richardson error estimate |E_n - E_{n/2}| / 3.
        const double est = std::abs(fine[static_cast<std::size_t>(i)] -
                                    coarse[static_cast<std::size_t>(i)]) / 3.0;
        const double scale = std::max(1.0, std::abs(fine[static_cast<std::size_t>(i)]));
        if (est > convergence_tol * scale)
            throw GridTooCoarse("quantum: radial level " + std::to_string(i) +
                                " unconverged, error estimate " + std::to_string(est));
    }
    return fine;
}

} // namespace dqlab::quantum
