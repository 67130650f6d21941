#include "vortexfield/poisson.hpp"

#include "vortexfield/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

namespace vortexfield {

namespace {

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

}  // namespace

void GridSpec::validate() const
{
    if (n_r < 4) throw DomainError("grid: n_r must be >= 4, got " + std::to_string(n_r));
    if (n_t < 8 || n_t % 2 != 0) {
        throw DomainError("grid: n_t must be even and >= 8, got " + std::to_string(n_t));
    }
}

double GridSpec::dt() const { return 2.0 * std::numbers::pi / n_t; }

PolarField::PolarField(GridSpec grid, double fill) : grid_(grid)
{
    grid_.validate();
    values_.assign(grid_.size(), fill);
}

double PolarField::max_abs() const
{
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool PolarField::all_finite() const
{
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double max_abs_difference(const PolarField& a, const PolarField& b)
{
    if (!(a.grid() == b.grid())) throw DomainError("max_abs_difference: grid mismatch");
    double m = 0.0;
    const auto av = a.values();
    const auto bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
    return m;
}

struct PoissonSolver::Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;

    explicit Plans(int n)
    {
        std::vector<double> re(n);
        std::vector<fftw_complex> sp(n / 2 + 1);
        std::lock_guard lock(planner_mutex());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        forward = fftw_plan_dft_r2c_1d(n, re.data(), sp.data(), flags);
        backward = fftw_plan_dft_c2r_1d(n, sp.data(), re.data(), flags | FFTW_DESTROY_INPUT);
    }

    ~Plans()
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }
};

PoissonSolver::PoissonSolver(GridSpec grid) : grid_(grid)
{
    grid_.validate();
    const int n = grid_.n_r;
    modes_ = grid_.n_t / 2 + 1;
    const double dr = grid_.dr();
    const double dt = grid_.dt();
    sub_.assign(n, 0.0);
    cprime_.assign(static_cast<std::size_t>(modes_) * n, 0.0);
    inv_pivot_.assign(static_cast<std::size_t>(modes_) * n, 0.0);

    std::vector<double> super(n), diag0(n);
    for (int i = 0; i < n; ++i) {
        const double r = grid_.radius(i);
        const double inner = i * dr;        // face r_{i-1/2}; zero at the pole
        const double outer = (i + 1) * dr;  // face r_{i+1/2}
        const double scale = 1.0 / (r * dr * dr);
        sub_[i] = -inner * scale;
        super[i] = -outer * scale;
        diag0[i] = (inner + outer) * scale;
    }
    // Ghost reflection u_n = -u_{n-1} enforces u = 0 at r = 1.
    diag0[n - 1] += -super[n - 1];
    super[n - 1] = 0.0;

    for (int m = 0; m < modes_; ++m) {
        const double s = 2.0 * std::sin(0.5 * m * dt) / dt;
        const double lambda = s * s;
        double* cp = &cprime_[static_cast<std::size_t>(m) * n];
        double* ip = &inv_pivot_[static_cast<std::size_t>(m) * n];
        double prev_c = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = grid_.radius(i);
            const double b = diag0[i] + lambda / (r * r);
            const double pivot = b - sub_[i] * prev_c;
            ip[i] = 1.0 / pivot;
            cp[i] = super[i] * ip[i];
            prev_c = cp[i];
        }
    }
    plans_ = std::make_unique<Plans>(grid_.n_t);
}

PoissonSolver::~PoissonSolver() = default;
PoissonSolver::PoissonSolver(PoissonSolver&&) noexcept = default;
PoissonSolver& PoissonSolver::operator=(PoissonSolver&&) noexcept = default;

void PoissonSolver::check(const PolarField& f) const
{
    if (!(f.grid() == grid_)) throw DomainError("poisson: right-hand side grid mismatch");
    if (!f.all_finite()) throw DomainError("poisson: non-finite right-hand side");
}

// spectrum is laid out ring-major: spectrum[i * modes_ + m].
void PoissonSolver::solve_modes(std::vector<std::complex<double>>& spectrum, Exec exec) const
{
    const int n = grid_.n_r;
    const int modes = modes_;
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int m = 0; m < modes; ++m) {
        const double* cp = &cprime_[static_cast<std::size_t>(m) * n];
        const double* ip = &inv_pivot_[static_cast<std::size_t>(m) * n];
        std::complex<double> prev = 0.0;
        for (int i = 0; i < n; ++i) {
            auto& x = spectrum[static_cast<std::size_t>(i) * modes + m];
            x = (x - sub_[i] * prev) * ip[i];
            prev = x;
        }
        for (int i = n - 2; i >= 0; --i) {
            auto& x = spectrum[static_cast<std::size_t>(i) * modes + m];
            x -= cp[i] * spectrum[static_cast<std::size_t>(i + 1) * modes + m];
        }
    }
}

PolarField PoissonSolver::solve(const PolarField& f, Exec exec) const
{
    check(f);
    const int n = grid_.n_r;
    const int nt = grid_.n_t;
    const int modes = modes_;
    std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(n) * modes);
    auto* spec = reinterpret_cast<fftw_complex*>(spectrum.data());
    const auto in = f.values();

#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int i = 0; i < n; ++i) {
        // r2c does not modify its input.
        fftw_execute_dft_r2c(plans_->forward, const_cast<double*>(&in[static_cast<std::size_t>(i) * nt]),
                             spec + static_cast<std::size_t>(i) * modes);
    }

    solve_modes(spectrum, exec);

    PolarField u(grid_);
    auto out = u.values();
    const double norm = 1.0 / nt;
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int i = 0; i < n; ++i) {
        double* row = &out[static_cast<std::size_t>(i) * nt];
        fftw_execute_dft_c2r(plans_->backward, spec + static_cast<std::size_t>(i) * modes, row);
        for (int k = 0; k < nt; ++k) row[k] *= norm;
    }
    return u;
}

PolarField PoissonSolver::solve_reference(const PolarField& f) const
{
    check(f);
    const int n = grid_.n_r;
    const int nt = grid_.n_t;
    const int modes = modes_;
    const double dt = grid_.dt();
    std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(n) * modes);
    for (int i = 0; i < n; ++i) {
        for (int m = 0; m < modes; ++m) {
            std::complex<double> acc = 0.0;
            for (int k = 0; k < nt; ++k) {
                const long phase = (static_cast<long>(m) * k) % nt;
                acc += f(i, k) * std::polar(1.0, -phase * dt);
            }
            spectrum[static_cast<std::size_t>(i) * modes + m] = acc;
        }
    }
    solve_modes(spectrum, Exec::serial);
    PolarField u(grid_);
    for (int i = 0; i < n; ++i) {
        const auto* row = &spectrum[static_cast<std::size_t>(i) * modes];
        for (int k = 0; k < nt; ++k) {
            double acc = row[0].real();
            for (int m = 1; m < modes - 1; ++m) {
                const long phase = (static_cast<long>(m) * k) % nt;
                acc += 2.0 * (row[m] * std::polar(1.0, phase * dt)).real();
            }
            // Nyquist mode appears once.
            acc += row[modes - 1].real() * ((k % 2 == 0) ? 1.0 : -1.0);
            u(i, k) = acc / nt;
        }
    }
    return u;
}

PolarField PoissonSolver::apply(const PolarField& u) const
{
    if (!(u.grid() == grid_)) throw DomainError("poisson: operand grid mismatch");
    const int n = grid_.n_r;
    const int nt = grid_.n_t;
    const double dr = grid_.dr();
    const double dt = grid_.dt();
    PolarField out(grid_);
    for (int i = 0; i < n; ++i) {
        const double r = grid_.radius(i);
        const double inner = i * dr;
        const double outer = (i + 1) * dr;
        for (int k = 0; k < nt; ++k) {
            const double c = u(i, k);
            const double below = i > 0 ? u(i - 1, k) : 0.0;
            const double above = i + 1 < n ? u(i + 1, k) : -c;
            const double left = u(i, (k + nt - 1) % nt);
            const double right = u(i, (k + 1) % nt);
            const double radial = (outer * (c - above) + inner * (c - below)) / (r * dr * dr);
            const double angular = (2.0 * c - left - right) / (r * r * dt * dt);
            out(i, k) = radial + angular;
        }
    }
    return out;
}

PolarField solve_dirichlet(const PolarField& f)
{
    const PoissonSolver solver(f.grid());
    return solver.solve(f);
}

double integrate_disk(const PolarField& g, Exec exec)
{
    const GridSpec& grid = g.grid();
    const int n = grid.n_r;
    const int nt = grid.n_t;
    std::vector<double> rings(n, 0.0);
    const auto v = g.values();
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < nt; ++k) s += v[static_cast<std::size_t>(i) * nt + k];
        rings[i] = s * grid.radius(i);
    }
    double total = 0.0;
    for (double s : rings) total += s;
    return total * grid.dr() * grid.dt();
}

double gradient_energy(const PolarField& u)
{
    const GridSpec& grid = u.grid();
    const int n = grid.n_r;
    const int nt = grid.n_t;
    const double dr = grid.dr();
    const double dt = grid.dt();
    double radial = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double face = (i + 1) * dr;
        double s = 0.0;
        for (int k = 0; k < nt; ++k) {
            const double d = u(i + 1, k) - u(i, k);
            s += d * d;
        }
        radial += face * s;
    }
    double boundary = 0.0;
    for (int k = 0; k < nt; ++k) boundary += u(n - 1, k) * u(n - 1, k);
    double angular = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int k = 0; k < nt; ++k) {
            const double d = u(i, (k + 1) % nt) - u(i, k);
            s += d * d;
        }
        angular += s / grid.radius(i);
    }
    return 0.5 * radial * dt / dr + boundary * dt / dr + 0.5 * angular * dr / dt;
}

}  // namespace vortexfield
