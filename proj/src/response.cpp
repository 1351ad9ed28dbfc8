#include "unruh_otto/response.hpp"

#include "adaptive_quadrature.hpp"
#include "unruh_otto/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace unruh_otto::response {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

// Neville extrapolation of (x_j, f_j) to x = 0; returns the value using all points and
// the value that omits the coarsest one.
template <class T>
std::pair<T, T> extrapolate_to_zero(const std::vector<double>& x, const std::vector<T>& f) {
    const std::size_t m = x.size();
    std::vector<T> table(f.begin(), f.end());
    T without_first = table.back();
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = 0; i + level < m; ++i) {
            const double xi = x[i];
            const double xj = x[i + level];
            table[i] = (table[i + 1] * xi - table[i] * xj) / (xi - xj);
        }
        if (level + 1 == m - 1) without_first = table[1];
    }
    return {table[0], m > 1 ? without_first : table[0]};
}

struct RegulatedIntegral {
    cplx value;
    double error = 0.0;
    long panels = 0;
};

class WindowedIntegrand {
public:
    WindowedIntegrand(const ResponseArgs& args, const QuadratureConfig& qcfg, double domain_factor)
        : alpha_(args.alpha),
          omega_(args.omega),
          excite_(1.0 - args.p),
          relax_(args.p / args.n),
          tau_half_(args.tau_half()),
          half_width_(domain_factor * tau_half_),
          images_(qcfg.image_terms),
          rel_tol_(qcfg.rel_tol),
          max_panels_(qcfg.max_panels) {}

    double half_width() const { return half_width_; }

    // Integral over sigma of xi(sigma + d/2) xi(sigma - d/2) across the square's cross-section.
    double window_overlap(double d) const {
        const double h = half_width_ - 0.5 * std::abs(d);
        if (h <= 0.0) return 0.0;
        const double th2 = tau_half_ * tau_half_;
        auto f = [&](double sigma) {
            const double u = sigma + 0.5 * d;
            const double w = sigma - 0.5 * d;
            return th2 / (u * u + th2) * th2 / (w * w + th2);
        };
        std::vector<double> bp = {-h, h};
        for (double c : {-0.5 * std::abs(d), 0.0, 0.5 * std::abs(d)}) {
            for (double off : {-4.0 * tau_half_, -tau_half_, 0.0, tau_half_, 4.0 * tau_half_}) {
                if (std::abs(c + off) < h) bp.push_back(c + off);
            }
        }
        std::sort(bp.begin(), bp.end());
        bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
        auto r = detail::integrate_adaptive<double>(f, bp, 1e-15 * tau_half_, 1e-13, 4000);
        if (!r.converged) throw NonConvergence("delta_p_quadrature: window overlap did not converge");
        return r.value;
    }

    cplx operator()(double d, double epsilon) const {
        const cplx g = wightman(alpha_, d, epsilon, images_) + wightman_tail(alpha_, d, epsilon, images_);
        const cplx phase = std::polar(1.0, -omega_ * d);
        return (excite_ * phase - relax_ * std::conj(phase)) * g * window_overlap(d);
    }

    RegulatedIntegral integrate(double epsilon, int grid) const {
        const double outer = 2.0 * half_width_;
        std::vector<double> bp;
        for (int i = 0; i <= grid; ++i) bp.push_back(-outer + 2.0 * outer * i / grid);
        // Geometric grading onto the regulator ridge at d = 0.
        for (double r = epsilon; r < outer; r *= 4.0) {
            bp.push_back(r);
            bp.push_back(-r);
        }
        bp.push_back(0.0);
        std::sort(bp.begin(), bp.end());
        bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

        auto f = [&](double d) { return (*this)(d, epsilon); };
        auto r = detail::integrate_adaptive<cplx>(f, bp, 0.0, rel_tol_, max_panels_);
        if (!r.converged) {
            std::ostringstream os;
            os << "delta_p_quadrature: outer rule missed rel_tol=" << rel_tol_ << " with "
               << r.panels << " panels (error " << r.error << ")";
            throw NonConvergence(os.str());
        }
        return {r.value, r.error, r.panels};
    }

private:
    double alpha_;
    double omega_;
    double excite_;
    double relax_;
    double tau_half_;
    double half_width_;
    int images_;
    double rel_tol_;
    long max_panels_;
};

} // namespace

void ResponseArgs::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("ResponseArgs: p must lie in [0, 1]");
    if (n < 1) throw DomainError("ResponseArgs: n must be >= 1");
    if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("ResponseArgs: omega must be >= 0");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("ResponseArgs: alpha must be > 0");
    if (!(v > 0.0 && v < 1.0)) throw DomainError("ResponseArgs: v must lie in (0, 1)");
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("ResponseArgs: g must be > 0");
}

double ResponseArgs::kernel_time() const { return 2.0 * std::atanh(v); }

double ResponseArgs::tau_half() const { return std::atanh(v) / alpha; }

void QuadratureConfig::validate() const {
    if (epsilon_schedule.empty()) throw DomainError("QuadratureConfig: empty epsilon_schedule");
    for (std::size_t i = 0; i < epsilon_schedule.size(); ++i) {
        if (!(epsilon_schedule[i] > 0.0)) throw DomainError("QuadratureConfig: regulators must be > 0");
        if (i > 0 && !(epsilon_schedule[i] < epsilon_schedule[i - 1])) {
            throw DomainError("QuadratureConfig: epsilon_schedule must be strictly decreasing");
        }
    }
    if (image_terms < 1) throw DomainError("QuadratureConfig: image_terms must be >= 1");
    if (!(domain_factor > 1.0)) throw DomainError("QuadratureConfig: domain_factor must be > 1");
    if (grid < 16) throw DomainError("QuadratureConfig: grid must be >= 16");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("QuadratureConfig: rel_tol must lie in (0, 1)");
    if (max_panels < 1) throw DomainError("QuadratureConfig: max_panels must be >= 1");
}

double switching(double tau, double tau_half) {
    if (!(tau_half > 0.0)) throw DomainError("switching: tau_half must be > 0");
    const double th2 = tau_half * tau_half;
    return th2 / (tau * tau + th2);
}

std::complex<double> wightman(double alpha, double dtau, double epsilon, int image_terms) {
    if (!(alpha > 0.0) || !(epsilon > 0.0) || image_terms < 0) {
        throw DomainError("wightman: requires alpha > 0, epsilon > 0, K >= 0");
    }
    const cplx c(dtau, -epsilon);
    const double b = 2.0 * kPi / alpha;
    cplx sum = 1.0 / (c * c);
    // Pair +k with -k so the truncated sum keeps its conjugation symmetry.
    for (int k = image_terms; k >= 1; --k) {
        const cplx up = c - cplx(0.0, b * k);
        const cplx down = c + cplx(0.0, b * k);
        sum += 1.0 / (up * up) + 1.0 / (down * down);
    }
    return -sum / kFourPiSq;
}

std::complex<double> wightman_tail(double alpha, double dtau, double epsilon, int image_terms) {
    if (!(alpha > 0.0) || !(epsilon > 0.0) || image_terms < 0) {
        throw DomainError("wightman_tail: requires alpha > 0, epsilon > 0, K >= 0");
    }
    // Each +-k pair is h(k) = 2 (c^2 - b^2 k^2) / (c^2 + b^2 k^2)^2, an exact derivative of
    // 2 t / (c^2 + b^2 t^2); the midpoint rule starts at K + 1/2.
    const cplx c(dtau, -epsilon);
    const double b = 2.0 * kPi / alpha;
    const double t = image_terms + 0.5;
    const cplx integral = -2.0 * t / (c * c + b * b * t * t);
    return -integral / kFourPiSq;
}

double wightman_tail_bound(double alpha, double dtau, double epsilon, int image_terms) {
    const cplx c(dtau, -epsilon);
    const double b = 2.0 * kPi / alpha;
    const double t = image_terms + 0.5;
    const cplx u = b * b * t * t;
    const cplx c2 = c * c;
    const cplx dh = 4.0 * b * b * t * (u - 3.0 * c2) / ((c2 + u) * (c2 + u) * (c2 + u));
    // Midpoint remainder is -h'/24 to leading order; keep a factor two in hand.
    return std::abs(dh) / 12.0 / kFourPiSq;
}

double delta_p_closed(const ResponseArgs& args, const specfun::SeriesConfig& cfg) {
    args.validate();
    const double a = args.gap_ratio();
    const double y = args.kernel_time();
    const double up = specfun::j_kernel({-a, y}, cfg);
    const double down = specfun::j_kernel({a, y}, cfg);
    return args.g * args.g * ((1.0 - args.p) * up - args.p / args.n * down);
}

double delta_p_limit_n_inf(const ResponseArgs& args, const specfun::SeriesConfig& cfg) {
    args.validate();
    const double a = args.gap_ratio();
    const double y = args.kernel_time();
    return args.g * args.g * (1.0 - args.p) * specfun::j_kernel({-a, y}, cfg);
}

QuadratureResult delta_p_quadrature(const ResponseArgs& args, const QuadratureConfig& qcfg) {
    args.validate();
    qcfg.validate();

    const double tau_half = args.tau_half();
    const WindowedIntegrand integrand(args, qcfg, qcfg.domain_factor);

    std::vector<double> eps;
    std::vector<cplx> values;
    QuadratureResult result;
    double rule_error = 0.0;
    for (double fraction : qcfg.epsilon_schedule) {
        const double e = fraction * tau_half;
        const auto r = integrand.integrate(e, qcfg.grid);
        eps.push_back(e);
        values.push_back(r.value);
        result.per_epsilon.push_back(args.g * args.g * r.value.real());
        result.panels += r.panels;
        rule_error = std::max(rule_error, r.error);
    }

    cplx estimate;
    double residual = 0.0;
    double amplification = 1.0;
    if (qcfg.extrapolate && values.size() > 1) {
        const auto [best, previous] = extrapolate_to_zero(eps, values);
        estimate = best;
        residual = std::abs(best.real() - previous.real());
        // Sum of |Lagrange weights| at 0 bounds how rule errors propagate.
        amplification = 0.0;
        for (std::size_t i = 0; i < eps.size(); ++i) {
            double w = 1.0;
            for (std::size_t j = 0; j < eps.size(); ++j) {
                if (j != i) w *= eps[j] / (eps[j] - eps[i]);
            }
            amplification += std::abs(w);
        }
    } else {
        estimate = values.back();
        if (values.size() > 1) residual = std::abs(values.back().real() - values[values.size() - 2].real());
    }

    // Domain truncation does not depend on the regulator: repeat the coarsest one on a
    // doubled square and shift the estimate by the change. The remainder decays like
    // domain_factor^-3, so the full size of the shift bounds it.
    const WindowedIntegrand doubled(args, qcfg, 2.0 * qcfg.domain_factor);
    const auto wide = doubled.integrate(eps.front(), 2 * qcfg.grid);
    const double truncation_shift = wide.value.real() - values.front().real();
    const double truncation = std::abs(truncation_shift);
    estimate += truncation_shift;

    // Image-sum tail remainder is largest at d = 0; integrate its bound against |window|.
    const double weight = (1.0 - args.p) + args.p / args.n;
    const double window_mass = kPi * tau_half * kPi * tau_half;
    const double tail = weight * window_mass *
                        wightman_tail_bound(args.alpha, 0.0, eps.back(), qcfg.image_terms);

    const double g2 = args.g * args.g;
    result.estimate = g2 * estimate.real();
    result.error_estimate = g2 * (amplification * rule_error + residual + truncation + tail);
    result.imag_residual = g2 * std::abs(estimate.imag());
    const double slack = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(result.estimate));
    if (result.imag_residual > result.error_estimate + slack) {
        std::ostringstream os;
        os << "delta_p_quadrature: imaginary part " << result.imag_residual
           << " exceeds error estimate " << result.error_estimate;
        throw NonConvergence(os.str());
    }
    return result;
}

} // namespace unruh_otto::response
