#include "unruh_otto/specfun.hpp"

#include "unruh_otto/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace unruh_otto::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
constexpr int kMaxExpintIter = 200000;

// Predicted direct-sum length above which the Euler-Maclaurin tail takes over.
constexpr long kDirectTermBudget = 64;
constexpr int kEulerMaclaurinOrder = 8;

// B_{2j} / (2j)! for j = 1..8.
constexpr std::array<double, kEulerMaclaurinOrder> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

std::string describe(double z, double s, double a) {
    std::ostringstream os;
    os.precision(17);
    os << "lerch_phi(z=" << z << ", s=" << s << ", a=" << a << ")";
    return os.str();
}

bool is_integer(double s) { return s == std::floor(s); }

// z^k (k + a)^{-s}; integer s allows a negative base.
double lerch_term(double zk, double s, double shifted) {
    return zk * std::pow(shifted, -s);
}

double expint_series_integer(int n, double x) {
    const int nm1 = n - 1;
    double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - std::numbers::egamma;
    double fact = 1.0;
    for (int i = 1; i <= kMaxExpintIter; ++i) {
        fact *= -x / i;
        double del;
        if (i != nm1) {
            del = -fact / (i - nm1);
        } else {
            double psi = -std::numbers::egamma;
            for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
            del = fact * (-std::log(x) + psi);
        }
        ans += del;
        if (std::abs(del) < std::abs(ans) * kEps) return ans;
    }
    throw NonConvergence("expint_e: power series did not converge");
}

double expint_series_real(double s, double x) {
    // E_s(x) = x^{s-1} Gamma(1-s) - sum_k (-x)^k / (k! (k+1-s)), s not an integer.
    double sum = 0.0;
    double fact = 1.0;
    for (int k = 0; k <= kMaxExpintIter; ++k) {
        if (k > 0) fact *= -x / k;
        const double del = fact / (k + 1.0 - s);
        sum += del;
        if (k > 0 && std::abs(del) < std::abs(sum) * kEps) {
            return std::pow(x, s - 1.0) * std::tgamma(1.0 - s) - sum;
        }
    }
    throw NonConvergence("expint_e: power series did not converge");
}

double expint_continued_fraction(double s, double x) {
    const double nm1 = s - 1.0;
    double b = x + s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxExpintIter; ++i) {
        const double an = -i * (nm1 + i);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h * std::exp(-x);
    }
    throw NonConvergence("expint_e: continued fraction did not converge");
}

void check_pole(double a, double guard, double z, double s) {
    const double nearest = std::round(a);
    if (nearest <= 0.0 && std::abs(a - nearest) < guard) {
        throw PoleProximity(describe(z, s, a) + ": shift is within the pole guard of " +
                            std::to_string(static_cast<long>(nearest)));
    }
}

// Sum of the first `count` terms starting at k = first, with z^first supplied.
struct Partial {
    double sum = 0.0;
    double z_power = 1.0; // z^(next k)
};

void accumulate(Partial& acc, double z, double s, double a, long first, long count) {
    for (long k = first; k < first + count; ++k) {
        acc.sum += lerch_term(acc.z_power, s, k + a);
        acc.z_power *= z;
    }
}

double lerch_direct(double z, double s, double a, const SeriesConfig& cfg) {
    double sum = 0.0;
    double zk = 1.0;
    for (long k = 0; k < cfg.max_terms; ++k) {
        sum += lerch_term(zk, s, k + a);
        zk *= z;
        const double next = k + 1 + a;
        if (next > 0.0) {
            // (k + a)^{-s} is decreasing beyond this point, so the rest is geometric.
            const double bound = zk * std::pow(next, -s) / (1.0 - z);
            if (bound <= cfg.rel_tol * std::abs(sum)) return sum;
        }
    }
    throw NonConvergence(describe(z, s, a) + ": tail bound not met within max_terms=" +
                         std::to_string(cfg.max_terms));
}

// Derivative of f(t) = e^{-lambda t} (t + a)^{-s} at t = n, order m.
double tail_derivative(int m, double lambda, double s, double shifted, double decay) {
    double total = 0.0;
    double binom = 1.0;
    double rising = 1.0; // (s)_j
    for (int j = 0; j <= m; ++j) {
        if (j > 0) {
            binom = binom * (m - j + 1) / j;
            rising *= s + j - 1;
        }
        const double lam = std::pow(-lambda, m - j);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        total += binom * lam * sign * rising * std::pow(shifted, -s - j);
    }
    return decay * total;
}

double lerch_euler_maclaurin(double z, double s, double a, const SeriesConfig& cfg) {
    const double lambda = z == 1.0 ? 0.0 : -std::log(z);
    long n = std::max<long>(16, static_cast<long>(std::ceil(-a)) + 16);
    if (n > cfg.max_terms) {
        throw NonConvergence(describe(z, s, a) + ": Euler-Maclaurin head needs " + std::to_string(n) +
                             " terms, max_terms=" + std::to_string(cfg.max_terms));
    }
    Partial head;
    accumulate(head, z, s, a, 0, n);
    while (true) {
        const double shifted = n + a;
        const double decay = std::exp(-lambda * n);
        const double integral =
            std::exp(lambda * a) * std::pow(shifted, 1.0 - s) * expint_e(s, lambda * shifted);
        double tail = integral + 0.5 * decay * std::pow(shifted, -s);
        double last = 0.0;
        for (int j = 1; j <= kEulerMaclaurinOrder; ++j) {
            last = kBernoulliOverFactorial[j - 1] *
                   tail_derivative(2 * j - 1, lambda, s, shifted, decay);
            tail -= last;
        }
        const double total = head.sum + tail;
        if (std::abs(last) <= 0.1 * cfg.rel_tol * std::abs(total)) return total;
        if (2 * n > cfg.max_terms) {
            throw NonConvergence(describe(z, s, a) +
                                 ": Euler-Maclaurin tail not converged within max_terms=" +
                                 std::to_string(cfg.max_terms));
        }
        accumulate(head, z, s, a, n, n);
        n *= 2;
    }
}

} // namespace

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("SeriesConfig: rel_tol must lie in (0, 1)");
    if (max_terms < 1) throw DomainError("SeriesConfig: max_terms must be >= 1");
    if (!(pole_guard > 0.0)) throw DomainError("SeriesConfig: pole_guard must be > 0");
}

double expint_e(double s, double x) {
    if (!(s >= 1.0) || !(x >= 0.0)) throw DomainError("expint_e: requires s >= 1 and x >= 0");
    if (x == 0.0) {
        if (s == 1.0) throw DomainError("expint_e: E_1(0) is infinite");
        return 1.0 / (s - 1.0);
    }
    if (is_integer(s) && s < 1e6) {
        const int n = static_cast<int>(s);
        return x > 1.0 ? expint_continued_fraction(s, x) : expint_series_integer(n, x);
    }
    return x >= 0.25 ? expint_continued_fraction(s, x) : expint_series_real(s, x);
}

double lerch_phi(double z, double s, double a, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError(describe(z, s, a) + ": z must lie in [0, 1]");
    if (!(s >= 1.0)) throw DomainError(describe(z, s, a) + ": s must be >= 1");
    if (!std::isfinite(a)) throw DomainError(describe(z, s, a) + ": a must be finite");
    if (z == 1.0 && s == 1.0) throw DomainError(describe(z, s, a) + ": harmonic series diverges");
    if (z == 1.0 && !(a - cfg.pole_guard > 0.0)) {
        throw PoleProximity(describe(z, s, a) + ": Hurwitz zeta needs a > pole_guard");
    }
    check_pole(a, cfg.pole_guard, z, s);
    if (a < 0.0 && !is_integer(s)) {
        throw DomainError(describe(z, s, a) + ": negative shift requires integer s");
    }

    if (z == 0.0) return std::pow(a, -s);

    if (z < 1.0) {
        // Terms needed before the geometric tail drops below tolerance.
        const double predicted = std::log(cfg.rel_tol * (1.0 - z)) / std::log(z) + std::abs(a);
        if (predicted <= kDirectTermBudget) return lerch_direct(z, s, a, cfg);
    }
    return lerch_euler_maclaurin(z, s, a, cfg);
}

double j_kernel(KernelArgs args, const SeriesConfig& cfg) {
    cfg.validate();
    const double x = args.x;
    const double y = args.y;
    if (!std::isfinite(x) || !(y > 0.0) || !std::isfinite(y)) {
        throw DomainError("j_kernel: requires finite x and y > 0");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double k = std::round(y / two_pi);
    if (k >= 1.0 && std::abs(y - two_pi * k) < cfg.pole_guard) {
        std::ostringstream os;
        os.precision(17);
        os << "j_kernel: y=" << y << " is within the pole guard of 2*pi*" << k;
        throw PoleProximity(os.str());
    }

    const double ax = std::abs(x);
    const double z = std::exp(-two_pi * ax);
    const double b = y / two_pi;
    const double half = 0.5 * y;
    const double sin_half = std::sin(half);

    double value = half * half * std::exp(-ax * y) / (16.0 * sin_half * sin_half);
    if (x > 0.0) value += ax * y / 8.0;

    const double pi = std::numbers::pi;
    value += y * y * z / (64.0 * pi * pi) *
             (lerch_phi(z, 2.0, 1.0 + b, cfg) - lerch_phi(z, 2.0, 1.0 - b, cfg));
    if (ax > 0.0) {
        value += ax * y * y * z / (32.0 * pi) *
                 (lerch_phi(z, 1.0, 1.0 + b, cfg) - lerch_phi(z, 1.0, 1.0 - b, cfg));
    }
    return value;
}

} // namespace unruh_otto::specfun
