#include "pblab/criteria.hpp"

#include <cmath>
#include <limits>

#include "pblab/error.hpp"

namespace pblab {

std::string to_string(Label label) {
    switch (label) {
        case Label::PB1: return "PB1";
        case Label::PB2: return "PB2";
        case Label::PIT: return "PIT";
        case Label::mixed_2_3_enhanced: return "mixed_2_3_enhanced";
        case Label::none: return "none";
    }
    return "none";
}

std::string to_string(TransitionKind kind) {
    return kind == TransitionKind::one_photon ? "one_photon" : "two_photon";
}

TransitionKind transition_kind(DriveKind drive) {
    return drive == DriveKind::cavity_1photon ? TransitionKind::one_photon
                                              : TransitionKind::two_photon;
}

double poisson_reference(double mean_n, int n) {
    if (!(mean_n >= 0.0)) throw InvalidArgument("Poisson mean must be >= 0");
    if (n < 0) throw InvalidArgument("Poisson index must be >= 0");
    if (mean_n == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(n * std::log(mean_n) - mean_n - std::lgamma(n + 1.0));
}

Label classify(double g2, double g3, double g4, TransitionKind kind, double tolerance) {
    const double hi = 1.0 + tolerance;
    const double lo = 1.0 - tolerance;
    if (kind == TransitionKind::one_photon) {
        if (g2 < lo) return Label::PB1;
        if (g2 > hi && g3 < lo) return Label::PB2;
        if (g2 > hi && g3 > hi) return Label::PIT;
        return Label::none;
    }
    if (g2 > hi && g3 < lo && g4 < lo) return Label::PB2;
    if (g2 > hi && g3 > hi && g4 > hi) return Label::PIT;
    if (g2 > hi && g3 > hi && g4 < lo) return Label::mixed_2_3_enhanced;
    return Label::none;
}

std::vector<double> relative_deviation(const std::vector<double>& p,
                                       const std::vector<double>& poisson) {
    if (p.size() != poisson.size())
        throw InvalidArgument("distribution and reference have different lengths");
    std::vector<double> out(p.size());
    for (std::size_t n = 0; n < p.size(); ++n)
        out[n] = poisson[n] < 1e-300 ? std::numeric_limits<double>::quiet_NaN()
                                     : (p[n] - poisson[n]) / poisson[n];
    return out;
}

bool pn_criterion(const std::vector<double>& p, const std::vector<double>& poisson, int n) {
    if (p.size() != poisson.size())
        throw InvalidArgument("distribution and reference have different lengths");
    if (n < 0 || static_cast<std::size_t>(n) >= p.size())
        throw InvalidArgument("criterion order outside the reported depth");
    if (!(p[n] >= poisson[n])) return false;
    for (std::size_t m = n + 1; m < p.size(); ++m) {
        if (p[m] <= 0.0 && poisson[m] <= 0.0) continue;
        if (!(p[m] < poisson[m])) return false;
    }
    return true;
}

StatisticsReport make_report(const DensityMatrix& rho, TransitionKind kind, double tolerance) {
    if (rho.space().n_cav_max() < report_depth)
        throw InvalidArgument("truncation too small for the report depth");
    StatisticsReport r;
    r.transition_kind = kind;
    r.mean_n = mean_photon_number(rho);
    for (int n = 0; n <= report_depth; ++n) {
        r.p[n] = photon_distribution(rho, n);
        r.poisson[n] = poisson_reference(std::max(0.0, r.mean_n), n);
    }
    if (!(r.mean_n > vacuum_threshold)) {
        r.g2 = r.g3 = r.g4 = std::numeric_limits<double>::quiet_NaN();
        r.label = Label::none;
        return r;
    }
    r.g2 = correlation_g(rho, 2);
    r.g3 = correlation_g(rho, 3);
    r.g4 = correlation_g(rho, 4);
    r.label = classify(r.g2, r.g3, r.g4, kind, tolerance);
    return r;
}

}  // namespace pblab
