#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace congest {

// All cost-model and threshold constants in one place. The asymptotic bounds
// hide polylog factors; every such factor surfaces here as an explicit knob so
// runs can be compared under a fixed, reported cost model.
struct Config {
    // communication budget
    int W = 2; // words per message
    int B = 1; // messages per edge per direction per round

    // driver constants
    double beta = 32.0;
    double gamma = 8.0;
    double gamma_prime = 8.0;

    // generous polylog cap constants for load assertions
    double kappa_bar = 4.0;   // Ebar incidence cap factor
    double kappa_prime = 4.0; // initial holdings cap factor
    double kappa = 4.0;       // routing load cap factor
    int c = 3;                // polylog exponent in the caps

    // decomposition targets; <= 0 means "use the size-dependent default"
    double phi_override = -1.0;
    double eps_override = -1.0;

    std::string profile = "desk";

    static double log2n(int n) { return std::log2(std::max(n, 2)); }

    double phi_target(int n) const {
        if (phi_override > 0) return phi_override;
        const double l = log2n(n);
        return 1.0 / (l * l);
    }
    double eps_target(int n) const {
        if (eps_override > 0) return eps_override;
        return 1.0 / log2n(n);
    }

    // charged cost formulas
    static long long route_pre_rounds(int n) {
        return static_cast<long long>(std::ceil(std::pow(std::max(n, 2), 0.001)));
    }
    long long route_kappa(int n) const {
        const double l = log2n(n);
        return static_cast<long long>(std::llround(l * l * l));
    }
    long long decomp_rounds(int n) const {
        return route_pre_rounds(n) * route_kappa(n);
    }

    // n^{1-2/p} thresholds, always with the original network size n
    static double frac_threshold(int n, int p) {
        return std::pow(std::max(n, 1), 1.0 - 2.0 / p);
    }
    double load_cap(int n, int p) const {
        return kappa * frac_threshold(n, p) * std::pow(log2n(n), c);
    }

    // original large-scale constants vs. the small-instance profile
    static Config faithful() {
        Config cfg;
        cfg.profile = "faithful";
        return cfg;
    }
    static Config desk() {
        Config cfg;
        cfg.beta = 2.0;
        cfg.profile = "desk";
        return cfg;
    }
};

} // namespace congest
