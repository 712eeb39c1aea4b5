#ifndef LEAPP_SIMGEN_HPP
#define LEAPP_SIMGEN_HPP

#include "leapp/types.hpp"

#include <cstdint>
#include <tuple>

namespace leapp {

/// Synthetic benchmark scenario: Y = gamma g^T + U V^T + Sigma E with a
/// two-group primary variable, sparse gamma of strength snr = pi c^2,
/// uniform latent loadings of strength lnr = a^2/3 and latent-primary
/// correlation rho.
struct SimScenario {
    int n = 60;
    int N = 1000;
    double snr = 1.0;
    double lnr = 1.0;
    double rho = 0.0;
    double pi = 0.1;
    int k = 1;
    std::uint64_t seed = 0;
};

/// Unit vector drawn uniformly from the sphere orthogonal to g.
Vector sample_orthogonal_unit(const Vector& g, std::uint64_t seed);

/// The gamma component draw on its own (stream "gamma" of the scenario
/// seed); generate() uses exactly this vector.
Vector draw_gamma(const SimScenario& sc);

/// Draws one dataset. Component draws come from independent named streams
/// (gamma | sigma | U | W | E) keyed by the scenario seed, so each component
/// is reproducible on its own.
std::tuple<DataMatrix, StudyDesign, SimTruth> generate(const SimScenario& sc);

}  // namespace leapp

#endif
