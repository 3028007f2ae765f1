#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "specgenus/newton_diagram.hpp"
#include "specgenus/polynomial_parser.hpp"
#include "specgenus/rational.hpp"
#include "specgenus/spectral_multiset.hpp"

namespace specgenus {

enum class Method {
    QuasiHomLattice,
    QuasiHomSpectralPoly,
    HomogeneousClosed,
    MordellClosed,
    NewtonLattice,
    KouchnirenkoOnly,
    PuiseuxClosed,
    BruteForceOracle,
};

std::string to_string(Method m);
Method parse_method(std::string_view text);

/// Milnor number, spectral genus and (when a full spectrum is known) geometric genus and
/// spectrum of one germ, tagged with how mu and the spectral genus were obtained.
struct InvariantBundle {
    int n = 0;
    Rational mu;
    Rational spectral_genus;
    std::optional<std::int64_t> geometric_genus;
    std::optional<SpectralMultiset> spectrum;
    Method mu_method = Method::QuasiHomSpectralPoly;
    Method genus_method = Method::QuasiHomSpectralPoly;
    std::vector<std::string> warnings;
};

/// Bundle whose invariants are all read off a full spectrum.
InvariantBundle bundle_from_spectrum(const SpectralMultiset& spectrum, Method method);

nlohmann::json to_json(const InvariantBundle& bundle);
InvariantBundle invariant_bundle_from_json(const nlohmann::json& j);

struct QuasiHomMu {
    Rational value;
    bool integral = true;  // false flags weights that cannot come from an isolated singularity
};

/// prod (1/w_i - 1).
QuasiHomMu quasihom_mu(const std::vector<Rational>& weights);

/// Sum of 1 - sum k_i w_i over integer k_i > 0 with sum k_i w_i < 1.
Rational quasihom_spectral_genus(const std::vector<Rational>& weights);

/// Full spectrum from the product prod_j (T^{w_j} - T) / (1 - T^{w_j}).
SpectralMultiset quasihom_spectrum(const std::vector<Rational>& weights);

/// Spectrum, mu and genera of a weighted-homogeneous germ, checking the lattice route
/// against the spectral-polynomial route.
InvariantBundle quasihom_invariants(const std::vector<Rational>& weights);

/// Closed forms mu = (d-1)^{n+1}, p~_g = (d-1)...(d-(n+1)) / (n+2)!.
InvariantBundle homogeneous_closed(int n, std::int64_t d);

/// Closed-form value of sum (1 - x/a - y/b) over the interior lattice points of the
/// triangle (0,0), (a,0), (0,b).
Rational mordell_sum(std::int64_t a, std::int64_t b);

/// Weights of x^a + y^b, x(x^a + y^b) and xy(x^a + y^b).
std::vector<Rational> dim1_weights(Dim1Kind kind, std::int64_t a, std::int64_t b);

/// Closed Milnor number of a one-dimensional normal form.
std::int64_t dim1_mu(Dim1Kind kind, std::int64_t a, std::int64_t b);

/// Spectral genus of a one-dimensional normal form from the translated Mordell triangle.
Rational dim1_spectral_genus_closed(Dim1Kind kind, std::int64_t a, std::int64_t b);

/// Invariants of a one-dimensional normal form. The lattice and translated-triangle routes
/// must agree; a mismatch raises ConsistencyError.
InvariantBundle dim1_family(Dim1Kind kind, std::int64_t a, std::int64_t b);

/// Kouchnirenko Milnor number and lattice spectral genus of a convenient diagram.
/// The caller must assert Kouchnirenko nondegeneracy.
InvariantBundle newton_invariants(const NewtonDiagram& diagram, bool assume_nondegenerate);

/// Kouchnirenko's alternating volume sum.
Rational kouchnirenko_mu(const NewtonDiagram& diagram);

/// Validated chain of Puiseux pairs with the derived w_i and n_i' = n_{i+1}...n_g.
class PuiseuxChain {
public:
    explicit PuiseuxChain(std::vector<PuiseuxPair> pairs);

    const std::vector<PuiseuxPair>& pairs() const { return pairs_; }
    const std::vector<std::int64_t>& w() const { return w_; }
    const std::vector<std::int64_t>& n_prime() const { return n_prime_; }
    std::size_t genus() const { return pairs_.size(); }

private:
    std::vector<PuiseuxPair> pairs_;
    std::vector<std::int64_t> w_;
    std::vector<std::int64_t> n_prime_;
};

struct PuiseuxResult {
    InvariantBundle bundle;
    std::vector<Rational> s_plus;
    std::vector<Rational> s_minus;
    /// mu/6 - p~_g == (1/12) sum (S_i^+ - S_i^-), checked exactly.
    bool identity_holds = false;

    Rational margin() const;
    Rational s_sum() const;
};

PuiseuxResult puiseux_invariants(const PuiseuxChain& chain);

struct SuspensionResult {
    std::int64_t k = 0;
    InvariantBundle suspended;  // h = f + x_{n+1}^{k+1}
    Rational expected_geometric_genus;  // k * p~_{g,f}
};

/// Smallest k with k(1 - alpha') integral for every exponent of the spectrum.
std::int64_t default_suspension_order(const SpectralMultiset& spectrum);

/// Thom-Sebastiani suspension by x^{k+1}. Throws MonodromyOrderError when k(1 - alpha')
/// is not an integer for some alpha' < 1, and ConsistencyError if p_{g,h} != k p~_{g,f}.
SuspensionResult suspend(const SpectralMultiset& spectrum, std::optional<std::int64_t> k = std::nullopt);

/// Invariants of any germ specification. Polynomial germs go through the Newton diagram.
InvariantBundle compute_invariants(const GermSpec& spec, bool assume_nondegenerate);

}  // namespace specgenus
