#include "specgenus/invariants.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "specgenus/errors.hpp"

namespace specgenus {

namespace {

constexpr std::pair<Method, const char*> kMethodNames[] = {
    {Method::QuasiHomLattice, "QuasiHomLattice"},     {Method::QuasiHomSpectralPoly, "QuasiHomSpectralPoly"},
    {Method::HomogeneousClosed, "HomogeneousClosed"}, {Method::MordellClosed, "MordellClosed"},
    {Method::NewtonLattice, "NewtonLattice"},         {Method::KouchnirenkoOnly, "KouchnirenkoOnly"},
    {Method::PuiseuxClosed, "PuiseuxClosed"},         {Method::BruteForceOracle, "BruteForceOracle"},
};

BigInt to_bigint(__int128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<unsigned long>(u >> 64);
    out <<= 64;
    out += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return negative ? BigInt(-out) : out;
}

// Integer weights W_i = L w_i over the common denominator L.
struct ScaledWeights {
    std::vector<std::int64_t> numerators;
    std::int64_t denominator = 1;
};

ScaledWeights scale_weights(const std::vector<Rational>& weights) {
    BigInt l = 1;
    for (const auto& w : weights) l = lcm(l, w.denominator());
    ScaledWeights out;
    out.denominator = to_int64(l);
    for (const auto& w : weights) out.numerators.push_back(to_int64(w.numerator() * (l / w.denominator())));
    return out;
}

}  // namespace

std::string to_string(Method m) {
    for (const auto& [method, name] : kMethodNames) {
        if (method == m) return name;
    }
    return "?";
}

Method parse_method(std::string_view text) {
    for (const auto& [method, name] : kMethodNames) {
        if (text == name) return method;
    }
    throw ValidationError("unknown method tag '" + std::string(text) + "'");
}

InvariantBundle bundle_from_spectrum(const SpectralMultiset& spectrum, Method method) {
    InvariantBundle b;
    b.n = spectrum.dimension();
    b.mu = Rational(spectrum.total_multiplicity());
    b.spectral_genus = spectrum.spectral_genus();
    b.geometric_genus = spectrum.geometric_genus();
    b.spectrum = spectrum;
    b.mu_method = method;
    b.genus_method = method;
    return b;
}

nlohmann::json to_json(const InvariantBundle& b) {
    nlohmann::json j{{"n", b.n},
                     {"mu", b.mu.to_string()},
                     {"spectral_genus", b.spectral_genus.to_string()},
                     {"mu_method", to_string(b.mu_method)},
                     {"spectral_genus_method", to_string(b.genus_method)},
                     {"warnings", b.warnings}};
    j["geometric_genus"] = b.geometric_genus ? nlohmann::json(*b.geometric_genus) : nlohmann::json(nullptr);
    j["spectrum"] = b.spectrum ? to_json(*b.spectrum) : nlohmann::json(nullptr);
    return j;
}

InvariantBundle invariant_bundle_from_json(const nlohmann::json& j) {
    InvariantBundle b;
    b.n = j.at("n").get<int>();
    b.mu = Rational::parse(j.at("mu").get<std::string>());
    b.spectral_genus = Rational::parse(j.at("spectral_genus").get<std::string>());
    b.mu_method = parse_method(j.at("mu_method").get<std::string>());
    b.genus_method = parse_method(j.at("spectral_genus_method").get<std::string>());
    if (!j.at("geometric_genus").is_null()) b.geometric_genus = j.at("geometric_genus").get<std::int64_t>();
    if (!j.at("spectrum").is_null()) b.spectrum = spectral_multiset_from_json(j.at("spectrum"), b.n);
    b.warnings = j.value("warnings", std::vector<std::string>{});
    return b;
}

QuasiHomMu quasihom_mu(const std::vector<Rational>& weights) {
    validate_weights(weights);
    Rational mu(1);
    for (const auto& w : weights) mu *= Rational(1) / w - Rational(1);
    return {mu, mu.is_integer()};
}

Rational quasihom_spectral_genus(const std::vector<Rational>& weights) {
    validate_weights(weights);
    const ScaledWeights sw = scale_weights(weights);
    const std::size_t vars = weights.size();
    // Smallest possible contribution of coordinates i.. when each is at least 1.
    std::vector<std::int64_t> tail(vars + 1, 0);
    for (std::size_t i = vars; i-- > 0;) tail[i] = tail[i + 1] + sw.numerators[i];

    BigInt total = 0;
    std::int64_t acc = 0;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == vars) {
            total += BigInt(static_cast<long>(sw.denominator - acc));
            return;
        }
        for (std::int64_t k = 1; acc + k * sw.numerators[i] + tail[i + 1] < sw.denominator; ++k) {
            acc += k * sw.numerators[i];
            self(self, i + 1);
            acc -= k * sw.numerators[i];
        }
    };
    recurse(recurse, 0);
    return Rational(total, BigInt(static_cast<long>(sw.denominator)));
}

SpectralMultiset quasihom_spectrum(const std::vector<Rational>& weights) {
    validate_weights(weights);
    ExponentPolynomial numerator{{Rational(0), 1}};
    ExponentPolynomial denominator{{Rational(0), 1}};
    for (const auto& w : weights) {
        numerator = exponent_poly_multiply(numerator, {{w, 1}, {Rational(1), -1}});
        denominator = exponent_poly_multiply(denominator, {{Rational(0), 1}, {w, -1}});
    }
    return fractional_poly_divide(numerator, denominator, static_cast<int>(weights.size()) - 1);
}

InvariantBundle quasihom_invariants(const std::vector<Rational>& weights) {
    const QuasiHomMu mu = quasihom_mu(weights);
    const SpectralMultiset spectrum = quasihom_spectrum(weights);
    InvariantBundle b = bundle_from_spectrum(spectrum, Method::QuasiHomSpectralPoly);
    b.genus_method = Method::QuasiHomLattice;
    const Rational lattice = quasihom_spectral_genus(weights);
    if (lattice != b.spectral_genus) {
        throw ConsistencyError("lattice spectral genus " + lattice.to_string() + " != spectral-polynomial value " +
                               b.spectral_genus.to_string());
    }
    if (mu.value != b.mu) {
        throw ConsistencyError("weight formula mu " + mu.value.to_string() + " != spectrum size " + b.mu.to_string());
    }
    return b;
}

InvariantBundle homogeneous_closed(int n, std::int64_t d) {
    if (n < 1) throw ValidationError("homogeneous closed form needs n >= 1");
    if (d < 2) throw ValidationError("homogeneous closed form needs d >= 2");
    InvariantBundle b;
    b.n = n;
    b.mu = pow(Rational(d - 1), static_cast<unsigned>(n + 1));
    Rational prod(1);
    for (int j = 1; j <= n + 1; ++j) prod *= Rational(d - j);
    b.spectral_genus = prod / Rational(factorial(static_cast<unsigned>(n + 2)));
    // #{k in [1,d-1]^{n+1} : sum k <= d}
    b.geometric_genus = to_int64(binomial(static_cast<unsigned>(d), static_cast<unsigned>(n + 1)));
    b.mu_method = Method::HomogeneousClosed;
    b.genus_method = Method::HomogeneousClosed;
    return b;
}

Rational mordell_sum(std::int64_t a, std::int64_t b) {
    validate_dim1_family(a, b);
    const std::int64_t k = std::gcd(a, b);
    const Rational ap(a / k), bp(b / k), kk(k);
    return Rational((a - 1) * (b - 1), 6) - (ap + bp) * (kk - Rational(1)) / Rational(12) -
           (ap - Rational(1)) * (bp - Rational(1)) * (ap + bp + Rational(1)) / (Rational(12) * ap * bp);
}

std::vector<Rational> dim1_weights(Dim1Kind kind, std::int64_t a, std::int64_t b) {
    validate_dim1_family(a, b);
    switch (kind) {
        case Dim1Kind::plain: return {Rational(1, a), Rational(1, b)};
        case Dim1Kind::x_times: return {Rational(1, a + 1), Rational(a, (a + 1) * b)};
        case Dim1Kind::xy_times: {
            const std::int64_t m = (a + 1) * (b + 1) - 1;
            return {Rational(b, m), Rational(a, m)};
        }
    }
    throw ValidationError("unknown family kind");
}

std::int64_t dim1_mu(Dim1Kind kind, std::int64_t a, std::int64_t b) {
    validate_dim1_family(a, b);
    switch (kind) {
        case Dim1Kind::plain: return (a - 1) * (b - 1);
        case Dim1Kind::x_times: return (a + 1) * (b - 1) + 1;
        case Dim1Kind::xy_times: return (a + 1) * (b + 1);
    }
    throw ValidationError("unknown family kind");
}

Rational dim1_spectral_genus_closed(Dim1Kind kind, std::int64_t a, std::int64_t b) {
    const Rational triangle = mordell_sum(a, b);
    switch (kind) {
        case Dim1Kind::plain: return triangle;
        case Dim1Kind::x_times:
            // x = 1 + x': the points split into the translated triangle (x' > 0) and the
            // open edge x' = 0, 0 < y < b; the summand there is a/(a+1) * (1 - x'/a - y/b).
            return Rational(a, a + 1) * (triangle + Rational(b - 1, 2));
        case Dim1Kind::xy_times: {
            // (x,y) = (1,1) + (x',y'): interior triangle, both open edges and the corner,
            // with summand ab/M * (1 - x'/a - y'/b), M = (a+1)(b+1) - 1.
            const std::int64_t m = (a + 1) * (b + 1) - 1;
            return Rational(a * b, m) * (triangle + Rational(a + b, 2));
        }
    }
    throw ValidationError("unknown family kind");
}

InvariantBundle dim1_family(Dim1Kind kind, std::int64_t a, std::int64_t b) {
    const auto weights = dim1_weights(kind, a, b);
    InvariantBundle b_ = quasihom_invariants(weights);
    const Rational closed = dim1_spectral_genus_closed(kind, a, b);
    if (closed != b_.spectral_genus) {
        throw ConsistencyError("translated-triangle spectral genus " + closed.to_string() + " != lattice value " +
                               b_.spectral_genus.to_string());
    }
    if (Rational(dim1_mu(kind, a, b)) != b_.mu) {
        throw ConsistencyError("closed Milnor number disagrees with the weight formula");
    }
    b_.mu_method = Method::MordellClosed;
    b_.genus_method = Method::MordellClosed;
    return b_;
}

Rational kouchnirenko_mu(const NewtonDiagram& diagram) {
    const auto vols = volumes(diagram);
    const int vars = diagram.dimension() + 1;
    Rational mu = (vars % 2 == 0) ? Rational(1) : Rational(-1);
    for (int k = 1; k <= vars; ++k) {
        const Rational term = Rational(factorial(static_cast<unsigned>(k))) * vols[static_cast<std::size_t>(k - 1)];
        mu += ((vars - k) % 2 == 0) ? term : -term;
    }
    return mu;
}

InvariantBundle newton_invariants(const NewtonDiagram& diagram, bool assume_nondegenerate) {
    if (!assume_nondegenerate) {
        throw RefusedWithoutNondegeneracyFlag(
            "Newton-diagram formulas need Kouchnirenko nondegeneracy; assert it explicitly");
    }
    diagram.require_convenient();
    InvariantBundle b;
    b.n = diagram.dimension();
    b.mu = kouchnirenko_mu(diagram);
    if (!b.mu.is_integer() || b.mu.sign() <= 0) {
        throw ConsistencyError("Kouchnirenko number " + b.mu.to_string() + " is not a positive integer");
    }
    b.spectral_genus = interior_phi_deficit(diagram);
    b.mu_method = Method::KouchnirenkoOnly;
    b.genus_method = Method::NewtonLattice;
    return b;
}

PuiseuxChain::PuiseuxChain(std::vector<PuiseuxPair> pairs) : pairs_(std::move(pairs)) {
    validate_puiseux(pairs_);
    const std::size_t g = pairs_.size();
    w_.resize(g);
    n_prime_.assign(g, 1);
    w_[0] = pairs_[0].k;
    for (std::size_t i = 1; i < g; ++i) w_[i] = pairs_[i - 1].n * pairs_[i].n * w_[i - 1] + pairs_[i].k;
    for (std::size_t i = g - 1; i-- > 0;) n_prime_[i] = n_prime_[i + 1] * pairs_[i + 1].n;
    for (std::size_t i = 0; i < g; ++i) {
        if (std::gcd(w_[i], pairs_[i].n) != 1) throw ConsistencyError("gcd(w_i, n_i) != 1");
    }
}

Rational PuiseuxResult::margin() const { return bundle.mu / Rational(6) - bundle.spectral_genus; }

Rational PuiseuxResult::s_sum() const {
    Rational s;
    for (std::size_t i = 0; i < s_plus.size(); ++i) s += s_plus[i] - s_minus[i];
    return s;
}

PuiseuxResult puiseux_invariants(const PuiseuxChain& chain) {
    PuiseuxResult r;
    r.bundle.n = 1;
    r.bundle.mu_method = Method::PuiseuxClosed;
    r.bundle.genus_method = Method::PuiseuxClosed;

    BigInt mu = 0;
    for (std::size_t i = 0; i < chain.genus(); ++i) {
        const std::int64_t ni = chain.pairs()[i].n, wi = chain.w()[i], npi = chain.n_prime()[i];
        mu += BigInt(static_cast<long>((ni - 1) * (wi - 1))) * BigInt(static_cast<long>(npi));

        // sum over 0 <= k < n_i', x, y > 0, x/n_i + y/w_i < 1 of 1 - (k + x/n_i + y/w_i)/n_i'
        // scaled by D = n_i' n_i w_i so every summand is an integer.
        const __int128 full = static_cast<__int128>(npi) * ni * wi;
        __int128 total = 0;
        for (std::int64_t k = 0; k < npi; ++k) {
            for (std::int64_t x = 1; x < ni; ++x) {
                for (std::int64_t y = 1; x * wi + y * ni < ni * wi; ++y) {
                    total += full - (static_cast<__int128>(k) * ni * wi + x * wi + y * ni);
                }
            }
        }
        r.bundle.spectral_genus +=
            Rational(to_bigint(total), to_bigint(full));

        const Rational n_(ni), w_(wi), one(1);
        r.s_plus.push_back((n_ - one) * (w_ - one) * (n_ + w_ + one) / (n_ * w_));
        r.s_minus.push_back((n_ - one) * (w_ - one) * Rational(npi - 1));
    }
    r.bundle.mu = Rational(mu);
    r.identity_holds = r.margin() == r.s_sum() / Rational(12);
    return r;
}

std::int64_t default_suspension_order(const SpectralMultiset& spectrum) {
    BigInt k = 1;
    for (const auto& e : spectrum.entries()) k = lcm(k, e.exponent.denominator());
    return to_int64(k);
}

SuspensionResult suspend(const SpectralMultiset& spectrum, std::optional<std::int64_t> k_opt) {
    const std::int64_t k = k_opt ? *k_opt : default_suspension_order(spectrum);
    if (k < 1) throw ValidationError("suspension order k must be positive");
    const Rational one(1);
    for (const auto& e : spectrum.entries()) {
        if (e.exponent >= one) break;
        if (!(Rational(k) * (one - e.exponent)).is_integer()) {
            throw MonodromyOrderError("k = " + std::to_string(k) + " does not satisfy T_s^k = 1: k(1 - " +
                                      e.exponent.to_string() + ") is not an integer");
        }
    }
    std::vector<SpectralEntry> power;
    for (std::int64_t j = 1; j <= k; ++j) power.push_back({Rational(j, k + 1), 1});
    const SpectralMultiset h = multiset_sum_product(spectrum, SpectralMultiset(0, std::move(power)));

    SuspensionResult r;
    r.k = k;
    r.suspended = bundle_from_spectrum(h, Method::QuasiHomSpectralPoly);
    r.expected_geometric_genus = Rational(k) * spectrum.spectral_genus();
    if (Rational(*r.suspended.geometric_genus) != r.expected_geometric_genus) {
        throw ConsistencyError("suspension identity failed: p_g,h = " + std::to_string(*r.suspended.geometric_genus) +
                               " but k p~_g,f = " + r.expected_geometric_genus.to_string());
    }
    return r;
}

InvariantBundle compute_invariants(const GermSpec& spec, bool assume_nondegenerate) {
    return std::visit(
        [&](const auto& g) -> InvariantBundle {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, PolynomialGerm>) {
                return newton_invariants(build_diagram(g.support), assume_nondegenerate);
            } else if constexpr (std::is_same_v<T, QuasiHomogeneousGerm>) {
                return quasihom_invariants(g.weights);
            } else if constexpr (std::is_same_v<T, HomogeneousGerm>) {
                InvariantBundle closed = homogeneous_closed(g.n, g.d);
                const InvariantBundle spectral =
                    quasihom_invariants(std::vector<Rational>(static_cast<std::size_t>(g.n + 1), Rational(1, g.d)));
                if (spectral.mu != closed.mu || spectral.spectral_genus != closed.spectral_genus ||
                    spectral.geometric_genus != closed.geometric_genus) {
                    throw ConsistencyError("homogeneous closed forms disagree with the spectral polynomial");
                }
                closed.spectrum = spectral.spectrum;
                closed.geometric_genus = spectral.geometric_genus;
                return closed;
            } else if constexpr (std::is_same_v<T, PuiseuxGerm>) {
                PuiseuxResult r = puiseux_invariants(PuiseuxChain(g.pairs));
                if (!r.identity_holds) r.bundle.warnings.push_back("S_i decomposition identity failed");
                return r.bundle;
            } else {
                return dim1_family(g.kind, g.a, g.b);
            }
        },
        spec);
}

}  // namespace specgenus
