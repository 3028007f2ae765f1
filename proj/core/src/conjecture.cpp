#include "specgenus/conjecture.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "specgenus/errors.hpp"
#include "specgenus/newton_diagram.hpp"
#include "specgenus/parallel.hpp"

namespace specgenus {

namespace {

Rational inverse_factorial(int m) { return Rational(1) / Rational(factorial(static_cast<unsigned>(m))); }

}  // namespace

SingularityReport judge(const InvariantBundle& bundle, std::string description) {
    if (!bundle.mu.is_integer() || bundle.mu < Rational(1)) {
        throw ValidationError("judge needs an integer Milnor number >= 1, got " + bundle.mu.to_string());
    }
    if (bundle.spectral_genus.sign() < 0) throw ValidationError("judge needs a nonnegative spectral genus");
    const Rational scale = inverse_factorial(bundle.n + 2);
    const Rational strong_bound = (bundle.mu - Rational(1)) * scale;

    SingularityReport r;
    r.description = std::move(description);
    r.n = bundle.n;
    r.mu = bundle.mu;
    r.spectral_genus = bundle.spectral_genus;
    r.geometric_genus = bundle.geometric_genus;
    r.margin = bundle.mu * scale - bundle.spectral_genus;
    r.weak_ok = r.margin.sign() > 0;
    r.strong_ok = bundle.spectral_genus <= strong_bound;
    r.equality_attained = bundle.spectral_genus == strong_bound;
    r.torsion_exponent = Rational(bundle.n % 2 == 0 ? 2 : -2) * r.margin;
    r.mu_method = bundle.mu_method;
    r.genus_method = bundle.genus_method;
    r.warnings = bundle.warnings;
    return r;
}

InvariantBundle combine(const std::vector<InvariantBundle>& bundles) {
    if (bundles.empty()) throw ValidationError("nothing to combine");
    if (bundles.size() == 1) return bundles.front();
    InvariantBundle out;
    out.n = bundles.front().n;
    out.mu_method = bundles.front().mu_method;
    out.genus_method = bundles.front().genus_method;
    out.geometric_genus = 0;
    for (const auto& b : bundles) {
        if (b.geometric_genus && out.geometric_genus) {
            *out.geometric_genus += *b.geometric_genus;
        } else {
            out.geometric_genus.reset();
        }
        if (b.n != out.n) throw ValidationError("cannot combine singular points of different dimensions");
        out.mu += b.mu;
        out.spectral_genus += b.spectral_genus;
        out.warnings.insert(out.warnings.end(), b.warnings.begin(), b.warnings.end());
    }
    return out;
}

nlohmann::json to_json(const SingularityReport& r) {
    nlohmann::json j{{"schema", 1},
                     {"germ", r.description},
                     {"n", r.n},
                     {"mu", r.mu.to_string()},
                     {"spectral_genus", r.spectral_genus.to_string()},
                     {"margin", r.margin.to_string()},
                     {"weak_ok", r.weak_ok},
                     {"strong_ok", r.strong_ok},
                     {"equality_attained", r.equality_attained},
                     {"torsion_exponent", r.torsion_exponent.to_string()},
                     {"torsion_note", "log-log correction term not computed"},
                     {"mu_method", to_string(r.mu_method)},
                     {"spectral_genus_method", to_string(r.genus_method)},
                     {"warnings", r.warnings}};
    j["geometric_genus"] = r.geometric_genus ? nlohmann::json(*r.geometric_genus) : nlohmann::json(nullptr);
    return j;
}

SingularityReport singularity_report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<int>() != 1) throw ValidationError("unsupported report schema");
    SingularityReport r;
    r.description = j.at("germ").get<std::string>();
    r.n = j.at("n").get<int>();
    r.mu = Rational::parse(j.at("mu").get<std::string>());
    r.spectral_genus = Rational::parse(j.at("spectral_genus").get<std::string>());
    r.margin = Rational::parse(j.at("margin").get<std::string>());
    r.weak_ok = j.at("weak_ok").get<bool>();
    r.strong_ok = j.at("strong_ok").get<bool>();
    r.equality_attained = j.at("equality_attained").get<bool>();
    r.torsion_exponent = Rational::parse(j.at("torsion_exponent").get<std::string>());
    r.mu_method = parse_method(j.at("mu_method").get<std::string>());
    r.genus_method = parse_method(j.at("spectral_genus_method").get<std::string>());
    if (!j.at("geometric_genus").is_null()) r.geometric_genus = j.at("geometric_genus").get<std::int64_t>();
    r.warnings = j.value("warnings", std::vector<std::string>{});
    return r;
}

std::string csv_row(const std::string& param, const SingularityReport& r) {
    std::ostringstream os;
    if (param.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char c : param) os << (c == '"' ? "\"\"" : std::string(1, c));
        os << '"';
    } else {
        os << param;
    }
    os << ',' << r.n << ',' << r.mu << ',' << r.spectral_genus << ',' << r.margin << ','
       << r.spectral_genus / r.mu << ',' << (r.weak_ok ? "true" : "false") << ','
       << (r.strong_ok ? "true" : "false") << ',' << (r.equality_attained ? "true" : "false") << ','
       << r.torsion_exponent;
    return os.str();
}

ScaleSweep scale_sweep(const MonomialSupport& support, const std::vector<std::int64_t>& k_values) {
    for (std::size_t i = 1; i < k_values.size(); ++i) {
        if (k_values[i] <= k_values[i - 1]) throw ValidationError("k values must be strictly increasing");
    }
    const NewtonDiagram base = build_diagram(support);
    base.require_convenient();
    const int n = support.dimension();
    if (n < 1) throw ValidationError("scale sweep needs n >= 1");

    ScaleSweep sweep;
    const Rational vol_n = volumes(base)[static_cast<std::size_t>(n - 1)];
    sweep.predicted_limit = Rational(n) * vol_n / Rational(2 * (n + 1) * (n + 2));

    sweep.records = parallel_map(k_values.size(), [&](std::size_t i) {
        const std::int64_t k = k_values[i];
        const InvariantBundle b = newton_invariants(build_diagram(scale_support(support, k)), true);
        SweepRecord rec;
        rec.parameter = k;
        rec.report = judge(b, "k=" + std::to_string(k));
        rec.ratio = b.spectral_genus / b.mu;
        rec.margin_over_k_n = rec.report.margin / pow(Rational(k), static_cast<unsigned>(n));
        return rec;
    });

    for (std::size_t i = 0; i < sweep.records.size(); ++i) {
        if (sweep.records[i].report.strong_ok) {
            sweep.first_strong_k = sweep.records[i].parameter;
            sweep.strong_for_all_later = true;
            for (std::size_t j = i; j < sweep.records.size(); ++j) {
                sweep.strong_for_all_later = sweep.strong_for_all_later && sweep.records[j].report.strong_ok;
            }
            break;
        }
    }
    return sweep;
}

HomogeneousSweep homogeneous_sweep(int n, const std::vector<std::int64_t>& d_values) {
    for (std::size_t i = 0; i < d_values.size(); ++i) {
        if (d_values[i] < 2) throw ValidationError("homogeneous sweep needs d >= 2");
        if (i > 0 && d_values[i] <= d_values[i - 1]) throw ValidationError("d values must be strictly increasing");
    }
    HomogeneousSweep sweep;
    sweep.limit = inverse_factorial(n + 2);
    sweep.records = parallel_map(d_values.size(), [&](std::size_t i) {
        const InvariantBundle b = homogeneous_closed(n, d_values[i]);
        SweepRecord rec;
        rec.parameter = d_values[i];
        rec.report = judge(b, "homog(n=" + std::to_string(n) + ",d=" + std::to_string(d_values[i]) + ")");
        rec.ratio = b.spectral_genus / b.mu;
        return rec;
    });
    sweep.ratio_nondecreasing_below_limit = true;
    for (std::size_t i = 0; i < sweep.records.size(); ++i) {
        const auto& r = sweep.records[i].ratio;
        if (r >= sweep.limit || (i > 0 && r < sweep.records[i - 1].ratio)) sweep.ratio_nondecreasing_below_limit = false;
    }
    return sweep;
}

nlohmann::json to_json(const SweepRecord& record) {
    nlohmann::json j = to_json(record.report);
    j["param"] = record.parameter;
    j["ratio"] = record.ratio.to_string();
    if (record.margin_over_k_n) j["margin_over_k_n"] = record.margin_over_k_n->to_string();
    return j;
}

}  // namespace specgenus
