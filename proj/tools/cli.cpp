#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "specgenus/conjecture.hpp"
#include "specgenus/distribution.hpp"
#include "specgenus/errors.hpp"
#include "specgenus/invariants.hpp"
#include "specgenus/newton_diagram.hpp"
#include "specgenus/polynomial_parser.hpp"

namespace specgenus::cli {

namespace {

enum class Format { table, json, csv };

struct GermFlags {
    std::vector<std::string> polys;
    std::string vars;
    std::string weights;
    std::vector<int> homog;
    std::string puiseux;
    std::vector<std::string> family;
};

struct Options {
    std::string format = "table";
    bool oracle = false;
    bool assume_nondegenerate = false;
    std::int64_t grid = 1000;
};

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    return Format::table;
}

void add_germ_flags(CLI::App* cmd, GermFlags& g, bool polys) {
    if (polys) {
        cmd->add_option("--poly", g.polys, "polynomial expression or file (repeatable)");
        cmd->add_option("--vars", g.vars, "comma-separated variable names");
    }
    cmd->add_option("--weights", g.weights, "quasi-homogeneous weights, e.g. 1/2,1/3");
    cmd->add_option("--homog", g.homog, "homogeneous germ: N D")->expected(2);
    cmd->add_option("--puiseux", g.puiseux, "Puiseux pairs, e.g. 3:2,7:2");
    cmd->add_option("--family", g.family, "dimension-one family: {plain|x|xy} A B")->expected(3);
}

std::string read_poly_argument(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

std::map<std::string, std::string> single_germ_args(const GermFlags& g, std::size_t poly_index = 0) {
    std::map<std::string, std::string> args;
    if (!g.polys.empty()) {
        args["poly"] = read_poly_argument(g.polys.at(poly_index));
        if (!g.vars.empty()) args["vars"] = g.vars;
    }
    if (!g.weights.empty()) args["weights"] = g.weights;
    if (!g.homog.empty()) {
        args["homog_n"] = std::to_string(g.homog.at(0));
        args["homog_d"] = std::to_string(g.homog.at(1));
    }
    if (!g.puiseux.empty()) args["puiseux"] = g.puiseux;
    if (!g.family.empty()) {
        args["family_kind"] = g.family.at(0);
        args["family_a"] = g.family.at(1);
        args["family_b"] = g.family.at(2);
    }
    return args;
}

GermSpec germ_from_flags(const GermFlags& g, std::size_t poly_index = 0) {
    return parse_germ_spec(single_germ_args(g, poly_index));
}

void print_report_table(std::ostream& out, const SingularityReport& r) {
    out << "germ:              " << r.description << '\n'
        << "n:                 " << r.n << '\n'
        << "mu:                " << r.mu << "  [" << to_string(r.mu_method) << "]\n"
        << "spectral genus:    " << r.spectral_genus << "  [" << to_string(r.genus_method) << "]\n";
    if (r.geometric_genus) out << "geometric genus:   " << *r.geometric_genus << '\n';
    out << "margin:            " << r.margin << "  (mu/(n+2)! - spectral genus)\n"
        << "weak form:         " << (r.weak_ok ? "holds" : "VIOLATED") << '\n'
        << "strong form:       " << (r.strong_ok ? "holds" : "fails") << '\n'
        << "equality attained: " << (r.equality_attained ? "yes" : "no") << '\n'
        << "torsion exponent:  " << r.torsion_exponent << "  (log-log term omitted)\n";
    for (const auto& w : r.warnings) out << "warning:           " << w << '\n';
}

int emit_reports(std::ostream& out, Format format, const std::vector<SingularityReport>& reports,
                 const nlohmann::json& extra = nullptr) {
    switch (format) {
        case Format::json: {
            nlohmann::json j;
            if (reports.size() == 1) {
                j = to_json(reports.front());
            } else {
                j = {{"schema", 1}, {"reports", nlohmann::json::array()}};
                for (const auto& r : reports) j["reports"].push_back(to_json(r));
            }
            if (!extra.is_null()) {
                for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
            }
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << kReportCsvHeader << '\n';
            for (const auto& r : reports) out << csv_row(r.description, r) << '\n';
            break;
        case Format::table:
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) out << '\n';
                print_report_table(out, reports[i]);
            }
            if (!extra.is_null()) {
                for (auto it = extra.begin(); it != extra.end(); ++it) {
                    out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                        << '\n';
                }
            }
            break;
    }
    for (const auto& r : reports) {
        if (!r.weak_ok) return kExitConjectureViolation;
    }
    return kExitOk;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("oracle mismatch: " + what);
}

// Independent brute force over the whole intercept box with rational phi.
Rational brute_force_newton_genus(const NewtonDiagram& d) {
    const std::size_t vars = static_cast<std::size_t>(d.dimension() + 1);
    LatticePoint x(vars, 1);
    Rational sum;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vars) {
            std::vector<Rational> q(x.begin(), x.end());
            const Rational v = phi(d, q);
            if (v < Rational(1)) sum += Rational(1) - v;
            return;
        }
        for (std::int64_t c = 1; c < *d.axis_intercepts()[i]; ++c) {
            x[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return sum;
}

void oracle_check_newton(const NewtonDiagram& d, const InvariantBundle& b, std::ostream& err) {
    require(brute_force_newton_genus(d) == b.spectral_genus, "Newton lattice sum vs full-box enumeration");
    require(lower_volume(d, PlacingOrder::lexicographic) == lower_volume(d, PlacingOrder::reverse_lexicographic),
            "volume under two placing orders");
    if (d.facets().size() == 1) {
        const auto weights = d.facets().front().form();
        try {
            const InvariantBundle q = quasihom_invariants(weights);
            require(q.mu == b.mu, "Kouchnirenko mu vs weighted-homogeneous mu");
            require(q.spectral_genus == b.spectral_genus, "Newton genus vs weighted-homogeneous genus");
        } catch (const NonExactDivision&) {
            err << "oracle: single-facet weights do not define an isolated singularity; skipped\n";
        }
    }
}

void oracle_check_spec(const GermSpec& spec, const InvariantBundle& b, std::ostream& err) {
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, QuasiHomogeneousGerm>) {
                require(quasihom_spectral_genus(g.weights) == b.spectral_genus, "lattice vs spectral polynomial");
                // Brieskorn-Pham route when every weight is 1/a_i.
                std::set<LatticePoint> pts;
                bool diagonal = true;
                for (std::size_t i = 0; i < g.weights.size(); ++i) {
                    if (g.weights[i].numerator() != 1) diagonal = false;
                    LatticePoint p(g.weights.size(), 0);
                    p[i] = to_int64(g.weights[i].denominator());
                    pts.insert(p);
                }
                if (diagonal) {
                    const InvariantBundle nb =
                        newton_invariants(build_diagram(MonomialSupport(g.dimension(), pts)), true);
                    require(nb.mu == b.mu && nb.spectral_genus == b.spectral_genus, "Brieskorn-Pham Newton route");
                }
            } else if constexpr (std::is_same_v<T, HomogeneousGerm>) {
                const InvariantBundle nb = newton_invariants(build_diagram(diagonal_support(g.n, g.d)), true);
                require(nb.mu == b.mu && nb.spectral_genus == b.spectral_genus, "homogeneous Newton route");
                const std::vector<Rational> w(static_cast<std::size_t>(g.n + 1), Rational(1, g.d));
                require(quasihom_spectral_genus(w) == b.spectral_genus, "homogeneous lattice route");
            } else if constexpr (std::is_same_v<T, PuiseuxGerm>) {
                const PuiseuxResult r = puiseux_invariants(PuiseuxChain(g.pairs));
                require(r.identity_holds, "S_i decomposition identity");
                if (g.pairs.size() == 1) {
                    const InvariantBundle q = dim1_family(Dim1Kind::plain, g.pairs[0].k, g.pairs[0].n);
                    require(q.mu == b.mu && q.spectral_genus == b.spectral_genus, "single pair vs x^a + y^b");
                }
            } else if constexpr (std::is_same_v<T, Dim1FamilyGerm>) {
                require(quasihom_spectral_genus(dim1_weights(g.kind, g.a, g.b)) == b.spectral_genus,
                        "family lattice route");
            } else {
                oracle_check_newton(build_diagram(g.support), b, err);
            }
        },
        spec);
}

SpectralMultiset spectrum_of(const GermSpec& spec) {
    const InvariantBundle b = compute_invariants(spec, false);
    if (!b.spectrum) throw ValidationError("this germ form has no full spectrum; use --weights, --homog or --family");
    return *b.spectrum;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ValidationError("empty parameter range");
    std::vector<std::int64_t> v;
    for (std::int64_t i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

int emit_sweep(std::ostream& out, Format format, const std::vector<SweepRecord>& records, const nlohmann::json& summary) {
    if (format == Format::json) {
        nlohmann::json j = summary;
        j["schema"] = 1;
        j["records"] = nlohmann::json::array();
        for (const auto& r : records) j["records"].push_back(to_json(r));
        out << j.dump(2) << '\n';
    } else {
        out << kReportCsvHeader << '\n';
        for (const auto& r : records) out << csv_row(std::to_string(r.parameter), r.report) << '\n';
        if (format == Format::table) {
            for (auto it = summary.begin(); it != summary.end(); ++it) out << "# " << it.key() << ": " << it.value().dump() << '\n';
        }
    }
    for (const auto& r : records) {
        if (!r.report.weak_ok) return kExitConjectureViolation;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Milnor numbers, spectral genera and conjecture checks for isolated hypersurface singularities",
                 "specgenus"};
    app.require_subcommand(1);
    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
        cmd->add_flag("--oracle", opt.oracle, "recompute by independent routes and fail on mismatch");
        cmd->add_flag("--assume-nondegenerate", opt.assume_nondegenerate,
                      "assert Kouchnirenko nondegeneracy for polynomial input");
        cmd->add_option("--grid", opt.grid, "grid size for distribution comparisons")->check(CLI::PositiveNumber);
    };

    GermFlags germ;
    auto* analyze = app.add_subcommand("analyze", "invariants and verdicts of one or more germs");
    add_germ_flags(analyze, germ, true);
    add_common(analyze);

    std::string qh_weights;
    auto* quasihom = app.add_subcommand("quasihom", "weighted-homogeneous germ from its weights");
    quasihom->add_option("--weights", qh_weights, "weights, e.g. 1/2,1/3")->required();
    add_common(quasihom);

    int homog_n = 1, homog_d = 2;
    auto* homog = app.add_subcommand("homog", "homogeneous germ of degree d in n+1 variables");
    homog->add_option("-n", homog_n, "dimension n")->required();
    homog->add_option("-d", homog_d, "degree d")->required();
    add_common(homog);

    std::string pairs;
    auto* puiseux = app.add_subcommand("puiseux", "irreducible plane curve from Puiseux pairs");
    puiseux->add_option("--puiseux,pairs", pairs, "pairs k1:n1,k2:n2,...")->required();
    add_common(puiseux);

    std::vector<std::string> family_args;
    auto* family = app.add_subcommand("family", "x^a+y^b, x(x^a+y^b) or xy(x^a+y^b)");
    family->add_option("--family,args", family_args, "{plain|x|xy} A B")->expected(3)->required();
    add_common(family);

    GermFlags susp_germ;
    std::int64_t susp_k = 0;
    auto* suspend_cmd = app.add_subcommand("suspend", "(k+1)-suspension f + z^{k+1}");
    add_germ_flags(suspend_cmd, susp_germ, false);
    suspend_cmd->add_option("--k", susp_k, "suspension order (default: lcm of spectral denominators)");
    add_common(suspend_cmd);

    std::string sweep_poly, sweep_vars;
    std::int64_t k_max = 0;
    std::vector<std::int64_t> k_values;
    int sweep_n = 0;
    std::int64_t d_min = 2, d_max = 0;
    auto* sweep = app.add_subcommand("sweep", "scale sweep f(x^k) or homogeneous degree sweep");
    sweep->add_option("--poly", sweep_poly, "base polynomial for the scale sweep");
    sweep->add_option("--vars", sweep_vars, "comma-separated variable names");
    sweep->add_option("--k-max", k_max, "scale sweep over k = 1..K");
    sweep->add_option("--k-values", k_values, "explicit increasing k values");
    sweep->add_option("--homog-n", sweep_n, "homogeneous sweep dimension n");
    sweep->add_option("--d-min", d_min, "first degree");
    sweep->add_option("--d-max", d_max, "last degree");
    add_common(sweep);

    GermFlags dist_germ;
    int dist_family_n = 0;
    auto* distribution = app.add_subcommand("distribution", "spectral distribution diagnostics");
    add_germ_flags(distribution, dist_germ, false);
    distribution->add_option("--homog-family", dist_family_n, "homogeneous family dimension n");
    distribution->add_option("--d-min", d_min, "first degree");
    distribution->add_option("--d-max", d_max, "last degree");
    add_common(distribution);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    const Format format = parse_format(opt.format);
    try {
        if (analyze->parsed()) {
            if (germ.polys.size() > 1) {
                std::vector<InvariantBundle> bundles;
                std::string description;
                for (std::size_t i = 0; i < germ.polys.size(); ++i) {
                    const GermSpec spec = germ_from_flags(germ, i);
                    bundles.push_back(compute_invariants(spec, opt.assume_nondegenerate));
                    if (opt.oracle) oracle_check_spec(spec, bundles.back(), err);
                    description += (i ? " + " : "") + describe(spec);
                }
                return emit_reports(out, format, {judge(combine(bundles), description)});
            }
            const GermSpec spec = germ_from_flags(germ);
            const InvariantBundle b = compute_invariants(spec, opt.assume_nondegenerate);
            if (opt.oracle) oracle_check_spec(spec, b, err);
            nlohmann::json extra;
            if (const auto* p = std::get_if<PolynomialGerm>(&spec); p && format == Format::json) {
                extra["diagram"] = to_json(build_diagram(p->support));
            }
            if (b.spectrum && format == Format::json) extra["spectrum"] = to_json(*b.spectrum);
            return emit_reports(out, format, {judge(b, describe(spec))}, extra);
        }
        if (quasihom->parsed() || homog->parsed() || puiseux->parsed() || family->parsed()) {
            std::map<std::string, std::string> a;
            if (quasihom->parsed()) a["weights"] = qh_weights;
            if (homog->parsed()) {
                a["homog_n"] = std::to_string(homog_n);
                a["homog_d"] = std::to_string(homog_d);
            }
            if (puiseux->parsed()) a["puiseux"] = pairs;
            if (family->parsed()) {
                a["family_kind"] = family_args.at(0);
                a["family_a"] = family_args.at(1);
                a["family_b"] = family_args.at(2);
            }
            const GermSpec spec = parse_germ_spec(a);
            const InvariantBundle b = compute_invariants(spec, opt.assume_nondegenerate);
            if (opt.oracle) oracle_check_spec(spec, b, err);
            nlohmann::json extra;
            if (b.spectrum && format == Format::json) extra["spectrum"] = to_json(*b.spectrum);
            if (const auto* pg = std::get_if<PuiseuxGerm>(&spec)) {
                const PuiseuxResult r = puiseux_invariants(PuiseuxChain(pg->pairs));
                if (!r.identity_holds) throw ConsistencyError("S_i decomposition identity failed");
                nlohmann::json sp = nlohmann::json::array(), sm = nlohmann::json::array();
                for (std::size_t i = 0; i < r.s_plus.size(); ++i) {
                    sp.push_back(r.s_plus[i].to_string());
                    sm.push_back(r.s_minus[i].to_string());
                }
                extra["s_plus"] = sp;
                extra["s_minus"] = sm;
                extra["s1_plus_over_12"] = (r.s_plus.front() / Rational(12)).to_string();
                extra["identity_verified"] = true;
            }
            return emit_reports(out, format, {judge(b, describe(spec))}, extra);
        }
        if (suspend_cmd->parsed()) {
            const GermSpec spec = germ_from_flags(susp_germ);
            const SpectralMultiset f = spectrum_of(spec);
            const SuspensionResult s = suspend(f, susp_k > 0 ? std::optional<std::int64_t>(susp_k) : std::nullopt);
            nlohmann::json extra{{"k", s.k},
                                 {"p_g_h", *s.suspended.geometric_genus},
                                 {"k_times_spectral_genus_f", s.expected_geometric_genus.to_string()},
                                 {"mu_h", s.suspended.mu.to_string()},
                                 {"identity_verified", true}};
            return emit_reports(out, format,
                                {judge(s.suspended, describe(spec) + " + z^" + std::to_string(s.k + 1))}, extra);
        }
        if (sweep->parsed()) {
            if (!sweep_poly.empty()) {
                std::map<std::string, std::string> poly_args{{"poly", read_poly_argument(sweep_poly)}};
                if (!sweep_vars.empty()) poly_args["vars"] = sweep_vars;
                const MonomialSupport support = std::get<PolynomialGerm>(parse_germ_spec(poly_args)).support;
                if (!opt.assume_nondegenerate) {
                    throw RefusedWithoutNondegeneracyFlag("scale sweep needs --assume-nondegenerate");
                }
                const auto ks = !k_values.empty() ? k_values : range(1, k_max > 0 ? k_max : 16);
                const ScaleSweep s = scale_sweep(support, ks);
                nlohmann::json summary{{"predicted_limit", s.predicted_limit.to_string()},
                                       {"first_strong_k", s.first_strong_k ? nlohmann::json(*s.first_strong_k) : nlohmann::json(nullptr)},
                                       {"strong_for_all_later", s.strong_for_all_later}};
                if (format == Format::table && !s.records.empty()) {
                    summary["last_margin_over_k_n"] = s.records.back().margin_over_k_n->to_string();
                }
                return emit_sweep(out, format, s.records, summary);
            }
            if (sweep_n < 1) throw ValidationError("sweep needs --poly or --homog-n N");
            const HomogeneousSweep s = homogeneous_sweep(sweep_n, range(d_min, d_max > 0 ? d_max : 12));
            return emit_sweep(out, format, s.records,
                              {{"limit", s.limit.to_string()},
                               {"ratio_nondecreasing_below_limit", s.ratio_nondecreasing_below_limit}});
        }
        if (distribution->parsed()) {
            if (dist_family_n > 0) {
                std::vector<FamilyMember> members;
                for (auto d : range(d_min, d_max > 0 ? d_max : 40)) {
                    const std::vector<Rational> w(static_cast<std::size_t>(dist_family_n + 1), Rational(1, d));
                    members.push_back({std::to_string(d), EmpiricalMeasure(quasihom_spectrum(w))});
                }
                const FamilyReport r = family_diagnostics(members, opt.grid);
                if (format == Format::json) {
                    out << to_json(r).dump(2) << '\n';
                } else {
                    out << family_csv(r);
                    if (format == Format::table) {
                        const nlohmann::json j = to_json(r);
                        for (const char* key : {"min_alpha_decreasing", "ratio_sg_increasing_below_limit",
                                                "final_sg_gap", "final_pg_gap"}) {
                            out << "# " << key << ": " << j.at(key).dump() << '\n';
                        }
                    }
                }
                return kExitOk;
            }
            const GermSpec spec = germ_from_flags(dist_germ);
            const EmpiricalMeasure m(spectrum_of(spec));
            const Moments mo = measure_moments(m);
            nlohmann::json j{{"schema", 1},
                             {"germ", describe(spec)},
                             {"n", m.dimension()},
                             {"mu", m.total()},
                             {"mean", mo.mean.to_string()},
                             {"variance", mo.variance.to_string()},
                             {"hertling_gap", hertling_gap(m).to_string()},
                             {"min_alpha", m.base().min_exponent().to_string()},
                             {"cdf_distance", sup_cdf_distance(m, SaitoDensity(m.dimension()), opt.grid).to_string()},
                             {"grid", opt.grid}};
            j["hertling_strong_criterion"] =
                m.dimension() == 1 ? nlohmann::json(hertling_strong_criterion(m)) : nlohmann::json(nullptr);
            if (format == Format::json) {
                out << j.dump(2) << '\n';
            } else if (format == Format::csv) {
                out << "germ,n,mu,mean,variance,hertling_gap,min_alpha,cdf_distance\n"
                    << describe(spec) << ',' << m.dimension() << ',' << m.total() << ',' << mo.mean << ','
                    << mo.variance << ',' << hertling_gap(m) << ',' << m.base().min_exponent() << ','
                    << j["cdf_distance"].get<std::string>() << '\n';
            } else {
                for (auto it = j.begin(); it != j.end(); ++it) {
                    out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                        << '\n';
                }
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace specgenus::cli
