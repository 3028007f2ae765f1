#include "specgenus/polynomial_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

#include "specgenus/errors.hpp"

namespace specgenus {

namespace {

constexpr std::size_t kMaxTerms = 200000;
constexpr std::int64_t kMaxExponent = 100000;

using Exponents = std::array<std::int64_t, kMaxVariables>;
using Poly = std::map<Exponents, Rational>;

Poly constant(const Rational& c) {
    Poly p;
    if (c.sign() != 0) p[Exponents{}] = c;
    return p;
}

void add_into(Poly& acc, const Poly& rhs, int sign) {
    for (const auto& [e, c] : rhs) {
        auto it = acc.find(e);
        if (it == acc.end()) {
            acc.emplace(e, sign > 0 ? c : -c);
        } else {
            it->second += sign > 0 ? c : -c;
            if (it->second.sign() == 0) acc.erase(it);
        }
    }
}

class Parser {
public:
    Parser(std::string_view text, const std::optional<std::vector<std::string>>& names)
        : text_(text), names_(names) {}

    Poly parse() {
        skip_space();
        if (at_end()) throw SyntaxError("empty expression", pos_);
        Poly p = expr();
        skip_space();
        if (!at_end()) throw SyntaxError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return p;
    }

    int max_index() const { return max_index_; }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return at_end() ? '\0' : text_[pos_];
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            add_into(acc, term(), c == '+' ? 1 : -1);
        }
    }

    Poly term() {
        bool last_was_number = false;
        Poly acc = unary(last_was_number);
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = multiply(acc, unary(last_was_number));
            } else if (c == '/') {
                ++pos_;
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    throw SyntaxError("only integer literals may follow '/'", pos_);
                }
                const std::size_t literal = pos_;
                const BigInt den = integer_literal();
                if (den == 0) throw SyntaxError("division by zero", literal);
                for (auto& [e, coeff] : acc) coeff /= Rational(den);
                last_was_number = true;
            } else if (last_was_number && (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
                acc = multiply(acc, unary(last_was_number));
            } else {
                return acc;
            }
        }
    }

    Poly unary(bool& last_was_number) {
        const char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            Poly p = unary(last_was_number);
            if (c == '-') {
                for (auto& [e, coeff] : p) coeff = -coeff;
            }
            return p;
        }
        return power(last_was_number);
    }

    Poly power(bool& last_was_number) {
        Poly base = primary(last_was_number);
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw SyntaxError("exponent must be a nonnegative integer literal", pos_);
        }
        const BigInt e = integer_literal();
        if (e > kMaxExponent) throw SyntaxError("exponent too large", at);
        if (peek() == '^') throw SyntaxError("chained '^' is ambiguous; use parentheses", pos_);
        last_was_number = false;
        return raise(base, e.get_si(), at);
    }

    Poly primary(bool& last_was_number) {
        const char c = peek();
        if (at_end()) throw SyntaxError("unexpected end of expression", pos_);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            last_was_number = true;
            return constant(Rational(integer_literal()));
        }
        last_was_number = false;
        if (c == '(') {
            const std::size_t open = pos_++;
            Poly inner = expr();
            if (peek() != ')') throw SyntaxError("unbalanced parenthesis opened", open);
            ++pos_;
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            Exponents e{};
            e[static_cast<std::size_t>(variable_index(name, start))] = 1;
            return Poly{{e, Rational(1)}};
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    BigInt integer_literal() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    int variable_index(const std::string& name, std::size_t at) {
        int index = -1;
        if (names_) {
            const auto it = std::find(names_->begin(), names_->end(), name);
            if (it == names_->end()) throw SyntaxError("undeclared variable '" + name + "'", at);
            index = static_cast<int>(it - names_->begin());
        } else {
            static constexpr std::array<const char*, 4> letters{"x", "y", "z", "w"};
            const auto letter = std::find_if(letters.begin(), letters.end(), [&](const char* l) { return name == l; });
            if (letter != letters.end()) {
                index = static_cast<int>(letter - letters.begin());
                set_style(Style::letters, at);
            } else if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] < '0' + kMaxVariables) {
                index = name[1] - '0';
                set_style(Style::indexed, at);
            } else {
                throw SyntaxError("unknown variable '" + name + "' (declare it with a vars header)", at);
            }
        }
        max_index_ = std::max(max_index_, index);
        return index;
    }

    enum class Style { none, letters, indexed };

    void set_style(Style s, std::size_t at) {
        if (style_ != Style::none && style_ != s) {
            throw SyntaxError("cannot mix x,y,z,w with x0..x7 variable names", at);
        }
        style_ = s;
    }

    Poly multiply(const Poly& a, const Poly& b) const {
        if (a.size() * b.size() > kMaxTerms * 4) throw SyntaxError("expansion too large", pos_);
        Poly out;
        for (const auto& [ea, ca] : a) {
            for (const auto& [eb, cb] : b) {
                Exponents e{};
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > kMaxExponent) throw SyntaxError("exponent too large after expansion", pos_);
                }
                add_into(out, Poly{{e, ca * cb}}, 1);
            }
        }
        if (out.size() > kMaxTerms) throw SyntaxError("expansion too large", pos_);
        return out;
    }

    Poly raise(const Poly& base, std::int64_t e, std::size_t at) const {
        if (base.size() > 1 && e > 64) throw SyntaxError("power of a sum is too large to expand", at);
        Poly result = constant(Rational(1));
        for (std::int64_t i = 0; i < e; ++i) result = multiply(result, base);
        return result;
    }

    std::string_view text_;
    const std::optional<std::vector<std::string>>& names_;
    std::size_t pos_ = 0;
    int max_index_ = -1;
    Style style_ = Style::none;
};

std::string trim_copy(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = text.find(sep, start);
        out.push_back(trim_copy(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) return out;
        start = at + 1;
    }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError(what + ": expected an integer, got '" + s + "'");
    }
}

}  // namespace

MonomialSupport::MonomialSupport(int dimension, std::set<LatticePoint> points)
    : dimension_(dimension), points_(std::move(points)) {
    if (dimension < 0 || dimension + 1 > kMaxVariables) {
        throw ValidationError("support dimension must satisfy 0 <= n < " + std::to_string(kMaxVariables));
    }
    if (points_.empty()) throw ValidationError("monomial support is empty");
    for (const auto& p : points_) {
        if (static_cast<int>(p.size()) != dimension + 1) throw ValidationError("support point has wrong arity");
        if (std::any_of(p.begin(), p.end(), [](std::int64_t c) { return c < 0; })) {
            throw ValidationError("support point has a negative exponent");
        }
        if (std::all_of(p.begin(), p.end(), [](std::int64_t c) { return c == 0; })) {
            throw ValidationError("support contains the origin (germ must vanish at 0)");
        }
    }
}

MonomialSupport parse_polynomial(std::string_view text, const std::optional<std::vector<std::string>>& variable_names) {
    if (variable_names) {
        if (variable_names->empty() || static_cast<int>(variable_names->size()) > kMaxVariables) {
            throw ValidationError("between 1 and " + std::to_string(kMaxVariables) + " variables must be declared");
        }
        for (const auto& name : *variable_names) {
            if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
                throw ValidationError("invalid variable name '" + name + "'");
            }
        }
    }
    Parser parser(text, variable_names);
    const Poly poly = parser.parse();

    if (const auto it = poly.find(Exponents{}); it != poly.end()) {
        throw ConstantTermError("nonzero constant term " + it->second.to_string(), 0);
    }
    if (poly.empty()) throw EmptySupportError("all terms cancel", text.size());

    const int dimension = variable_names ? static_cast<int>(variable_names->size()) - 1 : std::max(parser.max_index(), 0);
    std::set<LatticePoint> points;
    for (const auto& [e, c] : poly) points.emplace(e.begin(), e.begin() + dimension + 1);
    return MonomialSupport(dimension, std::move(points));
}

MonomialSupport parse_polynomial_file(std::string_view contents) {
    const std::size_t eol = contents.find('\n');
    const std::string first = trim_copy(contents.substr(0, eol));
    if (first.rfind("vars:", 0) == 0) {
        auto names = split(std::string_view(first).substr(5), ',');
        const std::string_view rest = eol == std::string_view::npos ? std::string_view{} : contents.substr(eol + 1);
        return parse_polynomial(rest, names);
    }
    return parse_polynomial(contents);
}

std::string to_string(Dim1Kind kind) {
    switch (kind) {
        case Dim1Kind::plain: return "plain";
        case Dim1Kind::x_times: return "x";
        case Dim1Kind::xy_times: return "xy";
    }
    return "?";
}

Dim1Kind parse_dim1_kind(std::string_view text) {
    if (text == "plain") return Dim1Kind::plain;
    if (text == "x" || text == "x_times") return Dim1Kind::x_times;
    if (text == "xy" || text == "xy_times") return Dim1Kind::xy_times;
    throw ValidationError("family kind must be one of plain, x, xy; got '" + std::string(text) + "'");
}

void validate_weights(const std::vector<Rational>& weights) {
    if (weights.empty()) throw InvalidWeightError("at least one weight is required");
    if (static_cast<int>(weights.size()) > kMaxVariables) {
        throw InvalidWeightError("at most " + std::to_string(kMaxVariables) + " weights are supported");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].sign() <= 0 || weights[i] >= Rational(1)) {
            throw InvalidWeightError("weight w" + std::to_string(i) + " = " + weights[i].to_string() +
                                     " is not in the open interval (0,1)");
        }
    }
}

void validate_puiseux(const std::vector<PuiseuxPair>& pairs) {
    if (pairs.empty()) throw ValidationError("at least one Puiseux pair is required");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [k, n] = pairs[i];
        const std::string tag = "pair " + std::to_string(i + 1) + " (" + std::to_string(k) + ":" + std::to_string(n) + ")";
        if (n <= 1) throw ValidationError(tag + ": n_i > 1 violated");
        if (std::gcd(k, n) != 1) throw ValidationError(tag + ": gcd(k_i, n_i) = 1 violated");
        if (i == 0) {
            if (k <= n) throw ValidationError(tag + ": k_1 > n_1 violated");
        } else if (k <= pairs[i - 1].k * n) {
            throw ValidationError(tag + ": k_i > k_{i-1} n_i violated (" + std::to_string(k) + " <= " +
                                  std::to_string(pairs[i - 1].k * n) + ")");
        }
    }
}

void validate_dim1_family(std::int64_t a, std::int64_t b) {
    if (a < 2 || b < 2) throw ValidationError("family parameters must satisfy a, b >= 2");
}

std::vector<Rational> parse_weight_list(std::string_view text) {
    std::vector<Rational> out;
    for (const auto& item : split(text, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::vector<PuiseuxPair> parse_puiseux_list(std::string_view text) {
    std::vector<PuiseuxPair> out;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw ValidationError("Puiseux pair must be written k:n, got '" + item + "'");
        out.push_back({parse_int(parts[0], "Puiseux k"), parse_int(parts[1], "Puiseux n")});
    }
    return out;
}

GermSpec parse_germ_spec(const std::map<std::string, std::string>& args) {
    auto has = [&](const char* key) { return args.count(key) != 0; };
    const int forms = int(has("poly")) + int(has("weights")) + int(has("homog_n") || has("homog_d")) +
                      int(has("puiseux")) + int(has("family_kind"));
    if (forms != 1) throw ValidationError("exactly one germ form must be given (poly, weights, homog, puiseux, family)");

    if (has("poly")) {
        const std::string& text = args.at("poly");
        if (!has("vars")) return PolynomialGerm{parse_polynomial_file(text), text};
        return PolynomialGerm{parse_polynomial(text, split(args.at("vars"), ',')), text};
    }
    if (has("weights")) {
        auto weights = parse_weight_list(args.at("weights"));
        validate_weights(weights);
        return QuasiHomogeneousGerm{std::move(weights)};
    }
    if (has("homog_n") || has("homog_d")) {
        if (!has("homog_n") || !has("homog_d")) throw ValidationError("homogeneous germ needs both n and d");
        const auto n = parse_int(args.at("homog_n"), "homogeneous n");
        const auto d = parse_int(args.at("homog_d"), "homogeneous d");
        if (n < 1 || n + 1 > kMaxVariables) throw ValidationError("homogeneous n must satisfy 1 <= n <= 7");
        if (d < 2) throw ValidationError("homogeneous degree d must be >= 2");
        return HomogeneousGerm{static_cast<int>(n), static_cast<int>(d)};
    }
    if (has("puiseux")) {
        auto pairs = parse_puiseux_list(args.at("puiseux"));
        validate_puiseux(pairs);
        return PuiseuxGerm{std::move(pairs)};
    }
    for (const char* key : {"family_a", "family_b"}) {
        if (!has(key)) throw ValidationError(std::string("family germ needs ") + key);
    }
    const Dim1Kind kind = parse_dim1_kind(args.at("family_kind"));
    const auto a = parse_int(args.at("family_a"), "family a");
    const auto b = parse_int(args.at("family_b"), "family b");
    validate_dim1_family(a, b);
    return Dim1FamilyGerm{kind, a, b};
}

std::string describe(const GermSpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, PolynomialGerm>) {
                std::string flat;
                for (char c : g.text) {
                    if (std::isspace(static_cast<unsigned char>(c))) {
                        if (!flat.empty() && flat.back() != ' ') flat += ' ';
                    } else {
                        flat += c;
                    }
                }
                while (!flat.empty() && flat.back() == ' ') flat.pop_back();
                os << "poly(" << flat << ")";
            } else if constexpr (std::is_same_v<T, QuasiHomogeneousGerm>) {
                os << "weights(";
                for (std::size_t i = 0; i < g.weights.size(); ++i) os << (i ? "," : "") << g.weights[i];
                os << ")";
            } else if constexpr (std::is_same_v<T, HomogeneousGerm>) {
                os << "homog(n=" << g.n << ",d=" << g.d << ")";
            } else if constexpr (std::is_same_v<T, PuiseuxGerm>) {
                os << "puiseux(";
                for (std::size_t i = 0; i < g.pairs.size(); ++i) os << (i ? "," : "") << g.pairs[i].k << ":" << g.pairs[i].n;
                os << ")";
            } else {
                os << "family(" << to_string(g.kind) << "," << g.a << "," << g.b << ")";
            }
        },
        spec);
    return os.str();
}

}  // namespace specgenus
