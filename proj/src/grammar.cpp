#include "carlitz/grammar.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace carlitz {

namespace {

/* ---------- parsing ---------- */

struct Parser {
    const Fq& F;
    const std::string& s;
    size_t pos = 0;

    Parser(const Fq& f, const std::string& text) : F(f), s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        std::ostringstream os;
        os << "parse error at offset " << pos << ": " << why;
        throw ParseError(os.str());
    }

    long long read_uint() {
        skip();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
            fail("expected an integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1LL << 40)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    MultiPoly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MultiPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit((unsigned char)c))
            return MultiPoly::of_int(F, read_uint());
        if (c == 'g') {
            ++pos;
            if (F.prime())
                fail("'g' is only defined for non-prime q");
            return MultiPoly::constant(
                Frac(ThetaPoly::constant(F, F.gen())));
        }
        if (c == 't' && pos + 1 < s.size() && s[pos + 1] == 'h') {
            pos += 2;
            return MultiPoly::variable(F, Var(VarKind::Theta, 1));
        }
        if (c == 't') {
            ++pos;
            int i = int(read_uint());
            if (i < 1) fail("t-variable index must be >= 1");
            return MultiPoly::variable(F, Var::t(i));
        }
        if (c == 'X') {
            ++pos;
            int i = int(read_uint());
            if (i < 1) fail("X-variable index must be >= 1");
            return MultiPoly::variable(F, Var::x(i));
        }
        if (c == 'z') {
            ++pos;
            return MultiPoly::variable(F, Var::z());
        }
        if (c == 'Z') {
            ++pos;
            return MultiPoly::variable(F, Var::Z());
        }
        fail("unexpected character");
    }

    MultiPoly factor() {
        MultiPoly a = atom();
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            long long e = read_uint();
            if (e > 0x0fffffff) fail("exponent too large");
            a = a.pow(std::uint32_t(e));
        }
        return a;
    }

    // '/' requires a θ-only divisor (a scalar of K)
    MultiPoly term() {
        MultiPoly a = factor();
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                a = a * factor();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                MultiPoly d = factor();
                Frac scalar = to_scalar(d);
                if (scalar.is_zero()) fail("division by zero");
                a = a.scaled(scalar.inv());
            } else {
                return a;
            }
        }
    }

    MultiPoly expr() {
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        MultiPoly a = term();
        if (neg) a = -a;
        for (;;) {
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                bool minus = s[pos] == '-';
                ++pos;
                MultiPoly b = term();
                a = minus ? a - b : a + b;
            } else {
                return a;
            }
        }
    }

    // fold transient Theta variables into the coefficient
    static MultiPoly fold_theta(const MultiPoly& p) {
        const Fq& F = p.field();
        MultiPoly r(F);
        Var th(VarKind::Theta, 1);
        for (const auto& [m, c] : p.terms()) {
            std::uint32_t e = m.exp_of(th);
            if (e == 0) {
                r.add_term(m, c);
            } else {
                Frac tc(ThetaPoly::theta_power(F, int(e)));
                r.add_term(m.without(th), c * tc);
            }
        }
        return r;
    }

    // a θ-only polynomial as a K-scalar
    Frac to_scalar(const MultiPoly& p) {
        MultiPoly q = fold_theta(p);
        Frac out(F);
        for (const auto& [m, c] : q.terms()) {
            if (!m.is_one()) fail("expected a θ-only subexpression");
            out += c;
        }
        return out;
    }

    MultiPoly run() {
        MultiPoly p = fold_theta(expr());
        skip();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

/* ---------- formatting ---------- */

// show the coefficient as a negative?  Only single-term numerators with a
// prime-subfield scalar > p/2 fold, so "-x" always re-parses as -(x).
// (Never fires for p = 2.)
bool fold_negative(const Fq& F, const Frac& c) {
    int nz = 0;
    fq_elem v = 0;
    for (fq_elem a : c.num().coeffs())
        if (a != 0) { ++nz; v = a; }
    return nz == 1 && int(v) < F.p() && 2 * int(v) > F.p();
}

// θ-polynomial with an optional leading minus already factored out by the
// caller; parenthesized when it has more than one term
std::string theta_str(const ThetaPoly& p, bool parens_if_sum) {
    std::string s = p.to_string();
    if (parens_if_sum && s.find('+') != std::string::npos) s = "(" + s + ")";
    return s;
}

std::string coeff_str(const Frac& c, bool has_mono) {
    const ThetaPoly& n = c.num();
    const ThetaPoly& d = c.den();
    std::string out;
    if (d.is_one()) {
        if (has_mono && n.is_one()) return "";
        out = theta_str(n, has_mono);
    } else {
        out = theta_str(n, true) + "/" + theta_str(d, true);
    }
    return out;
}

} // namespace

MultiPoly parse_poly(const Fq& F, const std::string& text) {
    Parser p(F, text);
    return p.run();
}

ThetaPoly parse_theta_poly(const Fq& F, const std::string& text) {
    Frac f = parse_frac(F, text);
    if (!f.is_integral())
        throw ParseError("expected a polynomial in th, found a fraction");
    return f.num();
}

Frac parse_frac(const Fq& F, const std::string& text) {
    Parser p(F, text);
    MultiPoly poly = p.run();
    Frac out(F);
    for (const auto& [m, c] : poly.terms()) {
        if (!m.is_one()) throw ParseError("expected a θ-only expression");
        out += c;
    }
    return out;
}

std::string format_frac(const Frac& c) { return coeff_str(c, false); }

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const Fq& F = p.field();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Frac cc = c;
        bool neg = fold_negative(F, c);
        if (neg) cc = -cc;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string cs = coeff_str(cc, !m.is_one());
        os << cs;
        bool need_star = !cs.empty();
        for (const auto& [v, e] : m.factors()) {
            if (need_star) os << "*";
            need_star = true;
            os << v.name();
            if (e > 1) os << "^" << e;
        }
        if (m.is_one() && cs.empty()) os << "1";
    }
    return os.str();
}

std::string format_series(const ZSeries& s) {
    if (s.exact()) {
        MultiPoly p = s.to_poly();
        return p.is_zero() ? "0" : format_poly(p);
    }
    std::ostringstream os;
    bool printed = false;
    for (int d = 0; d < s.prec(); ++d) {
        const MultiPoly& c = s.coeff(d);
        if (c.is_zero()) continue;
        if (printed) os << " + ";
        printed = true;
        std::string cs = format_poly(c);
        bool sum = cs.find(" + ") != std::string::npos ||
                   cs.find(" - ") != std::string::npos;
        if (d == 0) {
            os << cs;
        } else {
            if (sum) os << "(" << cs << ")";
            else if (cs == "1") os << "";
            else os << cs;
            if (!sum && cs == "1") os << "z";
            else os << "*z";
            if (d > 1) os << "^" << d;
        }
    }
    if (printed) os << " + ";
    os << "O(z^" << s.prec() << ")";
    return os.str();
}

std::string poly_to_json(const MultiPoly& p) {
    nlohmann::ordered_json j;
    const Fq& F = p.field();
    j["q"] = F.q();
    j["e"] = F.e();
    std::vector<std::string> vars;
    int st = p.max_index(VarKind::T), sx = p.max_index(VarKind::X);
    for (int i = 1; i <= st; ++i) vars.push_back("t" + std::to_string(i));
    for (int i = 1; i <= sx; ++i) vars.push_back("X" + std::to_string(i));
    if (p.degree_in(Var::z()) > 0) vars.push_back("z");
    if (p.degree_in(Var::Z()) > 0) vars.push_back("Z");
    j["vars"] = vars;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["num"] = c.num().to_string();
        t["den"] = c.den().to_string();
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
        t["exps"] = exps;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j.dump(2);
}

MultiPoly poly_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("q") || !j.contains("terms"))
        throw ParseError("JSON polynomial needs 'q' and 'terms'");
    const Fq& F = Fq::get(j["q"].get<int>());
    if (j.contains("e") && j["e"].get<int>() != F.e())
        throw ParseError("JSON field degree does not match q");
    MultiPoly p(F);
    for (const auto& t : j["terms"]) {
        ThetaPoly num = parse_theta_poly(F, t["num"].get<std::string>());
        ThetaPoly den = t.contains("den")
                            ? parse_theta_poly(F, t["den"].get<std::string>())
                            : ThetaPoly::constant(F, 1);
        std::vector<std::pair<Var, std::uint32_t>> fs;
        if (t.contains("exps"))
            for (auto it = t["exps"].begin(); it != t["exps"].end(); ++it) {
                const std::string& name = it.key();
                std::uint32_t e = it.value().get<std::uint32_t>();
                if (name == "z") fs.emplace_back(Var::z(), e);
                else if (name == "Z") fs.emplace_back(Var::Z(), e);
                else if (name.size() > 1 && name[0] == 't')
                    fs.emplace_back(Var::t(std::stoi(name.substr(1))), e);
                else if (name.size() > 1 && name[0] == 'X')
                    fs.emplace_back(Var::x(std::stoi(name.substr(1))), e);
                else
                    throw ParseError("unknown variable '" + name + "'");
            }
        p.add_term(Mono(std::move(fs)), Frac(num, den));
    }
    return p;
}

} // namespace carlitz
