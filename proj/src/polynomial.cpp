#include "jetpva/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace jetpva {

void Polynomial::insert(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.insert(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.insert(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.insert(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return {};
    Polynomial r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    Polynomial r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::optional<int> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::optional<long> Polynomial::weighted_degree(const std::map<VarId, long>& w) const {
    if (terms_.empty()) return std::nullopt;
    auto wf = [&w](const VarId& v) {
        auto it = w.find(v);
        return it == w.end() ? 0L : it->second;
    };
    std::optional<long> d;
    for (const auto& [m, c] : terms_) {
        long wd = m.weighted_degree(wf);
        if (!d || wd > *d) d = wd;
    }
    return d;
}

Polynomial Polynomial::top_weight_form(const std::map<VarId, long>& w) const {
    auto d = weighted_degree(w);
    if (!d) return {};
    auto wf = [&w](const VarId& v) {
        auto it = w.find(v);
        return it == w.end() ? 0L : it->second;
    };
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(wf) == *d) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::derivative(const VarId& v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = m / Monomial::var(v);
        r.insert(dm, c * e);
    }
    return r;
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.exponents()) {
            auto it = point.find(var);
            if (it == point.end())
                throw MissingAssignment("no value assigned to variable " + var.str());
            for (int i = 0; i < e; ++i) v *= it->second;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& images) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Polynomial t(c);
        for (const auto& [var, e] : m.exponents()) {
            auto it = images.find(var);
            Polynomial base = (it == images.end()) ? Polynomial::var(var) : it->second;
            t *= base.pow(e);
        }
        r += t;
    }
    return r;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) vs.insert(v);
    return vs;
}

int Polynomial::max_jet_level() const {
    int lvl = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) lvl = std::max(lvl, v.level);
    return lvl;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& ord) const {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || ord.greater(m, *best)) best = &m;
    if (!best) throw std::logic_error("leading monomial of zero polynomial");
    return *best;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& ord) const {
    return terms_.at(leading_monomial(ord));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
    if (is_zero()) return {};
    Rational lc = leading_coefficient(ord);
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lc);
    return r;
}

std::string Polynomial::str(const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&ord](auto* a, auto* b) { return ord.greater(a->first, b->first); });

    std::ostringstream out;
    bool first = true;
    for (auto* t : sorted) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;

        std::vector<VarId> vars;
        for (const auto& [v, e] : m.exponents()) vars.push_back(v);
        vars = ord.sort_by_precedence(std::move(vars));

        bool coeff_printed = false;
        if (m.is_one() || a != 1) {
            out << to_string(a);
            coeff_printed = true;
        }
        bool first_var = !coeff_printed;
        for (const auto& v : vars) {
            if (!first_var) out << "*";
            first_var = false;
            out << v.str();
            int e = m.exponent(v);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return pos < s.size() ? s[pos++] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }
};

Polynomial parse_expr(Lexer& lx);

Integer parse_integer(Lexer& lx) {
    lx.skip_ws();
    std::string digits;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        digits += lx.s[lx.pos++];
    if (digits.empty()) lx.fail("expected integer");
    return Integer(digits);
}

Polynomial parse_atom(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.get();
        Polynomial p = parse_expr(lx);
        if (lx.get() != ')') lx.fail("expected ')'");
        return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = parse_integer(lx);
        if (lx.peek() == '/') {
            lx.get();
            Integer den = parse_integer(lx);
            if (den == 0) lx.fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return Polynomial(q);
        }
        return Polynomial(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name;
        while (lx.pos < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_')) {
            name += lx.s[lx.pos++];
        }
        // jet suffix "name_(-k)": the '_' was consumed into name, back it out
        int level = 0;
        if (!name.empty() && name.back() == '_' && lx.pos < lx.s.size() && lx.s[lx.pos] == '(') {
            size_t save = lx.pos;
            ++lx.pos; // '('
            if (lx.pos < lx.s.size() && lx.s[lx.pos] == '-') {
                ++lx.pos;
                Integer k = parse_integer(lx);
                if (lx.pos < lx.s.size() && lx.s[lx.pos] == ')' && k >= 1) {
                    ++lx.pos;
                    name.pop_back();
                    level = static_cast<int>(k.get_si()) - 1;
                } else {
                    lx.pos = save;
                }
            } else {
                lx.pos = save;
            }
        }
        if (name.empty()) lx.fail("expected variable name");
        return Polynomial::var(VarId{name, level});
    }
    lx.fail("unexpected character");
}

Polynomial parse_factor(Lexer& lx) {
    if (lx.peek() == '-') {
        lx.get();
        return -parse_factor(lx);
    }
    Polynomial base = parse_atom(lx);
    if (lx.peek() == '^') {
        lx.get();
        Integer e = parse_integer(lx);
        if (e < 0 || e > 1000) lx.fail("exponent out of range");
        return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
}

Polynomial parse_term(Lexer& lx) {
    Polynomial p = parse_factor(lx);
    while (lx.peek() == '*') {
        lx.get();
        p *= parse_factor(lx);
    }
    return p;
}

Polynomial parse_expr(Lexer& lx) {
    Polynomial p = parse_term(lx);
    for (;;) {
        char c = lx.peek();
        if (c == '+') {
            lx.get();
            p += parse_term(lx);
        } else if (c == '-') {
            lx.get();
            p -= parse_term(lx);
        } else {
            break;
        }
    }
    return p;
}

} // namespace

Polynomial parse_polynomial(const std::string& text) {
    Lexer lx(text);
    Polynomial p = parse_expr(lx);
    if (lx.peek() != '\0') lx.fail("trailing input");
    return p;
}

} // namespace jetpva
