#include "degenmat/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace degenmat {

namespace {

// Display priority (x, y, lambda, mu), matching TermOrder.
constexpr std::array<Sym, 4> kDisplayOrder{Sym::x, Sym::y, Sym::lambda, Sym::mu};

}  // namespace

const char* sym_name(Sym s) {
    switch (s) {
        case Sym::lambda: return "lambda";
        case Sym::mu: return "mu";
        case Sym::x: return "x";
        case Sym::y: return "y";
    }
    return "?";
}

std::optional<Sym> sym_from_name(std::string_view name) {
    for (Sym s : kAllSyms)
        if (name == sym_name(s)) return s;
    return std::nullopt;
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents{0, 0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + str());
    return constant_term();
}

long MultiPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (auto v : e) t += v;
        if (t > d) d = t;
    }
    return d;
}

long MultiPoly::degree(Sym s) const {
    long d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(e[static_cast<std::size_t>(s)]));
    return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("MultiPoly::pow requires a nonnegative exponent");
    MultiPoly result(Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

MultiPoly MultiPoly::eval(const std::map<Sym, Rational>& bindings) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        Exponents rest = e;
        for (const auto& [s, v] : bindings) {
            const auto i = static_cast<std::size_t>(s);
            if (rest[i] > 0) {
                coeff *= v.pow(rest[i]);
                rest[i] = 0;
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

MultiPoly MultiPoly::div_exact(Sym s) const {
    const auto i = static_cast<std::size_t>(s);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            throw NotDivisible("term lacks factor " + std::string(sym_name(s)) + " in " + str());
        Exponents d = e;
        --d[i];
        r.terms_.emplace(d, c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = c.abs();
        std::string mono;
        for (Sym s : kDisplayOrder) {
            const auto exp = e[static_cast<std::size_t>(s)];
            if (exp == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += sym_name(s);
            if (exp > 1) mono += '^' + std::to_string(exp);
        }
        if (mono.empty()) {
            out << mag.str();
        } else if (mag.is_one()) {
            out << mono;
        } else {
            out << mag.str() << '*' << mono;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos) + " in \"" +
                         std::string(text) + "\"");
    }

    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected symbol name");
        return std::string(text.substr(start, pos - start));
    }

    // factor := rational | symbol ['^' int]
    MultiPoly parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_number();
            if (peek() == '/') {
                ++pos;
                num += '/' + read_number();
            }
            return MultiPoly(Rational::parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name = read_name();
            const auto s = sym_from_name(name);
            if (!s) fail("unknown symbol \"" + name + "\"");
            long exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = std::stol(read_number());
            }
            return MultiPoly::symbol(*s).pow(exp);
        }
        fail("unexpected character");
    }

    // term := factor ('*' factor)*
    MultiPoly parse_term() {
        MultiPoly p = parse_factor();
        while (peek() == '*') {
            ++pos;
            p = p * parse_factor();
        }
        return p;
    }

    MultiPoly parse_sum() {
        MultiPoly total;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            MultiPoly t = parse_term();
            total += negate ? -t : t;
            if (eof()) break;
            const char op = peek();
            if (op == '+') {
                negate = false;
            } else if (op == '-') {
                negate = true;
            } else {
                fail("expected '+' or '-'");
            }
            ++pos;
        }
        return total;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    PolyParser p{text};
    if (p.eof()) throw ParseError("empty polynomial");
    return p.parse_sum();
}

MultiPoly gff(const MultiPoly& base, const MultiPoly& step, long k) {
    if (k < 0) throw std::invalid_argument("gff requires a nonnegative index");
    MultiPoly r(Rational(1));
    for (long i = 0; i < k; ++i) r = r * (base - Rational(i) * step);
    return r;
}

MultiPoly gff_skip_base(const MultiPoly& base, const MultiPoly& step, long k) {
    if (k < 0) throw std::invalid_argument("gff_skip_base requires a nonnegative index");
    MultiPoly r(Rational(1));
    for (long i = 1; i < k; ++i) r = r * (base - Rational(i) * step);
    return r;
}

MultiPoly rising(const MultiPoly& base, long k) {
    if (k < 0) throw std::invalid_argument("rising requires a nonnegative index");
    MultiPoly r(Rational(1));
    for (long i = 0; i < k; ++i) r = r * (base + Rational(i));
    return r;
}

MultiPoly sym_lambda() { return MultiPoly::symbol(Sym::lambda); }
MultiPoly sym_mu() { return MultiPoly::symbol(Sym::mu); }
MultiPoly sym_x() { return MultiPoly::symbol(Sym::x); }
MultiPoly sym_y() { return MultiPoly::symbol(Sym::y); }

}  // namespace degenmat
