#include "gckit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gckit/errors.hpp"

namespace gckit {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned k : e)
        d += k;
    return d;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0)
        throw DimensionError("negative variable count");
}

Polynomial Polynomial::constant(int nvars, const Gaussian& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw DimensionError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, e, Gaussian(1));
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, const Gaussian& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw DimensionError("exponent vector length mismatch");
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_real() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_real())
            return false;
    return true;
}

int Polynomial::degree() const {
    if (terms_.empty())
        return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

Gaussian Polynomial::constant_term() const {
    return coeff(Exponents(nvars_, 0));
}

Gaussian Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Gaussian() : it->second;
}

void Polynomial::add_term(const Exponents& e, const Gaussian& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial Polynomial::conj() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c.conj());
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    require_same_vars(*this, o);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    *this = std::move(r);
    return *this;
}

Polynomial& Polynomial::operator*=(const Gaussian& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(nvars_, Gaussian(1));
    for (unsigned j = 0; j < k; ++j)
        r *= *this;
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw DimensionError("derivative variable out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents f = e;
        f[var] -= 1;
        r.add_term(f, c * Gaussian(static_cast<long>(e[var])));
    }
    return r;
}

Polynomial Polynomial::antiderivative(int var) const {
    if (var < 0 || var >= nvars_)
        throw DimensionError("integration variable out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] += 1;
        r.add_term(f, c / Gaussian(static_cast<long>(f[var])));
    }
    return r;
}

Polynomial Polynomial::definite_integral(int var, const Polynomial& lo, const Polynomial& hi) const {
    require_same_vars(*this, lo);
    require_same_vars(*this, hi);
    if (!lo.derivative(var).is_zero() || !hi.derivative(var).is_zero())
        throw DimensionError("integration bound involves the integration variable");
    Polynomial a = antiderivative(var);
    return a.substituted(var, hi) - a.substituted(var, lo);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw DimensionError("compose: wrong number of images");
    int out_vars = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images)
        if (im.nvars() != out_vars)
            throw DimensionError("compose: images over different variable sets");
    Polynomial r(out_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0)
                term *= images[i].pow(e[i]);
        r += term;
    }
    return r;
}

Polynomial Polynomial::substituted(int var, const Polynomial& value) const {
    require_same_vars(*this, value);
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i)
        images.push_back(i == var ? value : variable(nvars_, i));
    return compose(images);
}

Polynomial Polynomial::resized(int new_nvars) const {
    if (new_nvars == nvars_)
        return *this;
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents f(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (i >= new_nvars)
                throw DimensionError("resized: dropped variable occurs in polynomial");
            f[i] = e[i];
        }
        r.terms_.emplace(f, c);
    }
    return r;
}

Gaussian Polynomial::eval(const std::vector<Gaussian>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("eval: wrong point dimension");
    Gaussian acc;
    for (const auto& [e, c] : terms_) {
        Gaussian v = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                v *= point[i];
        acc += v;
    }
    return acc;
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return names;
}

namespace {

std::string monomial_str(const Exponents& e, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names[i];
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

// Renders one term as (leading_sign, body); the caller joins with " + " / " - ".
std::pair<bool, std::string> term_str(const Exponents& e, const Gaussian& c,
                                      const std::vector<std::string>& names) {
    std::string mono = monomial_str(e, names);
    bool negative = false;
    std::string body;
    if (c.im == 0) {
        negative = c.re < 0;
        Rational a = abs(c.re);
        body = (a == 1 && !mono.empty()) ? "" : to_string(a);
    } else if (c.re == 0) {
        negative = c.im < 0;
        Rational a = abs(c.im);
        body = (a == 1) ? "i" : to_string(a) + "*i";
    } else {
        body = "(" + to_string(c) + ")";
    }
    if (!mono.empty()) {
        if (!body.empty())
            body += "*";
        body += mono;
    }
    return {negative, body};
}

} // namespace

std::string Polynomial::str(const std::vector<std::string>& names_in) const {
    if (terms_.empty())
        return "0";
    std::vector<std::string> names = names_in.empty() ? default_var_names(nvars_) : names_in;
    if (static_cast<int>(names.size()) != nvars_)
        throw DimensionError("str: wrong number of variable names");
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [neg, body] = term_str(it->first, it->second, names);
        if (out.empty())
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text grammar parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected integer at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    int nvars;
    const std::vector<std::string>& names;

    Parser(const std::string& text, int nv, const std::vector<std::string>& nm)
        : lex(text), nvars(nv), names(nm) {}

    Polynomial expr() {
        bool neg = false;
        if (lex.accept('-'))
            neg = true;
        else
            lex.accept('+');
        Polynomial acc = term();
        if (neg)
            acc = -acc;
        for (;;) {
            if (lex.accept('+'))
                acc += term();
            else if (lex.accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (lex.accept('*')) {
                acc *= factor();
            } else if (lex.accept('/')) {
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division is only allowed by a nonzero constant");
                acc *= inverse(d.constant_term());
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lex.accept('^')) {
            std::string e = lex.integer();
            unsigned long k = std::stoul(e);
            if (k > 64)
                throw ParseError("exponent too large: " + e);
            return base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Polynomial atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            Polynomial p = expr();
            if (!lex.accept(')'))
                throw ParseError("expected ')'");
            return p;
        }
        if (c == '-') {
            lex.accept('-');
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.integer();
            return Polynomial::constant(nvars, Gaussian(rational_from_string(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = lex.identifier();
            if (id == "i")
                return Polynomial::constant(nvars, Gaussian::i());
            for (int v = 0; v < nvars; ++v)
                if (names[v] == id)
                    return Polynomial::variable(nvars, v);
            throw ParseError("unknown symbol '" + id + "'");
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars,
                             const std::vector<std::string>& names_in) {
    std::vector<std::string> names = names_in.empty() ? default_var_names(nvars) : names_in;
    if (static_cast<int>(names.size()) != nvars)
        throw DimensionError("parse: wrong number of variable names");
    Parser p(text, nvars, names);
    Polynomial result = p.expr();
    if (!p.lex.eof())
        throw ParseError("trailing input at position " + std::to_string(p.lex.pos));
    return result;
}

} // namespace gckit
