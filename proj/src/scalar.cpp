#include "gckit/scalar.hpp"

#include "gckit/errors.hpp"

namespace gckit {

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw ParseError("bad rational literal: '" + text + "'");
    }
    Rational q;
    try {
        q = Rational(text);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + text + "'");
    }
    if (text.find('/') != std::string::npos && q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_zero())
        throw ConstraintError("division by zero");
    Rational n2 = o.norm2();
    Rational r = (re * o.re + im * o.im) / n2;
    Rational i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gaussian inverse(const Gaussian& z) {
    return Gaussian(1) / z;
}

std::string to_string(const Gaussian& z) {
    if (z.is_zero())
        return "0";
    std::string out;
    if (z.re != 0) {
        out += to_string(z.re);
    }
    if (z.im != 0) {
        std::string imabs;
        Rational a = abs(z.im);
        imabs = (a == 1) ? "i" : to_string(a) + "*i";
        if (out.empty())
            out += (z.im < 0 ? "-" : "") + imabs;
        else
            out += (z.im < 0 ? "-" : "+") + imabs;
    }
    return out;
}

} // namespace gckit
