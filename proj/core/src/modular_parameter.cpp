#include "qwhit/modular_parameter.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace qwhit {

ModularParameter::ModularParameter(double b) : b_(b)
{
    if (!(b > 0.0) || !std::isfinite(b))
        throw Error("modular parameter b must be a positive finite real");
    const double big = b + 1.0 / b;
    c_b_ = Cplx(0.0, 0.5 * big);
    delta_b_ = Cplx(0.0, 0.5 * (b - 1.0 / b));
    q_ = std::exp(iu * pi * b * b);
    // c_b^2 = -big^2/4 is real, so both phases below are purely imaginary.
    const double cb2 = -0.25 * big * big;
    log_zeta_ = iu * (pi * (1.0 - 4.0 * cb2) / 12.0);
    zeta_ = std::exp(log_zeta_);
    log_zeta_inv_ = -2.0 * log_zeta_ - iu * (pi * cb2);
    zeta_inv_ = std::exp(log_zeta_inv_);
}

std::string format_full(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_cplx(Cplx z)
{
    std::string s = format_full(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag()))
        s += "+";
    s += format_full(z.imag());
    s += "i";
    return s;
}

Cplx parse_cplx(const std::string& s)
{
    // Accepted forms: "1.5", "1.5+0.2i", "1.5-0.2i", "0.2i", "-i", "i".
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error("empty complex literal");

    if (t.back() != 'i' && t.back() != 'I') {
        char* end = nullptr;
        double re = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size())
            throw Error("cannot parse complex literal: " + s);
        return {re, 0.0};
    }

    t.pop_back(); // strip the trailing i
    // Find the split between the real part and the imaginary coefficient:
    // last '+'/'-' that is not part of an exponent and not leading.
    int split = -1;
    for (int i = static_cast<int>(t.size()) - 1; i > 0; --i) {
        char c = t[static_cast<size_t>(i)];
        if ((c == '+' || c == '-') && t[static_cast<size_t>(i - 1)] != 'e' &&
            t[static_cast<size_t>(i - 1)] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_imag_coeff = [&](const std::string& u) -> double {
        if (u.empty() || u == "+") return 1.0;
        if (u == "-") return -1.0;
        char* end = nullptr;
        double v = std::strtod(u.c_str(), &end);
        if (end != u.c_str() + u.size())
            throw Error("cannot parse complex literal: " + s);
        return v;
    };
    if (split < 0)
        return {0.0, parse_imag_coeff(t)};
    std::string re_part = t.substr(0, static_cast<size_t>(split));
    std::string im_part = t.substr(static_cast<size_t>(split));
    char* end = nullptr;
    double re = std::strtod(re_part.c_str(), &end);
    if (end != re_part.c_str() + re_part.size())
        throw Error("cannot parse complex literal: " + s);
    return {re, parse_imag_coeff(im_part)};
}

} // namespace qwhit
