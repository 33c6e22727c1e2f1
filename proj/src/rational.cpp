#include "torelli/rational.hpp"

#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

std::string to_fraction(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw Error(ErrorCode::NonpositiveDenominator, text);
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error(ErrorCode::MalformedCertificate, "bad rational '" + text + "'");
    }
}

std::string to_decimal(const Rational& r, int digits) {
    if (r == 0) return "0";
    BigInt p = numerator(r), q = denominator(r);
    std::string sign;
    if (p < 0) { sign = "-"; p = -p; }
    // scale so that floor(p * 10^s / q) has exactly `digits` digits
    int exp10 = 0;
    BigInt ip = p / q;
    if (ip > 0) {
        exp10 = static_cast<int>(ip.str().size()) - 1;
    } else {
        BigInt t = p;
        while (t * 10 < q) { t *= 10; --exp10; }
        --exp10;
    }
    int shift = digits - 1 - exp10;
    BigInt num = p, den = q;
    if (shift >= 0) num *= pow(BigInt(10), shift);
    else den *= pow(BigInt(10), -shift);
    BigInt scaled = (2 * num + den) / (2 * den);  // round half up
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) > digits) {  // rounding carried a digit
        ++exp10;
        --shift;
        s.pop_back();
    }
    std::string out;
    if (shift <= 0) {
        out = s + std::string(-shift, '0');
    } else if (shift >= static_cast<int>(s.size())) {
        out = "0." + std::string(shift - s.size(), '0') + s;
    } else {
        out = s.substr(0, s.size() - shift) + "." + s.substr(s.size() - shift);
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sign + out;
}

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace torelli
