#include "sheafcx/rational.hpp"

#include "sheafcx/errors.hpp"

#include <cctype>

namespace sheafcx {

std::string to_exact_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& q, int places) {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const bool negative = num < 0;
    const BigInt absNum = negative ? BigInt(-num) : num;
    BigInt scaled = (absNum * scale * 2 + den) / (den * 2);
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string fracStr = frac.str();
    if (places > 0) fracStr.insert(0, static_cast<std::size_t>(places) - fracStr.size(), '0');
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (places > 0) out += "." + fracStr;
    return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ParseError("not a rational number: '" + std::string(text) + "'", 0, 0); };
    if (text.empty()) fail();
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) fail();
        BigInt v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
            v = v * 10 + (text[i] - '0');
        }
        return v;
    };
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt den = digits(slash + 1, text.size());
        if (den == 0) fail();
        value = Rational(digits(pos, slash), den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const BigInt whole = dot > pos ? digits(pos, dot) : BigInt(0);
        const BigInt frac = digits(dot + 1, text.size());
        BigInt scale = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
        value = Rational(whole * scale + frac, scale);
    } else {
        value = Rational(digits(pos, text.size()));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace sheafcx
