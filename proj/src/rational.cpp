#include "sigmarho/rational.hpp"

#include <stdexcept>

namespace sigmarho {

int bit_length(const BigInt& x) {
    if (x == 0) return 1;
    BigInt a = x < 0 ? BigInt(-x) : x;
    return static_cast<int>(boost::multiprecision::msb(a)) + 1;
}

std::string rational_to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += "/";
        out += denominator(r).str();
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational '" + text + "': " + e.what());
    }
}

}  // namespace sigmarho
