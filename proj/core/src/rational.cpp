#include "conejump/rational.hpp"

#include <cctype>

namespace conejump {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            return make_rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Int(s));
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad decimal literal: " + text);
        bool neg = !head.empty() && head[0] == '-';
        if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
        if (head.empty()) head = "0";
        Int scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Int value = Int(head) * scale + (tail.empty() ? Int(0) : Int(tail));
        Rational q = make_rational(value, scale);
        return neg ? Rational(-q) : q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
    if (digits < 0) throw InvalidNumber("negative digit count");
    bool neg = sgn(q) < 0;
    Rational a = abs(q);
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // Round |q|*scale half away from zero.
    Int twice_num = 2 * Int(a.get_num()) * scale + Int(a.get_den());
    Int scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), twice_num.get_mpz_t(), Int(2 * a.get_den()).get_mpz_t());
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string out = (neg && (ip != 0 || fp != 0)) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

} // namespace conejump
