#include "superkit/complexq.hpp"

#include <stdexcept>

namespace superkit {

ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) {
    Rational n = b.norm_sq();
    if (n == 0) throw std::domain_error("division by complex zero");
    ComplexScalar num = a * b.conj();
    return {num.re / n, num.im / n};
}

ComplexScalar ComplexScalar::pow(long e) const {
    if (e == 0) return one();
    ComplexScalar base = *this;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv) base = one() / base;
    ComplexScalar acc = one();
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string ComplexScalar::str() const {
    if (im == 0) return to_string(re);
    std::string ipart;
    if (im == 1) {
        ipart = "i";
    } else if (im == -1) {
        ipart = "-i";
    } else {
        ipart = to_string(im) + "i";
    }
    if (re == 0) return ipart;
    if (im > 0 && ipart[0] != '-') return to_string(re) + "+" + ipart;
    return to_string(re) + ipart;
}

ComplexScalar parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    // No trailing 'i': purely real.
    if (s.back() != 'i') return {parse_rational(s)};

    std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that is not the leading sign and not inside "p/q".
    for (size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            std::string rp = body.substr(0, k);
            std::string ip = body.substr(k);
            if (ip == "+") ip = "1";
            if (ip == "-") ip = "-1";
            return {parse_rational(rp), parse_rational(ip)};
        }
    }
    if (body.empty()) return ComplexScalar::i();
    if (body == "-") return {Rational(0), Rational(-1)};
    if (body == "+") return ComplexScalar::i();
    return {Rational(0), parse_rational(body)};
}

}  // namespace superkit
