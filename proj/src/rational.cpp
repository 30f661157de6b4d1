#include "lcs/rational.hpp"

#include <cctype>
#include <ostream>

namespace lcs {

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    std::string num;
    if (text[i] == '+' || text[i] == '-') {
        if (text[i] == '-') num.push_back('-');
        ++i;
    }
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num.push_back(text[i]);
        ++i;
        ++digits;
    }
    if (digits == 0) return std::nullopt;

    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        den.clear();
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            den.push_back(text[i]);
            ++i;
        }
        if (den.empty() || i != text.size()) return std::nullopt;
    }

    mpz_class n(num, 10), d(den, 10);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lcs
