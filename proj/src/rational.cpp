#include "spinmod/rational.hpp"

#include "spinmod/error.hpp"

#include <cctype>

namespace spinmod {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s.front() == '-') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r;
    r.value_ = mpq_class(n, d);
    r.value_.canonicalize();
    return r;
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace spinmod
