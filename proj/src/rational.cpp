#include "hahnrank/rational.hpp"

namespace hahnrank {

Rational Rational::parse(const std::string& text) {
    if (text.empty())
        throw Error(ErrorCode::ParseFailure, "empty rational literal");
    std::string num = text;
    std::string den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto is_int = [](const std::string& s) {
        if (s.empty())
            return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (!is_int(num) || !is_int(den))
        throw Error(ErrorCode::ParseFailure, "malformed rational literal '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        throw Error(ErrorCode::DomainMismatch, "rational with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

long Rational::ceil_long() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p())
        throw Error(ErrorCode::UnsupportedShape, "rational ceiling out of machine range");
    return q.get_si();
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_explicit() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace hahnrank
