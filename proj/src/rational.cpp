#include "mzvreg/rational.hpp"

#include "mzvreg/error.hpp"
#include "mzvreg/ring.hpp"

namespace mzvreg {

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw ParseError("malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

Integer RingTraits<Integer>::from_rational(const Rational& q) {
    if (q.get_den() != 1)
        throw DomainError("non-integral scalar " + q.get_str() + " in an integer ring");
    return q.get_num();
}

}  // namespace mzvreg
