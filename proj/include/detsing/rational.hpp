#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace detsing {

using Q = mpq_class;
using Z = mpz_class;

inline Z binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline long binom(long n, long k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    return binomial(n, k).get_si();
}

inline Z factorial(long n)
{
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Q parse_rational(const std::string& s)
{
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline Q fraction(long num, long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    Q q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

} // namespace detsing
