#include "frob/dedekind.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace frob {

double sawtooth(double x) { return x - std::floor(x) - 0.5; }

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1)
        throw std::domain_error("mod_inverse: modulus must be >= 1");
    if (m == 1)
        return 0;
    std::int64_t r0 = m, r1 = ((a % m) + m) % m;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: argument not coprime to modulus");
    return ((s0 % m) + m) % m;
}

double fd_roots_of_unity(const DedekindParams& params) {
    const std::int64_t c = params.modulus;
    if (c < 1)
        throw std::domain_error("fd_roots_of_unity: modulus must be >= 1");
    if (c > 10'000)
        throw std::invalid_argument("fd_roots_of_unity: modulus beyond desk scale");
    if (c == 1)
        return 0.0;
    for (std::int64_t ci : params.args) {
        if (std::gcd(((ci % c) + c) % c, c) != 1)
            throw std::domain_error(
                "fd_roots_of_unity: argument shares a factor with the modulus");
    }

    // lambda^e evaluated through the residue table keeps every power an
    // exact primitive-root sample instead of compounding pow() error.
    std::vector<std::complex<double>> root(static_cast<std::size_t>(c));
    for (std::int64_t j = 0; j < c; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(c);
        root[static_cast<std::size_t>(j)] = {std::cos(angle), std::sin(angle)};
    }
    const auto reduce = [c](std::int64_t e) {
        return static_cast<std::size_t>(((e % c) + c) % c);
    };

    const std::int64_t t = ((params.shift % c) + c) % c;
    std::complex<double> total = 0.0;
    for (std::int64_t k = 1; k < c; ++k) {
        std::complex<double> denom = 1.0;
        for (std::int64_t ci : params.args)
            denom *= root[reduce(k * ci)] - 1.0;
        total += root[reduce(k * t)] / denom;
    }
    total /= static_cast<double>(c);
    if (std::abs(total.imag()) >= 1e-9)
        throw std::logic_error("fd_roots_of_unity: nonreal result");
    return total.real();
}

double fd_sawtooth(std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t t) {
    if (c < 1)
        throw std::domain_error("fd_sawtooth: modulus must be >= 1");
    const std::int64_t ainv = mod_inverse(a, c); // checks gcd(a, c) = 1
    if (c != 1 && std::gcd(((b % c) + c) % c, c) != 1)
        throw std::domain_error("fd_sawtooth: b shares a factor with the modulus");

    // ((x)) has period 1, so the argument is reduced mod c in integer
    // arithmetic first; the division below then never sits on a floor
    // boundary it could fall off in doubles.
    const std::int64_t br = ((b % c) + c) % c;
    const std::int64_t tr = ((t % c) + c) % c;
    const double cd = static_cast<double>(c);
    double sum = 0.0;
    for (std::int64_t m = 0; m < c; ++m) {
        const std::int64_t num = (((-ainv * (br * m + tr)) % c) + c) % c;
        sum += (static_cast<double>(num) / cd - 0.5) *
               (static_cast<double>(m) / cd - 0.5);
    }
    return sum - 1.0 / (4.0 * cd);
}

double sigma_lower_bound(std::int64_t c) {
    const double cd = static_cast<double>(c);
    return -cd / 12.0 - 5.0 / (12.0 * cd);
}

double p_prime_lower_bound(std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t t) {
    const double ad = static_cast<double>(a);
    const double bd = static_cast<double>(b);
    const double cd = static_cast<double>(c);
    const double td = static_cast<double>(t);
    return td * td / (2.0 * ad * bd * cd) -
           (td / 2.0) * (1.0 / (ad * bd) + 1.0 / (ad * cd) + 1.0 / (bd * cd)) +
           (1.0 / 12.0) * (ad / (bd * cd) + bd / (ad * cd) + cd / (ad * bd)) -
           (1.0 / 12.0) * (ad + bd + cd) -
           (1.0 / 6.0) * (1.0 / ad + 1.0 / bd + 1.0 / cd);
}

} // namespace frob
