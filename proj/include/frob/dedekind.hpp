#ifndef FROB_DEDEKIND_HPP
#define FROB_DEDEKIND_HPP

#include <cstdint>
#include <vector>

namespace frob {

// Arguments of a Fourier-Dedekind sum sigma_t(c1,...,cn; c).
struct DedekindParams {
    std::vector<std::int64_t> args; // each coprime to modulus
    std::int64_t modulus = 1;       // c >= 1
    std::int64_t shift = 0;         // t
};

// ((x)) = x - floor(x) - 1/2, taken literally at integers (value -1/2).
// This is the convention under which the finite-sum identity below agrees
// with the roots-of-unity definition for every argument, including the
// boundary terms at m = 0; the usual Dedekind sawtooth (0 at integers)
// breaks the identity there.
double sawtooth(double x);

// sigma_t(c1,...,cn; c) = (1/c) sum over nontrivial c-th roots of unity
// lambda of lambda^t / prod_i (lambda^{c_i} - 1). Returns the real part and
// rejects evaluations whose imaginary part exceeds 1e-9. c = 1 gives 0
// (empty sum). Desk scale: c <= 10^4.
double fd_roots_of_unity(const DedekindParams& params);

// Two-argument finite-sum form:
//   sigma_t(a, b; c) = sum_{m=0}^{c-1} ((-a^{-1}(bm + t)/c)) ((m/c)) - 1/(4c)
// with a a^{-1} ≡ 1 (mod c). Requires gcd(a,c) = gcd(b,c) = 1.
double fd_sawtooth(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t t);

// Corrected lower bound -c/12 - 5/(12c) for sigma_t(a, b; c).
double sigma_lower_bound(std::int64_t c);

// Quadratic lower bound on the strictly-positive representation count
// p'_{a,b,c}(t) for pairwise coprime a, b, c:
//   t^2/(2abc) - (t/2)(1/ab + 1/ac + 1/bc) + (1/12)(a/bc + b/ac + c/ab)
//   - (1/12)(a+b+c) - (1/6)(1/a + 1/b + 1/c)
double p_prime_lower_bound(std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t t);

// Modular inverse via extended Euclid; throws std::domain_error when
// gcd(a, m) != 1. m = 1 returns 0.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

} // namespace frob

#endif
