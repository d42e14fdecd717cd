#include "hyperrig/field.hpp"

#include <gmp.h>

#include "hyperrig/errors.hpp"

namespace hyperrig {

Fp Fp::pow(std::uint64_t e) const
{
    Fp base = *this;
    Fp acc(1, p_);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Fp Fp::inverse() const
{
    if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(p_ - 2);
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }
std::string to_string(const mpq_class& x) { return x.get_str(); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound <= 1) return 0;
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        std::uint64_t x = rng() & mask;
        if (x < bound) return x;
    }
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    return mix64(mix64(mix64(seed) ^ a) ^ (b * 0x2545f4914f6cdd1dULL));
}

FieldConfig FieldConfig::prime(std::uint64_t p) { return FieldConfig{FieldKind::prime, p}; }
FieldConfig FieldConfig::rational() { return FieldConfig{FieldKind::rational, 0}; }

std::string FieldConfig::name() const
{
    return kind == FieldKind::prime ? "prime" : "rational";
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {}

Fp PrimeField::from_int(long long v) const
{
    if (v >= 0) return Fp(static_cast<std::uint64_t>(v), p_);
    return -Fp(static_cast<std::uint64_t>(-(v + 1)) + 1, p_);
}

Fp PrimeField::from_rational(const mpq_class& q) const
{
    mpz_class m(std::to_string(p_));
    mpz_class num = q.get_num() % m;
    mpz_class den = q.get_den() % m;
    if (num < 0) num += m;
    if (den == 0) throw std::domain_error("denominator vanishes modulo p");
    Fp n(std::stoull(num.get_str()), p_);
    Fp d(std::stoull(den.get_str()), p_);
    return n / d;
}

Fp PrimeField::sample(std::mt19937_64& rng) const
{
    return Fp(1 + uniform_below(rng, p_ - 1), p_);
}

mpq_class RationalField::sample(std::mt19937_64& rng) const
{
    std::uint64_t x = 1 + uniform_below(rng, 2 * bound_);  // 1..2b
    long v = x <= bound_ ? static_cast<long>(x) : -static_cast<long>(x - bound_);
    return mpq_class(v);
}

bool is_prime(std::uint64_t n)
{
    mpz_class z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

void validate(const FieldConfig& cfg)
{
    if (cfg.kind == FieldKind::rational) return;
    require(cfg.modulus > (1ULL << 50), "field modulus must exceed 2^50");
    require(cfg.modulus < (1ULL << 62), "field modulus must be below 2^62");
    require(is_prime(cfg.modulus), "field modulus is not prime: " + std::to_string(cfg.modulus));
}

}  // namespace hyperrig
