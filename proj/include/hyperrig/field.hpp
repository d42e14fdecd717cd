#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace hyperrig {

// 2^61 - 1 (Mersenne), and the largest prime below it.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;
inline constexpr std::uint64_t kSecondPrime = 2305843009213693921ULL;

// Element of Z/pZ. Carries its modulus so generic code can use plain operators.
// A default-constructed Fp is a zero that adopts the modulus of the other operand.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b)
    {
        std::uint64_t p = a.p_ ? a.p_ : b.p_;
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator-(Fp a, Fp b)
    {
        std::uint64_t p = a.p_ ? a.p_ : b.p_;
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
    }
    friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
    friend Fp operator*(Fp a, Fp b)
    {
        std::uint64_t p = a.p_ ? a.p_ : b.p_;
        return raw(mulmod(a.v_, b.v_, p), p);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp pow(std::uint64_t e) const;
    Fp inverse() const;

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
    {
        unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
        if (p == kDefaultPrime) {
            std::uint64_t r = static_cast<std::uint64_t>(z & kDefaultPrime) +
                              static_cast<std::uint64_t>(z >> 61);
            return r >= kDefaultPrime ? r - kDefaultPrime : r;
        }
        return static_cast<std::uint64_t>(z % p);
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p)
    {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline Fp inverse(const Fp& x) { return x.inverse(); }
inline mpq_class inverse(const mpq_class& x) { return mpq_class(1) / x; }
std::string to_string(const Fp& x);
std::string to_string(const mpq_class& x);

// Uniform integer in [0, bound) by mask rejection; portable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// splitmix64 finalizer, used to derive independent sub-seeds.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

enum class FieldKind { prime, rational };

struct FieldConfig {
    FieldKind kind = FieldKind::prime;
    std::uint64_t modulus = kDefaultPrime;  // prime fields only

    static FieldConfig prime(std::uint64_t p = kDefaultPrime);
    static FieldConfig rational();
    std::string name() const;
};

class PrimeField {
public:
    using Element = Fp;
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    Element zero() const { return Fp(0, p_); }
    Element one() const { return Fp(1, p_); }
    Element from_int(long long v) const;
    Element from_rational(const mpq_class& q) const;
    Element sample(std::mt19937_64& rng) const;  // uniform nonzero
    // Size of the set random coordinates are drawn from (Schwartz-Zippel denominator).
    double sample_space() const { return static_cast<double>(p_ - 1); }
    std::uint64_t modulus() const { return p_; }
    FieldConfig config() const { return FieldConfig::prime(p_); }

private:
    std::uint64_t p_;
};

class RationalField {
public:
    using Element = mpq_class;
    // Random coordinates are nonzero integers in [-bound, bound].
    explicit RationalField(std::uint64_t bound = (1ULL << 30)) : bound_(bound) {}

    Element zero() const { return mpq_class(0); }
    Element one() const { return mpq_class(1); }
    Element from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }
    Element sample(std::mt19937_64& rng) const;
    double sample_space() const { return 2.0 * static_cast<double>(bound_); }
    FieldConfig config() const { return FieldConfig::rational(); }

private:
    std::uint64_t bound_;
};

bool is_prime(std::uint64_t n);

// Throws InputError unless the configuration is usable (prime modulus above 2^50).
void validate(const FieldConfig& cfg);

}  // namespace hyperrig
