#pragma once

#include "errors.hpp"

namespace srglab {

inline bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

// Element of GF(q), q prime. Prime fields only; extension fields are out of
// scope for the constructions here.
class PrimeFieldElement {
public:
    PrimeFieldElement(long long value, long long q) : q_(checked_modulus(q)) {
        v_ = value % q_;
        if (v_ < 0) v_ += q_;
    }

    long long value() const { return v_; }
    long long modulus() const { return q_; }

    PrimeFieldElement operator+(const PrimeFieldElement& o) const { return {v_ + o.v_, q_}; }
    PrimeFieldElement operator-(const PrimeFieldElement& o) const { return {v_ - o.v_, q_}; }
    PrimeFieldElement operator*(const PrimeFieldElement& o) const { return {v_ * o.v_, q_}; }

    // Inverse by Fermat; q is prime so a^(q-2) works for a != 0.
    PrimeFieldElement inverse() const {
        if (v_ == 0) throw InvalidParams("inverse of zero in GF(q)");
        long long result = 1, base = v_, e = q_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % q_;
            base = base * base % q_;
            e >>= 1;
        }
        return {result, q_};
    }

    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

private:
    static long long checked_modulus(long long q) {
        if (!is_prime(q)) throw NotPrime("field order " + std::to_string(q) + " is not prime");
        return q;
    }

    long long q_;
    long long v_;
};

} // namespace srglab
