#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace asnp {

// Primality by trial division. Intended for the small primes used as digit
// bases throughout this library (p < 2^20 is enforced by require_prime).
bool is_prime(std::uint64_t n);

// Throws std::invalid_argument unless p is a prime in [2, 2^20).
void require_prime(std::uint64_t p);

// A nonnegative integer in base-p digit form, least significant digit first.
// Zero is the empty digit sequence; otherwise the last digit is nonzero.
struct DigitForm {
    std::uint64_t base = 2;
    std::vector<std::uint32_t> digits;

    mpz_class value() const;
    std::size_t length() const { return digits.size(); }
    bool operator==(const DigitForm&) const = default;
};

DigitForm to_digit_form(const mpz_class& n, std::uint64_t p);

// s_p(n): the sum of the base-p digits of n.
std::uint64_t weight(const mpz_class& n, std::uint64_t p);

// Number of carries when adding n + m in base p.
// Satisfies s_p(n+m) = s_p(n) + s_p(m) - (p-1) * carry_count_add(n, m, p).
std::uint64_t carry_count_add(const mpz_class& n, const mpz_class& m, std::uint64_t p);

// True iff the digitwise sums of all summands, taken simultaneously at every
// position, stay below p. Equivalent to s_p(sum) == sum of the s_p's.
bool is_carryfree_add(std::span<const mpz_class> summands, std::uint64_t p);
bool is_carryfree_add(std::initializer_list<mpz_class> summands, std::uint64_t p);

// True iff every convolution coefficient of the digit sequences of n and m
// is at most p-1. Equivalent to s_p(n*m) == s_p(n) * s_p(m).
bool is_carryfree_mul(const mpz_class& n, const mpz_class& m, std::uint64_t p);

// Reverses the base-p digits of n >= 1. An involution on integers whose last
// digit is nonzero.
mpz_class digit_reverse(const mpz_class& n, std::uint64_t p);

}  // namespace asnp
