#include "asnp/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace asnp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (p >= (1u << 20) || !is_prime(p)) {
        throw std::invalid_argument("base must be a prime below 2^20, got " + std::to_string(p));
    }
}

static void require_nonnegative(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("value must be nonnegative");
}

mpz_class DigitForm::value() const {
    mpz_class v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = v * static_cast<unsigned long>(base) + *it;
    }
    return v;
}

DigitForm to_digit_form(const mpz_class& n, std::uint64_t p) {
    require_prime(p);
    require_nonnegative(n);
    DigitForm form;
    form.base = p;
    mpz_class rest = n;
    while (rest > 0) {
        unsigned long d = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                        static_cast<unsigned long>(p));
        form.digits.push_back(static_cast<std::uint32_t>(d));
    }
    return form;
}

std::uint64_t weight(const mpz_class& n, std::uint64_t p) {
    require_prime(p);
    require_nonnegative(n);
    std::uint64_t s = 0;
    mpz_class rest = n;
    while (rest > 0) {
        s += mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    }
    return s;
}

std::uint64_t carry_count_add(const mpz_class& n, const mpz_class& m, std::uint64_t p) {
    DigitForm a = to_digit_form(n, p);
    DigitForm b = to_digit_form(m, p);
    std::size_t len = std::max(a.length(), b.length());
    std::uint64_t carries = 0;
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t s = carry;
        if (i < a.length()) s += a.digits[i];
        if (i < b.length()) s += b.digits[i];
        carry = s >= p ? 1 : 0;
        carries += carry;
    }
    return carries;
}

bool is_carryfree_add(std::span<const mpz_class> summands, std::uint64_t p) {
    require_prime(p);
    if (summands.empty()) throw std::invalid_argument("need at least one summand");
    std::vector<std::uint64_t> column_sums;
    for (const mpz_class& n : summands) {
        DigitForm f = to_digit_form(n, p);
        if (f.length() > column_sums.size()) column_sums.resize(f.length(), 0);
        for (std::size_t i = 0; i < f.length(); ++i) column_sums[i] += f.digits[i];
    }
    for (std::uint64_t s : column_sums) {
        if (s >= p) return false;
    }
    return true;
}

bool is_carryfree_add(std::initializer_list<mpz_class> summands, std::uint64_t p) {
    std::vector<mpz_class> v(summands);
    return is_carryfree_add(std::span<const mpz_class>(v), p);
}

bool is_carryfree_mul(const mpz_class& n, const mpz_class& m, std::uint64_t p) {
    DigitForm a = to_digit_form(n, p);
    DigitForm b = to_digit_form(m, p);
    if (a.digits.empty() || b.digits.empty()) return true;
    // Convolution coefficients are < 64 * p^2 < 2^62, no overflow.
    std::vector<std::uint64_t> conv(a.length() + b.length() - 1, 0);
    for (std::size_t i = 0; i < a.length(); ++i) {
        for (std::size_t j = 0; j < b.length(); ++j) {
            conv[i + j] += static_cast<std::uint64_t>(a.digits[i]) * b.digits[j];
        }
    }
    for (std::uint64_t c : conv) {
        if (c >= p) return false;
    }
    return true;
}

mpz_class digit_reverse(const mpz_class& n, std::uint64_t p) {
    if (n < 1) throw std::invalid_argument("digit_reverse needs a positive integer");
    DigitForm f = to_digit_form(n, p);
    std::reverse(f.digits.begin(), f.digits.end());
    while (!f.digits.empty() && f.digits.back() == 0) f.digits.pop_back();
    return f.value();
}

}  // namespace asnp
