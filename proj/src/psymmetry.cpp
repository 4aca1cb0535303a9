#include "asnp/psymmetry.hpp"

#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

#include "asnp/padic.hpp"

namespace asnp {

namespace {

mpz_class pow_z(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

std::uint64_t digit_length(std::uint64_t n, std::uint64_t p) {
    std::uint64_t len = 0;
    while (n > 0) {
        ++len;
        n /= p;
    }
    return len;
}

void require_candidate(std::uint64_t nu, std::uint64_t p) {
    require_prime(p);
    if (nu <= 1) throw std::invalid_argument("nu must exceed 1");
    if (nu % p == 0) throw std::invalid_argument("nu must be coprime to p");
    if (nu >= (1ull << 40)) throw std::invalid_argument("nu too large for the search");
}

}  // namespace

bool check_certificate(const SymmetryCertificate& cert, std::string& why) {
    why.clear();
    if (!is_prime(cert.p)) { why = "p is not prime"; return false; }
    if (cert.nu <= 1) { why = "nu must exceed 1"; return false; }
    if (cert.nu % cert.p == 0) { why = "nu is divisible by p"; return false; }
    if (cert.w == 0 || cert.k == 0 || cert.ell == 0) { why = "w, k, ell must be positive"; return false; }
    mpz_class pk = pow_z(cert.p, cert.k);
    if (!(mpz_class(cert.ell) < pk)) { why = "ell must be below p^k"; return false; }
    mpz_class lhs = mpz_class(cert.nu) * cert.w;
    mpz_class rhs = (pk - 1) * cert.ell;
    if (lhs != rhs) { why = "nu*w != (p^k-1)*ell"; return false; }
    if (!is_carryfree_mul(cert.nu, cert.w, cert.p)) { why = "product nu*w is not carry-free"; return false; }
    if (cert.shift_factor != digit_length(cert.w, cert.p) - 1) {
        why = "shift factor does not match the leading digit index of w";
        return false;
    }
    if (cert.minimal) {
        if (cert.w % cert.p == 0) { why = "minimal witness must be coprime to p"; return false; }
        if (cert.k < cert.shift_factor + 1) { why = "minimal certificate needs k >= e+1"; return false; }
        mpz_class shifted = mpz_class(cert.ell) * pow_z(cert.p, cert.k - cert.shift_factor - 1);
        if (!(shifted < cert.nu)) { why = "minimal certificate needs ell*p^(k-e-1) < nu"; return false; }
    }
    return true;
}

bool check_certificate(const SymmetryCertificate& cert) {
    std::string why;
    return check_certificate(cert, why);
}

std::uint64_t default_k_max(std::uint64_t nu, std::uint64_t p) {
    return 2 * digit_length(nu, p) + 4;
}

DetectResult detect(std::uint64_t nu, std::uint64_t p, std::uint64_t k_max) {
    require_candidate(nu, p);
    if (k_max == 0) k_max = default_k_max(nu, p);
    if (k_max > 62 || pow_z(p, k_max) > mpz_class(1) << 62) {
        throw std::invalid_argument("k_max too large: p^k_max must fit in 62 bits");
    }
    std::optional<SymmetryCertificate> best;
    std::uint64_t pk = 1;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        pk *= p;
        std::uint64_t base = pk - 1;  // p^k - 1
        // Any factorization reduces, at the same k, to one with w < p^k,
        // which forces ell = nu*w/(p^k-1) <= 2*nu. Divisibility confines ell
        // to multiples of nu / gcd(nu, p^k-1).
        std::uint64_t step = nu / std::gcd(nu, base);
        std::uint64_t ell_cap = std::min<std::uint64_t>(base, 2 * nu);
        for (std::uint64_t ell = step; ell <= ell_cap; ell += step) {
            mpz_class prod = mpz_class(base) * ell;
            mpz_class wq = prod / nu;
            if (wq * nu != prod) continue;  // defensive; step should guarantee this
            if (!wq.fits_ulong_p()) continue;
            std::uint64_t w = wq.get_ui();
            if (best && w >= best->w) continue;
            if (!is_carryfree_mul(nu, w, p)) continue;
            SymmetryCertificate cert;
            cert.nu = nu;
            cert.p = p;
            cert.w = w;
            cert.k = k;
            cert.ell = ell;
            cert.shift_factor = digit_length(w, p) - 1;
            cert.minimal = false;
            best = cert;
        }
    }
    if (!best) return NotFoundWithin{k_max};
    // Any factorization with k > k_max has nu*w >= p^(k_max+1) - 1.
    best->minimal = mpz_class(nu) * best->w < pow_z(p, k_max + 1) - 1;
    std::string why;
    if (!check_certificate(*best, why)) {
        throw std::logic_error("detect produced an invalid certificate: " + why);
    }
    return *best;
}

std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>
minimal_factorization(std::uint64_t nu, std::uint64_t p, std::uint64_t k_max) {
    DetectResult r = detect(nu, p, k_max);
    if (const auto* cert = std::get_if<SymmetryCertificate>(&r)) {
        return std::make_tuple(cert->w, cert->k, cert->ell);
    }
    return std::nullopt;
}

std::vector<std::uint64_t> census(std::uint64_t p, std::uint32_t digit_count,
                                  std::uint64_t k_max) {
    require_prime(p);
    if (digit_count < 1) throw std::invalid_argument("digit_count must be positive");
    mpz_class hi_z = pow_z(p, digit_count);
    if (!hi_z.fits_ulong_p()) throw std::invalid_argument("digit_count too large");
    std::uint64_t hi = hi_z.get_ui();
    std::uint64_t lo = hi / p;  // p^(digit_count-1)
    std::vector<std::uint64_t> members;
    for (std::uint64_t nu = std::max<std::uint64_t>(lo, 2); nu < hi; ++nu) {
        if (nu % p == 0) continue;
        std::uint64_t bound = k_max == 0 ? default_k_max(nu, p) : k_max;
        if (std::holds_alternative<SymmetryCertificate>(detect(nu, p, bound))) {
            members.push_back(nu);
        }
    }
    return members;
}

std::uint64_t family_geometric(std::uint64_t p, std::uint32_t n, std::uint32_t m) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n == 1) throw std::invalid_argument("n = 1 gives nu = 1, which is excluded");
    mpz_class nu = 0;
    for (std::uint32_t t = 0; t < n; ++t) {
        nu += pow_z(p, static_cast<std::uint64_t>(t) * (m + 1));
    }
    if (!nu.fits_ulong_p()) throw std::overflow_error("family member exceeds 64 bits");
    return nu.get_ui();
}

std::uint64_t family_divisor(std::uint64_t p, std::uint32_t b, std::uint64_t w) {
    require_prime(p);
    if (b < 1) throw std::invalid_argument("b must be positive");
    if (w == 0 || (p - 1) % w != 0) throw std::invalid_argument("w must divide p - 1");
    mpz_class nu = (pow_z(p, b) - 1) / w;
    if (!nu.fits_ulong_p()) throw std::overflow_error("family member exceeds 64 bits");
    return nu.get_ui();
}

SymmetryCertificate family_replicate(const SymmetryCertificate& cert, std::uint32_t b) {
    std::string why;
    if (b < 1) throw std::invalid_argument("b must be positive");
    if (!check_certificate(cert, why)) {
        throw std::invalid_argument("invalid certificate: " + why);
    }
    mpz_class replicator = 0;
    for (std::uint32_t t = 0; t < b; ++t) {
        replicator += pow_z(cert.p, static_cast<std::uint64_t>(t) * cert.k);
    }
    mpz_class nu2 = mpz_class(cert.nu) * replicator;
    if (!nu2.fits_ulong_p()) throw std::overflow_error("replicated nu exceeds 64 bits");
    SymmetryCertificate out = cert;
    out.nu = nu2.get_ui();
    out.k = cert.k * b;
    out.minimal = false;
    if (!check_certificate(out, why)) {
        throw std::logic_error("replicated certificate failed verification: " + why);
    }
    return out;
}

}  // namespace asnp
