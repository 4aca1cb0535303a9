#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace asnp {

bool is_irreducible_over_prime(std::span<const std::uint32_t> poly, std::uint64_t p);

// Lexicographically smallest monic irreducible of degree m over F_p,
// coefficients low-to-high including the leading 1.
std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t m);

// Exact arithmetic in F_{p^m} = F_p[x]/(modulus). Elements are coefficient
// sequences of length m over F_p, canonically encoded as the integer
// code = sum c_i p^i. Codes 0..p^m-1 enumerate the field in
// coefficient-lexicographic order.
class FieldContext {
public:
    using Elem = std::uint32_t;
    static constexpr std::uint32_t kMaxDegree = 30;

    FieldContext(std::uint64_t p, std::uint32_t m);
    FieldContext(std::uint64_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    std::uint64_t p() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t size() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::uint64_t v) const { return static_cast<Elem>(v % p_); }
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem e) const;

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem pow(Elem x, std::uint64_t e) const;
    Elem inverse(Elem x) const;
    Elem frobenius(Elem x) const { return pow(x, p_); }

    // z + z^p + ... + z^(p^(m-1)), landing in [0, p).
    std::uint32_t trace_to_prime(Elem z) const;

    // All field elements in code order. Guarded to small fields; bulk loops
    // should iterate codes directly.
    std::vector<Elem> enumerate() const;

    // Smallest root of a polynomial with prime-field coefficients, if any.
    std::optional<Elem> find_root(std::span<const std::uint32_t> poly_over_prime) const;

    // Digit-array kernels for bulk enumeration loops. Arrays have length
    // degree(); digits lie in [0, p).
    void decode(Elem e, std::uint32_t* digits) const;
    Elem encode(const std::uint32_t* digits) const;
    void mul_digits(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    void add_digits(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    std::uint32_t trace_digits(const std::uint32_t* x) const;

    // p = 2 only: modulus as a bitmask including the leading bit, and the
    // trace functional as a bitmask.
    std::uint64_t modulus_mask() const { return modulus_mask_; }
    std::uint64_t trace_mask() const { return trace_mask_; }

    bool operator==(const FieldContext& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    void init();

    std::uint64_t p_ = 2;
    std::uint32_t m_ = 1;
    std::uint64_t q_ = 2;
    std::vector<std::uint32_t> modulus_;      // length m+1, monic
    std::vector<std::uint32_t> basis_trace_;  // trace of x^i, i < m
    std::uint64_t modulus_mask_ = 0;          // p == 2 only
    std::uint64_t trace_mask_ = 0;            // p == 2 only
};

// make_field(p, m): the deterministic context with the canonical modulus.
FieldContext make_field(std::uint64_t p, std::uint32_t m);

// Evaluates sum coeff_e * x^e for exponents e >= 1.
FieldContext::Elem evaluate_poly(const FieldContext& ctx,
                                 const std::map<std::uint64_t, FieldContext::Elem>& coeffs,
                                 FieldContext::Elem x);

// Embedding of a subfield context into a larger one over the same prime,
// realized through a root of the subfield modulus. Tables are precomputed
// for every subfield element.
struct FieldEmbedding {
    const FieldContext* small = nullptr;
    const FieldContext* big = nullptr;
    std::vector<FieldContext::Elem> image;  // indexed by subfield code

    FieldContext::Elem map(FieldContext::Elem e) const { return image[e]; }
};

FieldEmbedding make_embedding(const FieldContext& small, const FieldContext& big);

}  // namespace asnp
