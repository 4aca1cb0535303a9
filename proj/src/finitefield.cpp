#include "asnp/finitefield.hpp"

#include <algorithm>
#include <stdexcept>

#include "asnp/padic.hpp"

namespace asnp {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low-to-high over F_p

std::uint64_t modpow_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod_p(std::uint64_t c, std::uint64_t p) { return modpow_u(c, p - 2, p); }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> buf(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            buf[i + j] = (buf[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    std::size_t deg_f = f.size() - 1;
    std::uint64_t lead_inv = inv_mod_p(f.back(), p);
    for (std::size_t t = buf.size(); t-- > deg_f;) {
        std::uint64_t c = buf[t] % p;
        if (!c) continue;
        std::uint64_t factor = c * lead_inv % p;
        for (std::size_t j = 0; j <= deg_f; ++j) {
            std::uint64_t sub = factor * f[j] % p;
            buf[t - deg_f + j] = (buf[t - deg_f + j] + p - sub) % p;
        }
    }
    Poly out(buf.begin(), buf.begin() + std::min<std::size_t>(buf.size(), deg_f));
    trim(out);
    return out;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    std::size_t deg_f = f.size() - 1;
    if (a.size() <= deg_f) return a;
    std::uint64_t lead_inv = inv_mod_p(f.back(), p);
    for (std::size_t t = a.size(); t-- > deg_f;) {
        std::uint64_t c = a[t] % p;
        if (!c) continue;
        std::uint64_t factor = c * lead_inv % p;
        for (std::size_t j = 0; j <= deg_f; ++j) {
            std::uint64_t sub = factor * f[j] % p;
            a[t - deg_f + j] = static_cast<std::uint32_t>((a[t - deg_f + j] + p - sub) % p);
        }
    }
    a.resize(deg_f);
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_irreducible_over_prime(std::span<const std::uint32_t> poly, std::uint64_t p) {
    require_prime(p);
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;  // constants are not irreducible here
    std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m == 1) return true;
    // x^(p^m) == x mod f, and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m.
    Poly x{0, 1};
    Poly t = x;
    std::vector<Poly> frob_powers;  // t after i applications of Frobenius
    for (std::uint32_t i = 0; i < m; ++i) {
        t = poly_pow_mod(t, p, f, p);
        frob_powers.push_back(t);
    }
    if (t != poly_mod(x, f, p)) return false;
    for (std::uint64_t r : prime_factors(m)) {
        Poly diff = frob_powers[m / r - 1];
        // diff - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t m) {
    require_prime(p);
    if (m < 1 || m > FieldContext::kMaxDegree) {
        throw std::invalid_argument("extension degree out of range");
    }
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(m + 1, 0);
        std::uint64_t rest = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[m] = 1;
        if (is_irreducible_over_prime(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldContext::FieldContext(std::uint64_t p, std::uint32_t m)
    : FieldContext(p, m, smallest_irreducible(p, m)) {}

FieldContext::FieldContext(std::uint64_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    require_prime(p);
    if (m < 1 || m > kMaxDegree) throw std::invalid_argument("extension degree out of range");
    if (modulus_.size() != m + 1 || modulus_.back() != 1) {
        throw std::invalid_argument("modulus must be monic of degree m");
    }
    for (std::uint32_t c : modulus_) {
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible_over_prime(modulus_, p)) {
        throw std::invalid_argument("modulus is not irreducible over F_p");
    }
    q_ = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q_ > (1ull << 30) / p) throw std::invalid_argument("field too large (size > 2^30)");
        q_ *= p;
    }
    init();
}

void FieldContext::init() {
    if (p_ == 2) {
        modulus_mask_ = 0;
        for (std::uint32_t i = 0; i <= m_; ++i) {
            if (modulus_[i]) modulus_mask_ |= 1ull << i;
        }
    }
    basis_trace_.assign(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        Elem b = static_cast<Elem>(1);
        // b = x^i as a code
        std::uint64_t code = 1;
        for (std::uint32_t t = 0; t < i; ++t) code *= p_;
        b = static_cast<Elem>(code);
        Elem acc = 0;
        Elem z = b;
        for (std::uint32_t j = 0; j < m_; ++j) {
            acc = add(acc, z);
            z = frobenius(z);
        }
        if (acc >= p_) throw std::logic_error("trace of a basis element left the prime field");
        basis_trace_[i] = static_cast<std::uint32_t>(acc);
        if (p_ == 2 && acc) trace_mask_ |= 1ull << i;
    }
}

FieldContext::Elem FieldContext::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > m_) throw std::invalid_argument("too many coefficients");
    std::uint64_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
        code = code * p_ + coeffs[i];
    }
    return static_cast<Elem>(code);
}

std::vector<std::uint32_t> FieldContext::coeffs(Elem e) const {
    std::vector<std::uint32_t> out(m_);
    decode(e, out.data());
    return out;
}

void FieldContext::decode(Elem e, std::uint32_t* digits) const {
    std::uint64_t rest = e;
    for (std::uint32_t i = 0; i < m_; ++i) {
        digits[i] = static_cast<std::uint32_t>(rest % p_);
        rest /= p_;
    }
}

FieldContext::Elem FieldContext::encode(const std::uint32_t* digits) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = m_; i-- > 0;) code = code * p_ + digits[i];
    return static_cast<Elem>(code);
}

FieldContext::Elem FieldContext::add(Elem x, Elem y) const {
    if (p_ == 2) return x ^ y;
    std::uint32_t a[kMaxDegree], b[kMaxDegree], c[kMaxDegree];
    decode(x, a);
    decode(y, b);
    add_digits(a, b, c);
    return encode(c);
}

void FieldContext::add_digits(const std::uint32_t* x, const std::uint32_t* y,
                              std::uint32_t* out) const {
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t s = x[i] + y[i];
        out[i] = s >= p_ ? s - static_cast<std::uint32_t>(p_) : s;
    }
}

FieldContext::Elem FieldContext::sub(Elem x, Elem y) const { return add(x, neg(y)); }

FieldContext::Elem FieldContext::neg(Elem x) const {
    if (p_ == 2) return x;
    std::uint32_t a[kMaxDegree], c[kMaxDegree];
    decode(x, a);
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = a[i] == 0 ? 0 : static_cast<std::uint32_t>(p_) - a[i];
    }
    return encode(c);
}

FieldContext::Elem FieldContext::mul(Elem x, Elem y) const {
    if (p_ == 2) {
        std::uint64_t prod = 0;
        std::uint64_t b = y;
        for (std::uint64_t a = x; a; a >>= 1, b <<= 1) {
            if (a & 1) prod ^= b;
        }
        for (std::uint32_t t = 2 * m_ - 1; t >= m_ && t < 64; --t) {
            if (prod >> t & 1) prod ^= modulus_mask_ << (t - m_);
        }
        return static_cast<Elem>(prod);
    }
    std::uint32_t a[kMaxDegree], b[kMaxDegree], c[kMaxDegree];
    decode(x, a);
    decode(y, b);
    mul_digits(a, b, c);
    return encode(c);
}

void FieldContext::mul_digits(const std::uint32_t* x, const std::uint32_t* y,
                              std::uint32_t* out) const {
    std::uint64_t buf[2 * kMaxDegree] = {0};
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (!x[i]) continue;
        std::uint64_t xi = x[i];
        for (std::uint32_t j = 0; j < m_; ++j) buf[i + j] += xi * y[j];
    }
    for (std::uint32_t t = 2 * m_ - 2; t >= m_ && t < 2 * kMaxDegree; --t) {
        std::uint64_t c = buf[t] % p_;
        if (!c) continue;
        std::uint64_t factor = p_ - c;
        for (std::uint32_t j = 0; j <= m_; ++j) buf[t - m_ + j] += factor * modulus_[j];
    }
    for (std::uint32_t i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(buf[i] % p_);
}

FieldContext::Elem FieldContext::pow(Elem x, std::uint64_t e) const {
    Elem r = one();
    Elem b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldContext::Elem FieldContext::inverse(Elem x) const {
    if (x == 0) throw std::invalid_argument("zero has no inverse");
    return pow(x, q_ - 2);
}

std::uint32_t FieldContext::trace_to_prime(Elem z) const {
    if (p_ == 2) {
        return static_cast<std::uint32_t>(__builtin_popcountll(z & trace_mask_) & 1);
    }
    std::uint32_t d[kMaxDegree];
    decode(z, d);
    return trace_digits(d);
}

std::uint32_t FieldContext::trace_digits(const std::uint32_t* x) const {
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        acc += static_cast<std::uint64_t>(x[i]) * basis_trace_[i];
    }
    return static_cast<std::uint32_t>(acc % p_);
}

std::vector<FieldContext::Elem> FieldContext::enumerate() const {
    if (q_ > (1u << 22)) throw std::invalid_argument("field too large to materialize");
    std::vector<Elem> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::optional<FieldContext::Elem> FieldContext::find_root(
    std::span<const std::uint32_t> poly_over_prime) const {
    for (std::uint64_t code = 0; code < q_; ++code) {
        Elem z = static_cast<Elem>(code);
        Elem acc = 0;
        for (std::size_t i = poly_over_prime.size(); i-- > 0;) {
            acc = add(mul(acc, z), from_int(poly_over_prime[i]));
        }
        if (acc == 0) return z;
    }
    return std::nullopt;
}

FieldContext make_field(std::uint64_t p, std::uint32_t m) { return FieldContext(p, m); }

FieldContext::Elem evaluate_poly(const FieldContext& ctx,
                                 const std::map<std::uint64_t, FieldContext::Elem>& coeffs,
                                 FieldContext::Elem x) {
    FieldContext::Elem acc = 0;
    std::uint64_t cur_exp = 0;
    FieldContext::Elem cur_pow = ctx.one();
    for (const auto& [e, c] : coeffs) {
        if (e < 1) throw std::invalid_argument("exponents must be at least 1");
        cur_pow = ctx.mul(cur_pow, ctx.pow(x, e - cur_exp));
        cur_exp = e;
        acc = ctx.add(acc, ctx.mul(c, cur_pow));
    }
    return acc;
}

FieldEmbedding make_embedding(const FieldContext& small, const FieldContext& big) {
    if (small.p() != big.p()) throw std::invalid_argument("fields have different characteristic");
    if (big.degree() % small.degree() != 0) {
        throw std::invalid_argument("subfield degree must divide the big field degree");
    }
    std::optional<FieldContext::Elem> root = big.find_root(small.modulus());
    if (!root) throw std::logic_error("subfield modulus has no root in the big field");
    FieldEmbedding emb;
    emb.small = &small;
    emb.big = &big;
    emb.image.resize(small.size());
    std::vector<FieldContext::Elem> root_pow(small.degree());
    FieldContext::Elem r = big.one();
    for (std::uint32_t i = 0; i < small.degree(); ++i) {
        root_pow[i] = r;
        r = big.mul(r, *root);
    }
    for (std::uint64_t code = 0; code < small.size(); ++code) {
        std::vector<std::uint32_t> cs = small.coeffs(static_cast<FieldContext::Elem>(code));
        FieldContext::Elem acc = 0;
        for (std::uint32_t i = 0; i < small.degree(); ++i) {
            if (!cs[i]) continue;
            acc = big.add(acc, big.mul(big.from_int(cs[i]), root_pow[i]));
        }
        emb.image[code] = acc;
    }
    return emb;
}

}  // namespace asnp
