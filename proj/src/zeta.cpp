#include "asnp/zeta.hpp"

#include <algorithm>
#include <thread>

#include "asnp/padic.hpp"

namespace asnp {

namespace {

mpz_class pow_z(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

// Straight-line powering schedule shared by every element: computes all the
// required exponents from slot 0 (which holds x) with memoized
// square-and-multiply steps.
struct PowerProgram {
    struct Op {
        std::uint32_t dst;
        std::uint32_t src_a;
        std::uint32_t src_b;  // dst = a * b
    };
    std::vector<Op> ops;
    std::vector<std::uint32_t> term_slots;  // slot of x^e per requested exponent
    std::uint32_t slot_count = 1;

    PowerProgram() = default;

    explicit PowerProgram(const std::vector<std::uint64_t>& exponents) {
        std::map<std::uint64_t, std::uint32_t> slot_of{{1, 0}};
        for (std::uint64_t e : exponents) term_slots.push_back(build(e, slot_of));
        slot_count = next_slot_;
    }

private:
    std::uint32_t next_slot_ = 1;

    std::uint32_t build(std::uint64_t e, std::map<std::uint64_t, std::uint32_t>& slot_of) {
        auto it = slot_of.find(e);
        if (it != slot_of.end()) return it->second;
        std::uint32_t a, b;
        if (e % 2 == 0) {
            a = b = build(e / 2, slot_of);
        } else {
            a = build(e - 1, slot_of);
            b = 0;  // x
        }
        std::uint32_t dst = next_slot_++;
        ops.push_back({dst, a, b});
        slot_of[e] = dst;
        return dst;
    }
};

struct CountJob {
    const FieldContext* field;
    std::vector<std::uint64_t> exponents;
    std::vector<FieldContext::Elem> coefficients;  // embedded into *field
    PowerProgram program;

    CountJob(const FieldContext& f, const std::map<std::uint64_t, FieldContext::Elem>& terms)
        : field(&f) {
        for (const auto& [e, c] : terms) {
            exponents.push_back(e);
            coefficients.push_back(c);
        }
        program = PowerProgram(exponents);
    }

    std::uint64_t zero_trace_in_range(std::uint64_t begin, std::uint64_t end) const {
        return field->p() == 2 ? range_p2(begin, end) : range_generic(begin, end);
    }

private:
    std::uint64_t range_p2(std::uint64_t begin, std::uint64_t end) const {
        const FieldContext& F = *field;
        std::vector<FieldContext::Elem> slot(program.slot_count);
        std::uint64_t hits = 0;
        for (std::uint64_t code = begin; code < end; ++code) {
            slot[0] = static_cast<FieldContext::Elem>(code);
            for (const auto& op : program.ops) slot[op.dst] = F.mul(slot[op.src_a], slot[op.src_b]);
            FieldContext::Elem v = 0;
            for (std::size_t t = 0; t < coefficients.size(); ++t) {
                v ^= F.mul(coefficients[t], slot[program.term_slots[t]]);
            }
            hits += F.trace_to_prime(v) == 0;
        }
        return hits;
    }

    std::uint64_t range_generic(std::uint64_t begin, std::uint64_t end) const {
        const FieldContext& F = *field;
        const std::uint32_t m = F.degree();
        std::vector<std::uint32_t> slots(static_cast<std::size_t>(program.slot_count) * m);
        std::vector<std::uint32_t> coeff_digits(coefficients.size() * m);
        for (std::size_t t = 0; t < coefficients.size(); ++t) {
            F.decode(coefficients[t], &coeff_digits[t * m]);
        }
        std::vector<std::uint32_t> x(m), term(m), acc(m);
        F.decode(static_cast<FieldContext::Elem>(begin), x.data());
        const std::uint32_t p = static_cast<std::uint32_t>(F.p());
        std::uint64_t hits = 0;
        for (std::uint64_t code = begin; code < end; ++code) {
            std::copy(x.begin(), x.end(), slots.begin());
            for (const auto& op : program.ops) {
                F.mul_digits(&slots[op.src_a * std::size_t(m)], &slots[op.src_b * std::size_t(m)],
                             &slots[op.dst * std::size_t(m)]);
            }
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t t = 0; t < coefficients.size(); ++t) {
                F.mul_digits(&coeff_digits[t * m], &slots[program.term_slots[t] * std::size_t(m)],
                             term.data());
                F.add_digits(acc.data(), term.data(), acc.data());
            }
            hits += F.trace_digits(acc.data()) == 0;
            // odometer step to the next code
            for (std::uint32_t i = 0; i < m; ++i) {
                if (++x[i] < p) break;
                x[i] = 0;
            }
        }
        return hits;
    }
};

std::uint64_t run_count(const CountJob& job, std::uint64_t q, std::uint32_t threads) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<std::uint32_t>(std::min<std::uint64_t>(threads, q));
    if (threads <= 1) return job.zero_trace_in_range(0, q);
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = q / threads;
    for (std::uint32_t t = 0; t < threads; ++t) {
        std::uint64_t begin = t * chunk;
        std::uint64_t end = t + 1 == threads ? q : begin + chunk;
        pool.emplace_back([&, t, begin, end] { partial[t] = job.zero_trace_in_range(begin, end); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (std::uint64_t v : partial) total += v;
    return total;
}

void check_weil_bound(const CurveSpec& spec, const PointCountRecord& rec) {
    mpz_class qm = rec.field_size;
    mpz_class diff = mpz_class(rec.points) - (qm + 1);
    mpz_class g = spec.genus();
    if (diff * diff > 4 * g * g * qm) {
        throw std::logic_error("point count violates the Weil bound (counting bug)");
    }
}

PointCountRecord count_with_field(std::uint64_t p, std::uint32_t a, const FieldContext& base,
                                  const std::map<std::uint64_t, FieldContext::Elem>& coeffs,
                                  std::uint32_t m, const CountOptions& opts) {
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    std::uint32_t big_degree = a * m;
    mpz_class size = pow_z(p, big_degree);
    if (size > opts.field_size_guard) {
        throw FieldSizeGuardError(size.fits_ulong_p() ? size.get_ui() : UINT64_MAX,
                                  opts.field_size_guard);
    }
    FieldContext big = big_degree == base.degree()
                           ? base
                           : FieldContext(p, big_degree);
    std::map<std::uint64_t, FieldContext::Elem> embedded;
    if (big_degree == base.degree()) {
        embedded = coeffs;
    } else if (a == 1) {
        for (const auto& [e, c] : coeffs) embedded[e] = big.from_int(c);
    } else {
        FieldEmbedding emb = make_embedding(base, big);
        for (const auto& [e, c] : coeffs) embedded[e] = emb.map(c);
    }
    CountJob job(big, embedded);
    PointCountRecord rec;
    rec.m = m;
    rec.field_size = size.get_ui();
    rec.zero_trace_count = run_count(job, big.size(), opts.threads);
    rec.points = p * rec.zero_trace_count + 1;
    return rec;
}

}  // namespace

PointCountRecord count_points(const CurveSpec& spec, std::uint32_t m, const CountOptions& opts) {
    PointCountRecord rec = count_with_field(spec.p, spec.a, spec.base, spec.coefficients, m, opts);
    check_weil_bound(spec, rec);
    if (rec.points % spec.p != 1) {
        throw std::logic_error("point count is not 1 mod p (counting bug)");
    }
    return rec;
}

PointCountRecord count_points_raw(std::uint64_t p, std::uint32_t a, const FieldContext& base,
                                  const std::map<std::uint64_t, FieldContext::Elem>& coeffs,
                                  std::uint32_t m, const CountOptions& opts) {
    std::map<std::uint64_t, FieldContext::Elem> cleaned;
    for (const auto& [e, c] : coeffs) {
        if (e == 0) throw std::invalid_argument("drop the constant term before counting");
        if (c != 0) cleaned[e] = c;
    }
    if (cleaned.empty()) throw std::invalid_argument("the polynomial must be nonconstant");
    return count_with_field(p, a, base, cleaned, m, opts);
}

ZetaNumerator numerator_from_counts(const CurveSpec& spec,
                                    std::span<const PointCountRecord> counts) {
    std::uint64_t g = spec.genus();
    ZetaNumerator num;
    num.p = spec.p;
    num.a = spec.a;
    num.q = 1;
    for (std::uint32_t i = 0; i < spec.a; ++i) num.q *= spec.p;
    num.genus = static_cast<std::uint32_t>(g);
    num.coefficients.assign(2 * g + 1, 0);
    num.coefficients[0] = 1;
    if (g == 0) return num;
    if (counts.size() < g) {
        throw std::invalid_argument("need point counts for every m = 1..genus");
    }
    // power sums ps_m = q^m + 1 - N_m
    std::vector<mpz_class> ps(g + 1);
    for (std::uint32_t m = 1; m <= g; ++m) {
        const PointCountRecord* rec = nullptr;
        for (const auto& r : counts) {
            if (r.m == m) rec = &r;
        }
        if (!rec) throw std::invalid_argument("missing point count for m=" + std::to_string(m));
        ps[m] = pow_z(num.q, m) + 1 - rec->points;
    }
    // Newton's identity: m e_m = sum_{j=1..m} (-1)^(j-1) e_{m-j} ps_j
    std::vector<mpz_class> e(g + 1);
    e[0] = 1;
    for (std::uint32_t m = 1; m <= g; ++m) {
        mpz_class acc = 0;
        for (std::uint32_t j = 1; j <= m; ++j) {
            mpz_class term = e[m - j] * ps[j];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), mpz_class(m).get_mpz_t());
        if (rem != 0) {
            throw std::logic_error("Newton identity division is not exact (counting bug)");
        }
        e[m] = quot;
        num.coefficients[m] = m % 2 == 0 ? e[m] : -e[m];
    }
    // functional equation c_{2g-i} = q^{g-i} c_i
    for (std::uint64_t i = 0; i < g; ++i) {
        num.coefficients[2 * g - i] = pow_z(num.q, g - i) * num.coefficients[i];
    }
    return num;
}

std::vector<mpz_class> power_sums(const ZetaNumerator& num, std::uint32_t up_to) {
    // From P'(s) = -P(s) * sum ps_{m+1} s^m:
    // ps_m = -(m c_m + sum_{j=1..m-1} c_j ps_{m-j})
    std::vector<mpz_class> ps(up_to + 1);
    for (std::uint32_t m = 1; m <= up_to; ++m) {
        mpz_class acc = 0;
        if (m < num.coefficients.size()) acc = mpz_class(m) * num.coefficients[m];
        for (std::uint32_t j = 1; j < m; ++j) {
            if (j < num.coefficients.size()) acc += num.coefficients[j] * ps[m - j];
        }
        ps[m] = -acc;
    }
    return ps;
}

std::vector<mpz_class> predicted_counts(const ZetaNumerator& num, std::uint32_t up_to) {
    std::vector<mpz_class> ps = power_sums(num, up_to);
    std::vector<mpz_class> out(up_to + 1);
    for (std::uint32_t m = 1; m <= up_to; ++m) {
        out[m] = pow_z(num.q, m) + 1 - ps[m];
    }
    return out;
}

namespace {

// v_p as an exact count; coefficient must be nonzero.
unsigned long valuation(const mpz_class& c, std::uint64_t p) {
    mpz_class rest;
    return mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
}

mpq_class make_q(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

NewtonPolygonData newton_polygon(const ZetaNumerator& num) {
    NewtonPolygonData poly;
    poly.genus = num.genus;
    for (std::uint64_t i = 0; i < num.coefficients.size(); ++i) {
        if (num.coefficients[i] == 0) continue;
        mpq_class v(static_cast<unsigned long>(valuation(num.coefficients[i], num.p)),
                    static_cast<unsigned long>(num.a));
        v.canonicalize();
        poly.points.emplace_back(i, v);
    }
    // lower convex hull, monotone chain over points sorted by abscissa
    for (const auto& pt : poly.points) {
        while (poly.vertices.size() >= 2) {
            const auto& [x1, y1] = poly.vertices[poly.vertices.size() - 2];
            const auto& [x2, y2] = poly.vertices.back();
            // drop the middle point unless it lies strictly below the
            // segment: pop when (x2-x1)(y3-y1) <= (y2-y1)(x3-x1)
            mpq_class lhs = mpq_class(static_cast<unsigned long>(x2 - x1)) * (pt.second - y1);
            mpq_class rhs = (y2 - y1) * mpq_class(static_cast<unsigned long>(pt.first - x1));
            if (lhs <= rhs) {
                poly.vertices.pop_back();
            } else {
                break;
            }
        }
        poly.vertices.push_back(pt);
    }
    if (num.genus > 0) {
        if (poly.vertices.front() != std::make_pair(std::uint64_t{0}, mpq_class(0))) {
            throw std::logic_error("polygon must start at (0,0)");
        }
        if (poly.vertices.back().first != 2 * static_cast<std::uint64_t>(num.genus) ||
            poly.vertices.back().second != mpq_class(static_cast<unsigned long>(num.genus))) {
            throw std::logic_error("polygon must end at (2g, g)");
        }
    }
    for (std::size_t k = 1; k < poly.vertices.size(); ++k) {
        const auto& [x1, y1] = poly.vertices[k - 1];
        const auto& [x2, y2] = poly.vertices[k];
        mpq_class slope = (y2 - y1) / mpq_class(static_cast<unsigned long>(x2 - x1));
        slope.canonicalize();
        poly.slopes.emplace_back(slope, x2 - x1);
        if (slope < 0 || slope > 1) throw std::logic_error("slope outside [0, 1]");
    }
    return poly;
}

std::pair<mpq_class, std::uint64_t> first_slope(const NewtonPolygonData& polygon) {
    if (polygon.slopes.empty()) throw std::invalid_argument("polygon of a genus-0 curve has no slopes");
    return polygon.slopes.front();
}

bool is_supersingular(const NewtonPolygonData& polygon) {
    if (polygon.genus == 0) throw std::invalid_argument("supersingularity needs genus >= 1");
    return polygon.slopes.size() == 1 && polygon.slopes[0].first == make_q(1, 2);
}

}  // namespace asnp
