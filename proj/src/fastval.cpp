#include "linrec/fastval.hpp"

namespace linrec {

ModPowContext::ModPowContext(RecurrenceSpec spec) : spec_(std::move(spec)) {
    const Ring& r = spec_.ring();
    const unsigned n = spec_.order();
    fold_.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        fold_.push_back(r.neg(spec_.char_poly().coeff(static_cast<int>(i))));
}

// Dense residues of fixed length n; schoolbook product then fold the top
// coefficients down through x^n = fold_.
std::vector<RingElement> ModPowContext::mul_mod(const std::vector<RingElement>& a,
                                                const std::vector<RingElement>& b) const {
    const Ring& r = spec_.ring();
    const std::size_t n = fold_.size();
    std::vector<RingElement> prod(2 * n - 1, r.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (r.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
            prod[i + j] = r.add(prod[i + j], r.mul(a[i], b[j]));
    }
    for (std::size_t k = prod.size(); k-- > n;) {
        if (r.is_zero(prod[k])) continue;
        for (std::size_t j = 0; j < n; ++j)
            prod[k - n + j] = r.add(prod[k - n + j], r.mul(prod[k], fold_[j]));
        prod[k] = r.zero();
    }
    prod.resize(n);
    return prod;
}

Poly ModPowContext::pow_x_mod(const mpz_class& N) const {
    if (N < 0) fail(errc::out_of_range, "negative exponent " + N.get_str());
    const Ring& r = spec_.ring();
    const std::size_t n = fold_.size();

    std::vector<RingElement> acc(n, r.zero());
    if (n == 1) {
        // Residues are constants; x = fold_[0].
        acc[0] = r.one();
        mpz_class e = N;
        std::vector<RingElement> base(1, fold_[0]);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(acc, base);
            e >>= 1;
            if (e > 0) base = mul_mod(base, base);
        }
        return Poly(r, std::move(acc));
    }

    if (N < static_cast<long>(n)) return Poly::monomial(r, static_cast<unsigned>(N.get_ui()));

    // Top-down binary powering: square, then multiply by x (a shift plus one
    // fold step) when the bit is set.
    acc[1] = r.one(); // acc = x
    const std::size_t bits = mpz_sizeinbase(N.get_mpz_t(), 2);
    for (std::size_t bit = bits - 1; bit-- > 0;) {
        acc = mul_mod(acc, acc);
        if (mpz_tstbit(N.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            RingElement top = acc.back();
            for (std::size_t j = n - 1; j-- > 0;) acc[j + 1] = acc[j];
            acc[0] = r.zero();
            if (!r.is_zero(top))
                for (std::size_t j = 0; j < n; ++j)
                    acc[j] = r.add(acc[j], r.mul(top, fold_[j]));
        }
    }
    return Poly(r, std::move(acc));
}

Poly polymod_pow(const ModPowContext& ctx, const mpz_class& N) { return ctx.pow_x_mod(N); }

RingElement nth_term(const RecurrenceSpec& spec, const PrefixSeq& init, const mpz_class& N) {
    if (spec.ring() != init.ring())
        fail(errc::ring_mismatch, "initial terms ring differs from the recurrence ring");
    if (init.size() != spec.order())
        fail(errc::bad_init_length, "need exactly " + std::to_string(spec.order()) +
                                        " initial terms, got " + std::to_string(init.size()));
    ModPowContext ctx(spec);
    Poly residue = ctx.pow_x_mod(N);
    return pairing(init, residue);
}

} // namespace linrec
