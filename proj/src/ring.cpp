#include "linrec/ring.hpp"

#include <utility>

namespace linrec {

std::string RingElement::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool is_prime_trial(const mpz_class& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (mpz_class d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

const mpz_class kMaxModulus = mpz_class(1) << 31;

} // namespace

Ring Ring::prime_field(const mpz_class& p) {
    if (p >= kMaxModulus)
        fail(errc::bad_input, "prime-field modulus must be below 2^31, got " + p.get_str());
    if (!is_prime_trial(p))
        fail(errc::bad_input, "prime-field modulus must be prime, got " + p.get_str());
    return Ring(ring_kind::prime_field, p);
}

std::string Ring::describe() const {
    switch (kind_) {
        case ring_kind::integers: return "int";
        case ring_kind::rationals: return "rat";
        case ring_kind::prime_field: return "mod " + p_.get_str();
    }
    return "?";
}

RingElement Ring::reduce(mpq_class v) const {
    v.canonicalize();
    if (kind_ == ring_kind::prime_field) {
        if (v.get_den() != 1)
            fail(errc::internal_invariant_broken, "non-integral residue in prime field");
        mpz_class rem;
        mpz_fdiv_r(rem.get_mpz_t(), v.get_num().get_mpz_t(), p_.get_mpz_t());
        return RingElement(mpq_class(rem));
    }
    return RingElement(std::move(v));
}

RingElement Ring::from_int(const mpz_class& z) const { return reduce(mpq_class(z)); }

RingElement Ring::parse(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (kind_ == ring_kind::rationals) {
                mpq_class q(text);
                q.canonicalize();
                return RingElement(std::move(q));
            }
            return from_int(mpz_class(text));
        }
        std::string num_s = text.substr(0, slash);
        std::string den_s = text.substr(slash + 1);
        if (kind_ == ring_kind::integers)
            fail(errc::bad_input, "fraction '" + text + "' is not an integer");
        if (kind_ == ring_kind::rationals) {
            mpz_class den(den_s);
            if (den == 0) fail(errc::bad_input, "zero denominator in '" + text + "'");
            mpq_class q(mpz_class(num_s), den);
            q.canonicalize();
            return RingElement(std::move(q));
        }
        RingElement den = from_int(mpz_class(den_s));
        if (is_zero(den)) fail(errc::bad_input, "zero denominator in '" + text + "'");
        return mul(from_int(mpz_class(num_s)), inverse(den));
    } catch (const std::invalid_argument&) {
        fail(errc::bad_input, "cannot parse ring element '" + text + "'");
    }
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
    return reduce(a.v_ + b.v_);
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const {
    return reduce(a.v_ - b.v_);
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
    return reduce(a.v_ * b.v_);
}

RingElement Ring::neg(const RingElement& a) const { return reduce(-a.v_); }

RingElement Ring::pow(const RingElement& a, unsigned long e) const {
    RingElement acc = one();
    RingElement base = a;
    while (e != 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return acc;
}

RingElement Ring::inverse(const RingElement& a) const {
    switch (kind_) {
        case ring_kind::integers:
            fail(errc::not_a_field, "the integers have no inverses");
        case ring_kind::rationals: {
            if (a.v_ == 0) fail(errc::division_by_zero, "inverse of zero");
            return RingElement(mpq_class(1) / a.v_);
        }
        case ring_kind::prime_field: {
            if (a.v_ == 0) fail(errc::division_by_zero, "inverse of zero");
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), a.v_.get_num().get_mpz_t(), p_.get_mpz_t()) == 0)
                fail(errc::internal_invariant_broken, "non-invertible residue mod prime");
            return RingElement(mpq_class(inv));
        }
    }
    fail(errc::internal_invariant_broken, "bad ring kind");
}

RingElement Ring::div_exact(const RingElement& a, const RingElement& b) const {
    if (is_field()) return mul(a, inverse(b));
    if (b.v_ == 0) fail(errc::division_by_zero, "exact division by zero");
    mpq_class q = a.v_ / b.v_;
    if (q.get_den() != 1)
        fail(errc::internal_invariant_broken,
             "inexact division " + a.str() + " / " + b.str() + " over the integers");
    return RingElement(std::move(q));
}

bool Ring::contains(const RingElement& v) const {
    switch (kind_) {
        case ring_kind::integers: return v.value().get_den() == 1;
        case ring_kind::rationals: return true;
        case ring_kind::prime_field:
            return v.value().get_den() == 1 && v.value().get_num() >= 0 &&
                   v.value().get_num() < p_;
    }
    return false;
}

Fraction make_fraction(const Ring& r, const RingElement& num, const RingElement& den) {
    if (r.is_zero(den)) fail(errc::division_by_zero, "fraction with zero denominator");
    if (r.is_field()) return Fraction{r.mul(num, r.inverse(den)), r.one()};
    // Over Z: reduce and keep the denominator positive.
    mpq_class q = num.value() / den.value();
    Fraction f;
    f.num = r.from_int(q.get_num());
    f.den = r.from_int(q.get_den());
    return f;
}

Fraction frac_add(const Ring& r, const Fraction& a, const Fraction& b) {
    return make_fraction(r, r.add(r.mul(a.num, b.den), r.mul(b.num, a.den)),
                         r.mul(a.den, b.den));
}

Fraction frac_sub(const Ring& r, const Fraction& a, const Fraction& b) {
    return make_fraction(r, r.sub(r.mul(a.num, b.den), r.mul(b.num, a.den)),
                         r.mul(a.den, b.den));
}

Fraction frac_mul(const Ring& r, const Fraction& a, const Fraction& b) {
    return make_fraction(r, r.mul(a.num, b.num), r.mul(a.den, b.den));
}

Fraction frac_div(const Ring& r, const Fraction& a, const Fraction& b) {
    if (frac_is_zero(b)) fail(errc::division_by_zero, "fraction division by zero");
    return make_fraction(r, r.mul(a.num, b.den), r.mul(a.den, b.num));
}

bool frac_is_zero(const Fraction& a) { return a.num.value() == 0; }

std::string frac_str(const Fraction& a) {
    if (a.den.value() == 1) return a.num.str();
    return a.num.str() + "/" + a.den.str();
}

namespace {

// Fraction-free forward elimination on an n x (n+extra) matrix. Returns the
// determinant of the leading n x n block; on return m is upper triangular
// with m[k][k] holding the k-th leading principal minor (times the swap
// sign). Bareiss one-step divisions are exact in any entire ring.
RingElement bareiss_forward(const Ring& r, Matrix& m, std::size_t n) {
    if (n == 0) return r.one();
    RingElement prev = r.one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (r.is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && r.is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return r.zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        const RingElement pivot = m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m[i].size(); ++j)
                m[i][j] = r.div_exact(
                    r.sub(r.mul(pivot, m[i][j]), r.mul(m[i][k], m[k][j])), prev);
            m[i][k] = r.zero();
        }
        prev = pivot;
    }
    RingElement det = m[n - 1][n - 1];
    return sign < 0 ? r.neg(det) : det;
}

} // namespace

RingElement bareiss_det(const Ring& r, Matrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(errc::bad_input, "determinant of a non-square matrix");
    return bareiss_forward(r, m, n);
}

LinearSolution fraction_solve(const Ring& r, Matrix m, std::vector<RingElement> rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) fail(errc::bad_input, "rhs length does not match matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) fail(errc::bad_input, "fraction_solve needs a square matrix");
        m[i].push_back(rhs[i]);
    }
    RingElement det = bareiss_forward(r, m, n);
    if (r.is_zero(det)) fail(errc::singular_system, "matrix is singular");

    // Back substitution over the fraction field.
    std::vector<Fraction> x(n, Fraction{r.zero(), r.one()});
    for (std::size_t ii = n; ii-- > 0;) {
        Fraction acc = make_fraction(r, m[ii][n], r.one());
        for (std::size_t j = ii + 1; j < n; ++j)
            acc = frac_sub(r, acc, frac_mul(r, make_fraction(r, m[ii][j], r.one()), x[j]));
        x[ii] = frac_div(r, acc, make_fraction(r, m[ii][ii], r.one()));
    }

    // Cramer guarantees each reduced denominator divides det. Over a field
    // the denominators are already folded away.
    if (!r.is_field()) {
        for (const auto& c : x) {
            mpq_class check = det.value() / c.den.value();
            if (check.get_den() != 1)
                fail(errc::internal_invariant_broken,
                     "coordinate denominator does not divide det");
        }
    }
    return LinearSolution{std::move(x), std::move(det)};
}

} // namespace linrec
