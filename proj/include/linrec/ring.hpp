#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "linrec/error.hpp"

namespace linrec {

enum class ring_kind { integers, rationals, prime_field };

/// One exact element of a ring, kept in canonical form by the owning Ring:
/// integers have denominator 1, prime-field residues lie in [0, p), and
/// rationals are reduced with positive denominator (GMP canonical form).
/// Equal values always have equal representations.
class RingElement {
public:
    RingElement() = default; // zero

    const mpq_class& value() const { return v_; }
    bool operator==(const RingElement& o) const { return v_ == o.v_; }
    bool operator!=(const RingElement& o) const { return v_ != o.v_; }

    /// "n" or "n/d"; the element serialization used everywhere (JSON, CLI).
    std::string str() const;

private:
    friend class Ring;
    explicit RingElement(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

/// An entire ring: Z, Q, or Z/p for prime p. Values are immutable and all
/// operations are pure, so everything here is safe to share across threads.
class Ring {
public:
    static Ring integers() { return Ring(ring_kind::integers, 0); }
    static Ring rationals() { return Ring(ring_kind::rationals, 0); }

    /// Checks primality by trial division; moduli must fit below 2^31.
    static Ring prime_field(const mpz_class& p);

    ring_kind kind() const { return kind_; }
    bool is_field() const { return kind_ != ring_kind::integers; }
    const mpz_class& modulus() const { return p_; }
    bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    /// "int", "rat", or "mod p" -- for diagnostics.
    std::string describe() const;

    RingElement zero() const { return RingElement(); }
    RingElement one() const { return from_int(1); }

    /// The canonical homomorphism Z -> k.
    RingElement from_int(const mpz_class& z) const;
    RingElement from_int(long z) const { return from_int(mpz_class(z)); }

    /// Parses "n" (any ring) or "n/d" (fields only; d must be invertible).
    RingElement parse(const std::string& text) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement pow(const RingElement& a, unsigned long e) const;
    bool is_zero(const RingElement& a) const { return a.v_ == 0; }
    bool is_one(const RingElement& a) const { return a.v_ == 1; }

    /// Multiplicative inverse; only fields have one. Throws not_a_field over
    /// the integers and division_by_zero on zero input.
    RingElement inverse(const RingElement& a) const;

    /// a / b where the quotient is known to stay in the ring (Bareiss steps,
    /// cleared-denominator products). Division that leaves the ring trips
    /// internal_invariant_broken.
    RingElement div_exact(const RingElement& a, const RingElement& b) const;

    /// True when v is a canonical member of this ring.
    bool contains(const RingElement& v) const;

private:
    Ring(ring_kind k, mpz_class p) : kind_(k), p_(std::move(p)) {}

    RingElement reduce(mpq_class v) const;

    ring_kind kind_;
    mpz_class p_; // prime modulus; 0 unless prime_field
};

/// num/den over the fraction field of a ring. Normalized on construction:
/// over Z the fraction is reduced with positive denominator, over a field
/// the denominator is folded in (den = 1).
struct Fraction {
    RingElement num;
    RingElement den;
};

Fraction make_fraction(const Ring& r, const RingElement& num, const RingElement& den);
Fraction frac_add(const Ring& r, const Fraction& a, const Fraction& b);
Fraction frac_sub(const Ring& r, const Fraction& a, const Fraction& b);
Fraction frac_mul(const Ring& r, const Fraction& a, const Fraction& b);
Fraction frac_div(const Ring& r, const Fraction& a, const Fraction& b);
bool frac_is_zero(const Fraction& a);
std::string frac_str(const Fraction& a);

using Matrix = std::vector<std::vector<RingElement>>;

/// Determinant by fraction-free (Bareiss) elimination; exact in any entire
/// ring.
RingElement bareiss_det(const Ring& r, Matrix m);

struct LinearSolution {
    std::vector<Fraction> coords;
    RingElement det;
};

/// Solves m x = rhs over the fraction field via Bareiss elimination and
/// returns the determinant alongside; every coordinate's reduced denominator
/// divides det (Cramer). Throws singular_system when det = 0.
LinearSolution fraction_solve(const Ring& r, Matrix m, std::vector<RingElement> rhs);

} // namespace linrec
