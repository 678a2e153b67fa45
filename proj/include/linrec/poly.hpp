#pragma once

#include <vector>

#include "linrec/ring.hpp"

namespace linrec {

/// Dense univariate polynomial over a ring, coefficients lowest degree
/// first. Trailing zero coefficients are trimmed on construction; the zero
/// polynomial is the empty list (degree -1).
class Poly {
public:
    explicit Poly(Ring r) : ring_(std::move(r)) {}
    Poly(Ring r, std::vector<RingElement> coeffs);

    const Ring& ring() const { return ring_; }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    /// Coefficient of x^i; zero beyond the degree.
    RingElement coeff(int i) const;

    static Poly constant(const Ring& r, const RingElement& c);
    static Poly monomial(const Ring& r, unsigned deg); // x^deg
    static Poly from_ints(const Ring& r, const std::vector<long>& coeffs);

    bool operator==(const Poly& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    /// Horner evaluation at alpha.
    RingElement eval(const RingElement& alpha) const;

    std::string str() const; // "x^2 - 3x + 2" style, for diagnostics

private:
    void trim();

    Ring ring_;
    std::vector<RingElement> coeffs_;
};

/// Roots with multiplicities, pairwise distinct once validated.
struct RootEntry {
    RingElement root;
    unsigned multiplicity = 0;
};

struct RootData {
    std::vector<RootEntry> entries;
    unsigned total_multiplicity() const;
};

/// Expands prod (x - alpha_u)^{mu_u}; handy for building all-roots
/// polynomials in tests and the CLI.
Poly expand_root_factors(const Ring& r, const RootData& roots);

struct LinearDivision {
    Poly quotient;
    RingElement remainder;
};

/// Divides monic p by (x - alpha) via the synthetic recurrence
/// d_i = alpha d_{i-1} + c_i, so p = (x - alpha) q + p(alpha) with q monic.
LinearDivision divide_linear(const Poly& p, const RingElement& alpha);

struct MultiplicityResult {
    unsigned multiplicity = 0;
    Poly reduced; // r with p = (x - alpha)^m r and r(alpha) != 0
};

/// Maximal m with (x - alpha)^m dividing monic p, by repeated synthetic
/// division. Derivative-based multiplicity tests break in characteristic p;
/// this does not.
MultiplicityResult multiplicity(const Poly& p, const RingElement& alpha);

struct RootValidation {
    bool all_roots_in_k = false;
    Poly remainder;
};

/// Peels every claimed (root, multiplicity) off monic p and reports whether
/// the rootless remainder is exactly 1. Claimed multiplicities must match
/// the computed ones; roots must be pairwise distinct.
RootValidation validate_roots(const Poly& p, const RootData& roots);

} // namespace linrec
