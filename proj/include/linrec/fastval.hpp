#pragma once

#include "linrec/recurrence.hpp"

namespace linrec {

/// Reduction context for arithmetic mod the characteristic polynomial.
/// Residues always have degree < n. An N-th term query becomes
/// s_N = <x^N mod p, (s_0 .. s_{n-1})>: multiples of p pair to zero against
/// any member, so x^N and its residue pair identically.
class ModPowContext {
public:
    explicit ModPowContext(RecurrenceSpec spec);

    const RecurrenceSpec& spec() const { return spec_; }

    /// x^N mod p(x) by binary square-and-multiply; schoolbook products with
    /// linear reduction, O(n^2 log N) ring operations.
    Poly pow_x_mod(const mpz_class& N) const;

private:
    std::vector<RingElement> mul_mod(const std::vector<RingElement>& a,
                                     const std::vector<RingElement>& b) const;

    RecurrenceSpec spec_;
    std::vector<RingElement> fold_; // x^n = fold_[0] + fold_[1] x + ...
};

Poly polymod_pow(const ModPowContext& ctx, const mpz_class& N);

/// s_N for the member with the given n initial terms, without iterating.
RingElement nth_term(const RecurrenceSpec& spec, const PrefixSeq& init, const mpz_class& N);

} // namespace linrec
