#pragma once

#include <optional>

#include "linrec/seq.hpp"

namespace linrec {

/// A linear recurrence fixed by its monic characteristic polynomial
/// p(x) = x^n + c_1 x^{n-1} + ... + c_n. Members are exactly the sequences
/// with s_i + c_1 s_{i-1} + ... + c_n s_{i-n} = 0 for all i >= n.
class RecurrenceSpec {
public:
    explicit RecurrenceSpec(Poly char_poly);

    const Poly& char_poly() const { return poly_; }
    const Ring& ring() const { return poly_.ring(); }
    unsigned order() const { return static_cast<unsigned>(poly_.degree()); }

    /// c_j = coefficient of x^{n-j}, 1 <= j <= n.
    RingElement coeff(unsigned j) const;

private:
    Poly poly_;
};

struct MembershipResult {
    bool ok = false;
    std::optional<std::size_t> first_violation;
};

/// Checks the recurrence at every constrained index n <= i < len(s).
/// Prefixes shorter than n + 1 are vacuously members.
MembershipResult check_membership(const RecurrenceSpec& spec, const PrefixSeq& s);

/// The unique member with the given first n terms, truncated to target_len.
PrefixSeq extend(const RecurrenceSpec& spec, const PrefixSeq& init, std::size_t target_len);

/// The solution basis s(alpha_u, a), 0 <= a < mu_u, in (root index, a) order.
/// Built only when the characteristic polynomial has all roots in k; each
/// element is re-verified against the recurrence and the basis carries its
/// nonzero Casoratian determinant as a freeness certificate.
class SolutionBasis {
public:
    const RecurrenceSpec& spec() const { return spec_; }
    const RootData& roots() const { return roots_; }
    const std::vector<BasisSeqDescriptor>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    PrefixSeq element_prefix(std::size_t idx, std::size_t len) const;

    /// det of the n x n matrix of first n terms of the basis sequences;
    /// nonzero in an entire ring (the discrete Wronskian).
    const RingElement& casoratian() const { return casoratian_; }

private:
    friend SolutionBasis build_basis(const RecurrenceSpec&, const RootData&);
    SolutionBasis(RecurrenceSpec spec, RootData roots,
                  std::vector<BasisSeqDescriptor> elements, RingElement casoratian)
        : spec_(std::move(spec)), roots_(std::move(roots)),
          elements_(std::move(elements)), casoratian_(std::move(casoratian)) {}

    RecurrenceSpec spec_;
    RootData roots_;
    std::vector<BasisSeqDescriptor> elements_;
    RingElement casoratian_;
};

SolutionBasis build_basis(const RecurrenceSpec& spec, const RootData& roots);

RingElement casoratian_det(const SolutionBasis& basis);

/// Coordinates of a member over the fraction field, plus a nonzero clearing
/// denominator d: d * s = sum (d * coord_j) s(alpha_u, a) holds exactly in
/// the ring, term by term. Over a field d = 1 and the coordinates are exact.
struct Representation {
    std::vector<Fraction> coords;
    RingElement clearing_denominator;
};

Representation represent(const SolutionBasis& basis, const PrefixSeq& s);

} // namespace linrec
