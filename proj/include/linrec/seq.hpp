#pragma once

#include <vector>

#include "linrec/poly.hpp"

namespace linrec {

/// Finite prefix s_0 .. s_{m-1} of a sequence over a ring. Prefixes are the
/// working representation everywhere: every shift shortens the prefix by
/// one, and closed-form sequences regenerate prefixes at any length.
class PrefixSeq {
public:
    explicit PrefixSeq(Ring r) : ring_(std::move(r)) {}
    PrefixSeq(Ring r, std::vector<RingElement> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<RingElement>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const RingElement& term(std::size_t i) const { return terms_[i]; }

    PrefixSeq truncated(std::size_t len) const;

    bool operator==(const PrefixSeq& o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const PrefixSeq& o) const { return !(*this == o); }

    static PrefixSeq from_ints(const Ring& r, const std::vector<long>& terms);

private:
    Ring ring_;
    std::vector<RingElement> terms_;
};

/// Names the sequence s(alpha, n) with terms C(i, n) alpha^{i-n} (zero for
/// i < n). s(alpha, 0) is the geometric sequence alpha^i.
struct BasisSeqDescriptor {
    RingElement alpha;
    unsigned order = 0;
};

/// <s, p> = sum c_i s_i. Every coefficient index of p must fall inside the
/// prefix (deg p < len s), else insufficient_prefix.
RingElement pairing(const PrefixSeq& s, const Poly& p);

/// (L^n s)_i = s_{i+n}; drops the first n terms.
PrefixSeq shift(const PrefixSeq& s, std::size_t n = 1);

/// (D^n s)_i = C(i, n) s_{i-n}, zero for i < n; same length as s. This is
/// the adjoint of the n-th divided derivative under the pairing.
PrefixSeq divided_adjoint(const PrefixSeq& s, unsigned n);

/// s(alpha) truncated to len terms; s(alpha)_0 = 1 for every alpha.
PrefixSeq geometric_prefix(const Ring& r, const RingElement& alpha, std::size_t len);

/// s(alpha, n) truncated to len terms, binomials mapped through Z -> k.
PrefixSeq basis_seq_prefix(const Ring& r, const BasisSeqDescriptor& d, std::size_t len);

/// Termwise a + b and c * s on the overlapping prefix.
PrefixSeq seq_add(const PrefixSeq& a, const PrefixSeq& b);
PrefixSeq seq_sub(const PrefixSeq& a, const PrefixSeq& b);
PrefixSeq seq_scale(const RingElement& c, const PrefixSeq& s);

/// (L - alpha) s; one term shorter than s.
PrefixSeq shift_minus(const PrefixSeq& s, const RingElement& alpha);

/// (L - alpha) D^n s - D^n (L - alpha) s == D^{n-1} s on the overlapping
/// prefix, with D^{-1} = 0.
bool check_seq_commutator(const PrefixSeq& s, const RingElement& alpha, unsigned n);

/// Applies (L - alpha) a times to s(alpha, n); requires a <= n. The result
/// equals s(alpha, n - a) -- the lowering identity behind the solution-basis
/// chain structure.
PrefixSeq lower(const Ring& r, const RingElement& alpha, unsigned n, unsigned a,
                std::size_t len);

} // namespace linrec
