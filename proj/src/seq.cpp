#include "linrec/seq.hpp"

#include "linrec/hasse.hpp"

namespace linrec {

namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
    if (a != b)
        fail(errc::ring_mismatch, std::string(what) + " over different rings (" +
                                      a.describe() + " vs " + b.describe() + ")");
}

} // namespace

PrefixSeq::PrefixSeq(Ring r, std::vector<RingElement> terms)
    : ring_(std::move(r)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (!ring_.contains(t))
            fail(errc::ring_mismatch, "term " + t.str() + " is not in " + ring_.describe());
}

PrefixSeq PrefixSeq::truncated(std::size_t len) const {
    if (len >= terms_.size()) return *this;
    return PrefixSeq(ring_, std::vector<RingElement>(terms_.begin(),
                                                     terms_.begin() + static_cast<long>(len)));
}

PrefixSeq PrefixSeq::from_ints(const Ring& r, const std::vector<long>& terms) {
    std::vector<RingElement> t;
    t.reserve(terms.size());
    for (long v : terms) t.push_back(r.from_int(v));
    return PrefixSeq(r, std::move(t));
}

RingElement pairing(const PrefixSeq& s, const Poly& p) {
    require_same_ring(s.ring(), p.ring(), "pairing");
    if (p.degree() >= static_cast<int>(s.size()))
        fail(errc::insufficient_prefix,
             "pairing needs " + std::to_string(p.degree() + 1) + " terms, prefix has " +
                 std::to_string(s.size()));
    const Ring& r = s.ring();
    RingElement acc = r.zero();
    for (int i = 0; i <= p.degree(); ++i)
        acc = r.add(acc, r.mul(p.coeff(i), s.term(static_cast<std::size_t>(i))));
    return acc;
}

PrefixSeq shift(const PrefixSeq& s, std::size_t n) {
    if (n > s.size())
        fail(errc::insufficient_prefix, "shift by " + std::to_string(n) +
                                            " of a prefix of length " +
                                            std::to_string(s.size()));
    return PrefixSeq(s.ring(),
                     std::vector<RingElement>(s.terms().begin() + static_cast<long>(n),
                                              s.terms().end()));
}

PrefixSeq divided_adjoint(const PrefixSeq& s, unsigned n) {
    const Ring& r = s.ring();
    std::vector<RingElement> t(s.size(), r.zero());
    for (std::size_t i = n; i < s.size(); ++i)
        t[i] = r.mul(binomial_in_ring(r, static_cast<long>(i - n), static_cast<long>(n)),
                     s.term(i - n));
    return PrefixSeq(r, std::move(t));
}

PrefixSeq geometric_prefix(const Ring& r, const RingElement& alpha, std::size_t len) {
    std::vector<RingElement> t;
    t.reserve(len);
    RingElement power = r.one(); // alpha^0 = 1 even for alpha = 0
    for (std::size_t i = 0; i < len; ++i) {
        t.push_back(power);
        power = r.mul(power, alpha);
    }
    return PrefixSeq(r, std::move(t));
}

PrefixSeq basis_seq_prefix(const Ring& r, const BasisSeqDescriptor& d, std::size_t len) {
    std::vector<RingElement> t(len, r.zero());
    RingElement power = r.one(); // alpha^{i-n}, starting at i = n
    for (std::size_t i = d.order; i < len; ++i) {
        t[i] = r.mul(binomial_in_ring(r, static_cast<long>(i - d.order),
                                      static_cast<long>(d.order)),
                     power);
        power = r.mul(power, d.alpha);
    }
    return PrefixSeq(r, std::move(t));
}

PrefixSeq seq_add(const PrefixSeq& a, const PrefixSeq& b) {
    require_same_ring(a.ring(), b.ring(), "sequence addition");
    const Ring& r = a.ring();
    std::size_t len = std::min(a.size(), b.size());
    std::vector<RingElement> t(len, r.zero());
    for (std::size_t i = 0; i < len; ++i) t[i] = r.add(a.term(i), b.term(i));
    return PrefixSeq(r, std::move(t));
}

PrefixSeq seq_sub(const PrefixSeq& a, const PrefixSeq& b) {
    require_same_ring(a.ring(), b.ring(), "sequence subtraction");
    const Ring& r = a.ring();
    std::size_t len = std::min(a.size(), b.size());
    std::vector<RingElement> t(len, r.zero());
    for (std::size_t i = 0; i < len; ++i) t[i] = r.sub(a.term(i), b.term(i));
    return PrefixSeq(r, std::move(t));
}

PrefixSeq seq_scale(const RingElement& c, const PrefixSeq& s) {
    const Ring& r = s.ring();
    std::vector<RingElement> t(s.size(), r.zero());
    for (std::size_t i = 0; i < s.size(); ++i) t[i] = r.mul(c, s.term(i));
    return PrefixSeq(r, std::move(t));
}

PrefixSeq shift_minus(const PrefixSeq& s, const RingElement& alpha) {
    return seq_sub(shift(s, 1), seq_scale(alpha, s));
}

bool check_seq_commutator(const PrefixSeq& s, const RingElement& alpha, unsigned n) {
    if (s.size() == 0) return true;
    const std::size_t len = s.size() - 1;
    PrefixSeq lhs =
        seq_sub(shift_minus(divided_adjoint(s, n), alpha),
                divided_adjoint(shift_minus(s, alpha), n));
    PrefixSeq rhs = n == 0 ? PrefixSeq(s.ring(), std::vector<RingElement>(len, s.ring().zero()))
                           : divided_adjoint(s, n - 1).truncated(len);
    return lhs.truncated(len) == rhs;
}

PrefixSeq lower(const Ring& r, const RingElement& alpha, unsigned n, unsigned a,
                std::size_t len) {
    if (a > n)
        fail(errc::out_of_range, "lowering " + std::to_string(a) +
                                     " times past order " + std::to_string(n));
    PrefixSeq s = basis_seq_prefix(r, BasisSeqDescriptor{alpha, n}, len + a);
    for (unsigned i = 0; i < a; ++i) s = shift_minus(s, alpha);
    return s;
}

} // namespace linrec
