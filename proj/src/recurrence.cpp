#include "linrec/recurrence.hpp"

namespace linrec {

RecurrenceSpec::RecurrenceSpec(Poly char_poly) : poly_(std::move(char_poly)) {
    if (poly_.degree() < 1 || !poly_.is_monic())
        fail(errc::not_monic, "characteristic polynomial must be monic of degree >= 1");
}

RingElement RecurrenceSpec::coeff(unsigned j) const {
    if (j < 1 || j > order())
        fail(errc::out_of_range, "recurrence coefficient index " + std::to_string(j));
    return poly_.coeff(static_cast<int>(order() - j));
}

MembershipResult check_membership(const RecurrenceSpec& spec, const PrefixSeq& s) {
    if (spec.ring() != s.ring())
        fail(errc::ring_mismatch, "sequence ring differs from the recurrence ring");
    const Ring& r = spec.ring();
    const unsigned n = spec.order();
    for (std::size_t i = n; i < s.size(); ++i) {
        RingElement acc = s.term(i);
        for (unsigned j = 1; j <= n; ++j)
            acc = r.add(acc, r.mul(spec.coeff(j), s.term(i - j)));
        if (!r.is_zero(acc)) return MembershipResult{false, i};
    }
    return MembershipResult{true, std::nullopt};
}

PrefixSeq extend(const RecurrenceSpec& spec, const PrefixSeq& init, std::size_t target_len) {
    if (spec.ring() != init.ring())
        fail(errc::ring_mismatch, "initial terms ring differs from the recurrence ring");
    const unsigned n = spec.order();
    if (init.size() != n)
        fail(errc::bad_init_length, "need exactly " + std::to_string(n) +
                                        " initial terms, got " + std::to_string(init.size()));
    const Ring& r = spec.ring();
    std::vector<RingElement> t = init.terms();
    if (target_len <= t.size()) t.resize(target_len);
    t.reserve(target_len);
    while (t.size() < target_len) {
        const std::size_t i = t.size();
        RingElement acc = r.zero();
        for (unsigned j = 1; j <= n; ++j)
            acc = r.add(acc, r.mul(spec.coeff(j), t[i - j]));
        t.push_back(r.neg(acc));
    }
    return PrefixSeq(r, std::move(t));
}

namespace {

// First n terms of each basis element, as columns: M[i][j] = (element j)_i.
Matrix casoratian_matrix(const Ring& r, const std::vector<BasisSeqDescriptor>& elements,
                         std::size_t n) {
    Matrix m(n, std::vector<RingElement>(elements.size(), r.zero()));
    for (std::size_t j = 0; j < elements.size(); ++j) {
        PrefixSeq col = basis_seq_prefix(r, elements[j], n);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.term(i);
    }
    return m;
}

} // namespace

SolutionBasis build_basis(const RecurrenceSpec& spec, const RootData& roots) {
    const Ring& r = spec.ring();
    RootValidation v = validate_roots(spec.char_poly(), roots);
    if (!v.all_roots_in_k)
        fail(errc::not_all_roots_in_k,
             "characteristic polynomial has rootless factor " + v.remainder.str());

    std::vector<BasisSeqDescriptor> elements;
    elements.reserve(spec.order());
    for (const auto& entry : roots.entries)
        for (unsigned a = 0; a < entry.multiplicity; ++a)
            elements.push_back(BasisSeqDescriptor{entry.root, a});
    if (elements.size() != spec.order())
        fail(errc::internal_invariant_broken, "basis size differs from the order");

    // Each s(alpha_u, a) must satisfy the recurrence; verified on 3n terms.
    for (const auto& d : elements) {
        PrefixSeq prefix = basis_seq_prefix(r, d, 3 * spec.order());
        if (!check_membership(spec, prefix).ok)
            fail(errc::internal_invariant_broken,
                 "basis sequence fails the recurrence it was built for");
    }

    RingElement cas = bareiss_det(r, casoratian_matrix(r, elements, spec.order()));
    if (r.is_zero(cas))
        fail(errc::internal_invariant_broken, "Casoratian of a solution basis is zero");

    return SolutionBasis(spec, roots, std::move(elements), std::move(cas));
}

PrefixSeq SolutionBasis::element_prefix(std::size_t idx, std::size_t len) const {
    if (idx >= elements_.size())
        fail(errc::out_of_range, "basis element index " + std::to_string(idx));
    return basis_seq_prefix(spec_.ring(), elements_[idx], len);
}

RingElement casoratian_det(const SolutionBasis& basis) { return basis.casoratian(); }

Representation represent(const SolutionBasis& basis, const PrefixSeq& s) {
    const Ring& r = basis.spec().ring();
    const unsigned n = basis.spec().order();
    if (s.ring() != r) fail(errc::ring_mismatch, "sequence ring differs from the basis ring");
    if (s.size() < n)
        fail(errc::insufficient_prefix, "representation needs at least " + std::to_string(n) +
                                            " terms, got " + std::to_string(s.size()));
    MembershipResult member = check_membership(basis.spec(), s);
    if (!member.ok)
        fail(errc::bad_input, "sequence violates the recurrence at index " +
                                  std::to_string(*member.first_violation));

    Matrix m(n, std::vector<RingElement>(n, r.zero()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        PrefixSeq col = basis.element_prefix(j, n);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.term(i);
    }
    std::vector<RingElement> rhs(s.terms().begin(), s.terms().begin() + n);

    LinearSolution sol;
    try {
        sol = fraction_solve(r, std::move(m), std::move(rhs));
    } catch (const error& e) {
        if (e.code() == errc::singular_system)
            // Impossible for a valid basis (freeness => nonzero Casoratian).
            fail(errc::internal_invariant_broken, "solution basis produced a singular system");
        throw;
    }

    RingElement d = r.is_field() ? r.one() : sol.det;

    // Replay: d s_i == sum (d coord_j) s(alpha_u, a)_i on the whole prefix.
    // Matching the first n terms already forces equality (uniqueness of
    // extension), but the full check is cheap.
    std::vector<RingElement> cleared;
    cleared.reserve(basis.size());
    for (const auto& c : sol.coords)
        cleared.push_back(r.mul(c.num, r.div_exact(d, c.den)));
    std::vector<PrefixSeq> cols;
    cols.reserve(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        cols.push_back(basis.element_prefix(j, s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        RingElement acc = r.zero();
        for (std::size_t j = 0; j < basis.size(); ++j)
            acc = r.add(acc, r.mul(cleared[j], cols[j].term(i)));
        if (acc != r.mul(d, s.term(i)))
            fail(errc::internal_invariant_broken,
                 "cleared representation fails to reproduce the sequence at index " +
                     std::to_string(i));
    }

    return Representation{std::move(sol.coords), std::move(d)};
}

} // namespace linrec
