#include "linrec/poly.hpp"

#include <utility>

namespace linrec {

namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
    if (a != b)
        fail(errc::ring_mismatch,
             std::string(what) + " over different rings (" + a.describe() + " vs " +
                 b.describe() + ")");
}

} // namespace

Poly::Poly(Ring r, std::vector<RingElement> coeffs)
    : ring_(std::move(r)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!ring_.contains(c))
            fail(errc::ring_mismatch,
                 "coefficient " + c.str() + " is not in " + ring_.describe());
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool Poly::is_monic() const {
    return !coeffs_.empty() && ring_.is_one(coeffs_.back());
}

RingElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ring_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::constant(const Ring& r, const RingElement& c) {
    return Poly(r, {c});
}

Poly Poly::monomial(const Ring& r, unsigned deg) {
    std::vector<RingElement> c(deg + 1, r.zero());
    c.back() = r.one();
    return Poly(r, std::move(c));
}

Poly Poly::from_ints(const Ring& r, const std::vector<long>& coeffs) {
    std::vector<RingElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(r.from_int(v));
    return Poly(r, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "polynomial addition");
    std::vector<RingElement> c(std::max(coeffs_.size(), o.coeffs_.size()), ring_.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ring_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(ring_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "polynomial subtraction");
    std::vector<RingElement> c(std::max(coeffs_.size(), o.coeffs_.size()), ring_.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ring_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(ring_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "polynomial multiplication");
    if (is_zero() || o.is_zero()) return Poly(ring_);
    std::vector<RingElement> c(coeffs_.size() + o.coeffs_.size() - 1, ring_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] = ring_.add(c[i + j], ring_.mul(coeffs_[i], o.coeffs_[j]));
    return Poly(ring_, std::move(c));
}

RingElement Poly::eval(const RingElement& alpha) const {
    RingElement acc = ring_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = ring_.add(ring_.mul(acc, alpha), coeffs_[i]);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (ring_.is_zero(coeffs_[i])) continue;
        if (!out.empty()) out += " + ";
        std::string c = coeffs_[i].str();
        if (i == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += c + " ";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

unsigned RootData::total_multiplicity() const {
    unsigned total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

Poly expand_root_factors(const Ring& r, const RootData& roots) {
    Poly acc = Poly::constant(r, r.one());
    for (const auto& e : roots.entries) {
        Poly lin(r, {r.neg(e.root), r.one()});
        for (unsigned i = 0; i < e.multiplicity; ++i) acc = acc * lin;
    }
    return acc;
}

LinearDivision divide_linear(const Poly& p, const RingElement& alpha) {
    if (!p.is_monic() || p.degree() < 1)
        fail(errc::not_monic, "divide_linear needs a monic polynomial of degree >= 1");
    const Ring& r = p.ring();
    const int n = p.degree();
    // Stream from the leading coefficient down: d_i = alpha d_{i-1} + c_i.
    std::vector<RingElement> q(static_cast<std::size_t>(n), r.zero());
    RingElement carry = p.coeff(n); // = 1
    for (int i = n - 1; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = carry;
        carry = r.add(r.mul(alpha, carry), p.coeff(i));
    }
    return LinearDivision{Poly(r, std::move(q)), carry};
}

MultiplicityResult multiplicity(const Poly& p, const RingElement& alpha) {
    if (!p.is_monic() || p.degree() < 1)
        fail(errc::not_monic, "multiplicity needs a monic polynomial of degree >= 1");
    const Ring& r = p.ring();
    MultiplicityResult out{0, p};
    while (out.reduced.degree() >= 1) {
        LinearDivision d = divide_linear(out.reduced, alpha);
        if (!r.is_zero(d.remainder)) break;
        out.reduced = std::move(d.quotient);
        ++out.multiplicity;
    }
    return out;
}

RootValidation validate_roots(const Poly& p, const RootData& roots) {
    if (!p.is_monic() || p.degree() < 1)
        fail(errc::not_monic, "validate_roots needs a monic polynomial of degree >= 1");
    const Ring& r = p.ring();
    for (std::size_t i = 0; i < roots.entries.size(); ++i)
        for (std::size_t j = i + 1; j < roots.entries.size(); ++j)
            if (roots.entries[i].root == roots.entries[j].root)
                fail(errc::duplicate_root,
                     "root " + roots.entries[i].root.str() + " listed twice");

    Poly rest = p;
    for (const auto& e : roots.entries) {
        if (e.multiplicity == 0)
            fail(errc::bad_input, "multiplicity of root " + e.root.str() + " must be positive");
        if (rest.degree() < 1) fail(errc::multiplicity_mismatch,
                                    "no factor left for root " + e.root.str());
        MultiplicityResult m = multiplicity(rest, e.root);
        if (m.multiplicity != e.multiplicity)
            fail(errc::multiplicity_mismatch,
                 "root " + e.root.str() + " has multiplicity " +
                     std::to_string(m.multiplicity) + ", claimed " +
                     std::to_string(e.multiplicity));
        rest = std::move(m.reduced);
    }
    bool all = rest.degree() == 0 && r.is_one(rest.coeff(0));
    return RootValidation{all, std::move(rest)};
}

} // namespace linrec
