#include "linrec/hasse.hpp"

namespace linrec {

void BinomialTable::ensure_rows(std::size_t n) {
    if (rows_.empty()) rows_.push_back({mpz_class(1)});
    while (rows_.size() <= n) {
        const auto& prev = rows_.back();
        std::vector<mpz_class> row(prev.size() + 1, mpz_class(1));
        for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
        rows_.push_back(std::move(row));
    }
}

mpz_class BinomialTable::bico(long a, long b) {
    if (a < 0 || b < 0) return 0;
    return choose(a + b, b);
}

mpz_class BinomialTable::choose(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard<std::mutex> lock(mu_);
    ensure_rows(static_cast<std::size_t>(n));
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::size_t BinomialTable::rows_built() {
    std::lock_guard<std::mutex> lock(mu_);
    return rows_.size();
}

std::vector<mpz_class> BinomialTable::row(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_rows(n);
    return rows_[n];
}

BinomialTable& pascal_table() {
    static BinomialTable table;
    return table;
}

mpz_class binomial(long a, long b) { return pascal_table().bico(a, b); }

RingElement binomial_in_ring(const Ring& r, long a, long b) {
    return r.from_int(binomial(a, b));
}

Poly divided_derivative(const Poly& p, unsigned n) {
    const Ring& r = p.ring();
    const int deg = p.degree();
    const int shift = static_cast<int>(n);
    if (deg < shift) return Poly(r);
    std::vector<RingElement> c(static_cast<std::size_t>(deg - shift + 1), r.zero());
    for (int i = shift; i <= deg; ++i)
        c[static_cast<std::size_t>(i - shift)] =
            r.mul(binomial_in_ring(r, i - shift, shift), p.coeff(i));
    return Poly(r, std::move(c));
}

Poly divided_derivative_definitional(const Poly& p, unsigned n) {
    const Ring& r = p.ring();
    // Horner in k[x][y]: g <- g * (x + y) + c_i, keeping g as the list of
    // y-coefficients g[m] in k[x]. Only rows 0..n are needed.
    std::vector<Poly> g(n + 1, Poly(r));
    for (int i = p.degree(); i >= 0; --i) {
        for (std::size_t m = n + 1; m-- > 0;) {
            Poly shifted = g[m] * Poly::monomial(r, 1);
            if (m > 0) shifted = shifted + g[m - 1];
            g[m] = std::move(shifted);
        }
        g[0] = g[0] + Poly::constant(r, p.coeff(i));
    }
    return g[n];
}

bool check_leibniz(const Poly& f, const Poly& g, unsigned n) {
    Poly lhs = divided_derivative(f * g, n);
    Poly rhs(f.ring());
    for (unsigned i = 0; i <= n; ++i)
        rhs = rhs + divided_derivative(f, i) * divided_derivative(g, n - i);
    return lhs == rhs;
}

bool check_composition(const Poly& p, unsigned n, unsigned m) {
    Poly lhs = divided_derivative(divided_derivative(p, m), n);
    Poly rhs = Poly::constant(p.ring(), binomial_in_ring(p.ring(), static_cast<long>(m),
                                                         static_cast<long>(n))) *
               divided_derivative(p, n + m);
    return lhs == rhs;
}

bool check_commutator(const Poly& p, unsigned n) {
    const Ring& r = p.ring();
    Poly x = Poly::monomial(r, 1);
    Poly lhs = divided_derivative(x * p, n) - x * divided_derivative(p, n);
    Poly rhs = n == 0 ? Poly(r) : divided_derivative(p, n - 1);
    return lhs == rhs;
}

} // namespace linrec
