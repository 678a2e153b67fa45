#pragma once

#include <mutex>
#include <vector>

#include "linrec/poly.hpp"

namespace linrec {

/// Pascal's triangle over Z, grown on demand. bico(a, b) = C(a+b, b) in the
/// convention used throughout: the coefficient of x^a y^b in (x + y)^{a+b},
/// and 0 whenever a or b is negative. Entries are built purely by the Pascal
/// recurrence; no factorials, so nothing here assumes invertibility.
/// Growth happens under a single-writer lock; lookups copy the value out.
class BinomialTable {
public:
    mpz_class bico(long a, long b);

    /// C(n, k) with the classical indexing.
    mpz_class choose(long n, long k);

    std::size_t rows_built();

    /// Snapshot of row n (for invariant checks in tests).
    std::vector<mpz_class> row(std::size_t n);

private:
    void ensure_rows(std::size_t n);

    std::mutex mu_;
    std::vector<std::vector<mpz_class>> rows_;
};

/// Process-wide table shared by everything below.
BinomialTable& pascal_table();

/// bico(a, b) = C(a+b, b) in Z, 0 for negative indices.
mpz_class binomial(long a, long b);

/// The image of bico(a, b) under Z -> k. Always computed in Z first and then
/// mapped; in characteristic p the in-ring value can vanish.
RingElement binomial_in_ring(const Ring& r, long a, long b);

/// n-th divided derivative of p: coefficient-wise
/// delta^n(sum c_i x^i) = sum bico(i-n, n) c_i x^{i-n}.
Poly divided_derivative(const Poly& p, unsigned n);

/// Same operator straight from the definition: expand p(x + y) by Horner in
/// k[x][y] and extract the y^n coefficient. O(deg^2) ring operations; kept
/// as an independent cross-check of the coefficient-wise algorithm.
Poly divided_derivative_definitional(const Poly& p, unsigned n);

/// delta^n(f g) == sum_{i+j=n} delta^i f * delta^j g, both sides evaluated
/// separately.
bool check_leibniz(const Poly& f, const Poly& g, unsigned n);

/// delta^n(delta^m p) == bico(m, n) * delta^{n+m} p.
bool check_composition(const Poly& p, unsigned n, unsigned m);

/// delta^n(x p) - x delta^n(p) == delta^{n-1} p, with delta^{-1} = 0.
bool check_commutator(const Poly& p, unsigned n);

} // namespace linrec
