// linrec -- exact linear recurrence toolkit.
//
// Subcommands operate on a JSON problem file ({"ring":..., "char_poly":[...],
// "roots":[...], "init":[...], "seq":[...]}) or on inline flags, and emit one
// JSON object per line with every number as a string. Exit codes: 0 success,
// 2 recurrence violation (violating index on stdout), 3 validation error,
// 4 usage error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linrec/fastval.hpp"
#include "linrec/hasse.hpp"
#include "linrec/io.hpp"

namespace {

using namespace linrec;

constexpr long kBigTermThreshold = 100000;
const mpz_class kFindRootsMaxModulus = mpz_class(1) << 20;

mpz_class parse_big(const std::string& text, const char* what) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        fail(errc::bad_input, std::string("bad ") + what + " '" + text + "'");
    }
}

Poly poly_from_flag(const Ring& r, const std::string& text) {
    std::vector<RingElement> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(r.parse(item));
    return Poly(r, std::move(coeffs));
}

void emit(const ojson& o) { std::cout << o.dump() << "\n"; }

int run_check(const ProblemFile& problem) {
    if (!problem.seq) fail(errc::bad_input, "check needs a \"seq\" section");
    RecurrenceSpec spec(problem.char_poly);
    MembershipResult m = check_membership(spec, *problem.seq);
    ojson o;
    o["ok"] = m.ok;
    if (!m.ok) o["violation"] = *m.first_violation;
    emit(o);
    return m.ok ? 0 : 2;
}

int run_extend(const ProblemFile& problem, long to) {
    if (!problem.init) fail(errc::bad_input, "extend needs an \"init\" section");
    if (to < 0) fail(errc::bad_input, "--to must be non-negative");
    RecurrenceSpec spec(problem.char_poly);
    PrefixSeq s = extend(spec, *problem.init, static_cast<std::size_t>(to));
    ProblemFile out = problem;
    out.seq = s;
    emit(problem_to_json(out));
    return 0;
}

int run_basis(const ProblemFile& problem) {
    if (!problem.roots) fail(errc::bad_input, "basis needs a \"roots\" section");
    RecurrenceSpec spec(problem.char_poly);
    SolutionBasis basis = build_basis(spec, *problem.roots);
    ojson elements = ojson::array();
    for (const auto& d : basis.elements()) {
        ojson pair = ojson::array();
        pair.push_back(d.alpha.str());
        pair.push_back(d.order);
        elements.push_back(std::move(pair));
    }
    ojson o;
    o["basis"] = std::move(elements);
    o["casoratian"] = basis.casoratian().str();
    emit(o);
    return 0;
}

int run_represent(const ProblemFile& problem) {
    if (!problem.roots) fail(errc::bad_input, "represent needs a \"roots\" section");
    RecurrenceSpec spec(problem.char_poly);
    PrefixSeq s = [&] {
        if (problem.seq) return *problem.seq;
        if (problem.init) return extend(spec, *problem.init, 4 * spec.order());
        fail(errc::bad_input, "represent needs a \"seq\" or \"init\" section");
    }();
    MembershipResult m = check_membership(spec, s);
    if (!m.ok) {
        ojson o;
        o["ok"] = false;
        o["violation"] = *m.first_violation;
        emit(o);
        return 2;
    }
    SolutionBasis basis = build_basis(spec, *problem.roots);
    Representation rep = represent(basis, s);
    ojson coords = ojson::array();
    for (const auto& c : rep.coords) coords.push_back(frac_str(c));
    ojson o;
    o["coords"] = std::move(coords);
    o["denominator"] = rep.clearing_denominator.str();
    emit(o);
    return 0;
}

int run_term(const ProblemFile& problem, const std::string& n_text, bool allow_big) {
    if (!problem.init) fail(errc::bad_input, "term needs an \"init\" section");
    mpz_class N = parse_big(n_text, "term index");
    if (N < 0) fail(errc::bad_input, "term index must be non-negative");
    RecurrenceSpec spec(problem.char_poly);
    if (spec.ring().kind() != ring_kind::prime_field && N > kBigTermThreshold && !allow_big)
        fail(errc::bad_input,
             "term index above 100000 outside a prime field can be astronomically large; "
             "pass --allow-big to proceed");
    RingElement t = nth_term(spec, *problem.init, N);
    ojson o;
    o["term"] = t.str();
    emit(o);
    return 0;
}

int run_hasse(const std::string& ring_flag, const std::string& poly_flag, unsigned n) {
    Ring r = ring_from_flag(ring_flag);
    Poly p = poly_from_flag(r, poly_flag);
    emit(poly_to_json(divided_derivative(p, n)));
    return 0;
}

int run_basis_seq(const std::string& ring_flag, const std::string& alpha, unsigned n,
                  long len) {
    if (len < 0) fail(errc::bad_input, "--len must be non-negative");
    Ring r = ring_from_flag(ring_flag);
    BasisSeqDescriptor d{r.parse(alpha), n};
    emit(seq_to_json(basis_seq_prefix(r, d, static_cast<std::size_t>(len))));
    return 0;
}

// Exhaustive root search, prime fields only. A convenience outside the core:
// the library itself always takes roots as input.
int run_find_roots(const ProblemFile& problem) {
    const Ring& r = problem.ring;
    if (r.kind() != ring_kind::prime_field)
        fail(errc::bad_input, "find-roots only works over a prime field");
    if (r.modulus() >= kFindRootsMaxModulus)
        fail(errc::bad_input, "find-roots needs a modulus below 2^20");
    RootData roots;
    Poly rest = problem.char_poly;
    for (mpz_class a = 0; a < r.modulus() && rest.degree() >= 1; ++a) {
        RingElement alpha = r.from_int(a);
        if (!r.is_zero(rest.eval(alpha))) continue;
        MultiplicityResult m = multiplicity(rest, alpha);
        roots.entries.push_back(RootEntry{alpha, m.multiplicity});
        rest = m.reduced;
    }
    ojson o;
    o["roots"] = roots_to_json(roots);
    o["all_roots_in_k"] = rest.degree() == 0;
    emit(o);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear recurrence toolkit"};
    app.require_subcommand(1);

    std::string file = "-";
    long to = 0;
    std::string n_text = "0";
    bool allow_big = false;
    std::string ring_flag = "int";
    std::string poly_flag;
    std::string alpha = "0";
    unsigned hasse_n = 0;
    long len = 8;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("--file", file, "problem file, or - for stdin");
    };

    CLI::App* check = app.add_subcommand("check", "verify a sequence against the recurrence");
    add_file(check);
    CLI::App* extend_cmd = app.add_subcommand("extend", "extend initial terms to a prefix");
    add_file(extend_cmd);
    extend_cmd->add_option("--to", to, "target prefix length")->required();
    CLI::App* basis = app.add_subcommand("basis", "solution basis from the supplied roots");
    add_file(basis);
    CLI::App* represent_cmd =
        app.add_subcommand("represent", "coordinates over the basis plus clearing denominator");
    add_file(represent_cmd);
    CLI::App* term = app.add_subcommand("term", "N-th term without iterating");
    add_file(term);
    term->add_option("-N", n_text, "term index (big integer)")->required();
    term->add_flag("--allow-big", allow_big, "allow huge outputs outside prime fields");
    CLI::App* hasse = app.add_subcommand("hasse", "divided derivative of a polynomial");
    hasse->add_option("--ring", ring_flag, "int, rat or mod:P");
    hasse->add_option("--poly", poly_flag, "coefficients, lowest first, comma separated")
        ->required();
    hasse->add_option("-n", hasse_n, "derivative order");
    CLI::App* basis_seq = app.add_subcommand("basis-seq", "prefix of s(alpha, n)");
    basis_seq->add_option("--ring", ring_flag, "int, rat or mod:P");
    basis_seq->add_option("--alpha", alpha, "root")->required();
    basis_seq->add_option("-n", hasse_n, "derivative order");
    basis_seq->add_option("--len", len, "prefix length");
    CLI::App* find_roots =
        app.add_subcommand("find-roots", "exhaustive root search (prime fields, p < 2^20)");
    add_file(find_roots);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        if (*check) return run_check(load_problem(file));
        if (*extend_cmd) return run_extend(load_problem(file), to);
        if (*basis) return run_basis(load_problem(file));
        if (*represent_cmd) return run_represent(load_problem(file));
        if (*term) return run_term(load_problem(file), n_text, allow_big);
        if (*hasse) return run_hasse(ring_flag, poly_flag, hasse_n);
        if (*basis_seq) return run_basis_seq(ring_flag, alpha, hasse_n, len);
        if (*find_roots) return run_find_roots(load_problem(file));
    } catch (const linrec::error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 4;
}
