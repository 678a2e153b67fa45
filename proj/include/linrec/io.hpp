#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "linrec/recurrence.hpp"

namespace linrec {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

/// JSON wire formats. All numeric payloads travel as strings so arbitrary
/// precision survives; ring descriptors are {"ring":"int"}, {"ring":"rat"}
/// or {"ring":{"mod":"p"}}; polynomials and prefixes are arrays of element
/// strings, lowest degree / index first.

Ring ring_from_json(const json& j);
ojson ring_to_json(const Ring& r);

/// Compact CLI spelling: "int", "rat", or "mod:P".
Ring ring_from_flag(const std::string& text);

RingElement element_from_json(const Ring& r, const json& j);

Poly poly_from_json(const Ring& r, const json& j);
ojson poly_to_json(const Poly& p);

PrefixSeq seq_from_json(const Ring& r, const json& j);
ojson seq_to_json(const PrefixSeq& s);

RootData roots_from_json(const Ring& r, const json& j);
ojson roots_to_json(const RootData& roots);

/// One solved/solvable problem: ring, characteristic polynomial, and the
/// optional roots / initial terms / sequence sections the subcommands need.
struct ProblemFile {
    Ring ring;
    Poly char_poly;
    std::optional<RootData> roots;
    std::optional<PrefixSeq> init;
    std::optional<PrefixSeq> seq;

    ProblemFile(Ring r, Poly p) : ring(std::move(r)), char_poly(std::move(p)) {}
};

ProblemFile problem_from_json(const json& j);
ojson problem_to_json(const ProblemFile& p);

ProblemFile load_problem(const std::string& path_or_dash); // "-" reads stdin

} // namespace linrec
