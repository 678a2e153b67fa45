#include "linrec/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace linrec {

namespace {

mpz_class big_from_json(const json& j, const char* what) {
    try {
        if (j.is_string()) return mpz_class(j.get<std::string>());
        if (j.is_number_unsigned()) return mpz_class(j.get<unsigned long>());
        if (j.is_number_integer()) return mpz_class(j.get<long>());
    } catch (const std::invalid_argument&) {
    }
    fail(errc::bad_input, std::string(what) + " must be an integer or integer string");
}

} // namespace

Ring ring_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "int") return Ring::integers();
        if (s == "rat") return Ring::rationals();
        fail(errc::bad_input, "unknown ring '" + s + "'");
    }
    if (j.is_object() && j.contains("mod"))
        return Ring::prime_field(big_from_json(j.at("mod"), "ring modulus"));
    fail(errc::bad_input, "ring must be \"int\", \"rat\" or {\"mod\":p}");
}

ojson ring_to_json(const Ring& r) {
    switch (r.kind()) {
        case ring_kind::integers: return ojson("int");
        case ring_kind::rationals: return ojson("rat");
        case ring_kind::prime_field: {
            ojson o;
            o["mod"] = r.modulus().get_str();
            return o;
        }
    }
    fail(errc::internal_invariant_broken, "bad ring kind");
}

Ring ring_from_flag(const std::string& text) {
    if (text == "int") return Ring::integers();
    if (text == "rat") return Ring::rationals();
    if (text.rfind("mod:", 0) == 0) {
        try {
            return Ring::prime_field(mpz_class(text.substr(4)));
        } catch (const std::invalid_argument&) {
            fail(errc::bad_input, "bad modulus in '" + text + "'");
        }
    }
    fail(errc::bad_input, "ring must be int, rat or mod:P, got '" + text + "'");
}

RingElement element_from_json(const Ring& r, const json& j) {
    if (j.is_string()) return r.parse(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return r.from_int(big_from_json(j, "element"));
    fail(errc::bad_input, "ring element must be a string or integer");
}

Poly poly_from_json(const Ring& r, const json& j) {
    if (!j.is_array()) fail(errc::bad_input, "polynomial must be an array of coefficients");
    std::vector<RingElement> c;
    c.reserve(j.size());
    for (const auto& item : j) c.push_back(element_from_json(r, item));
    return Poly(r, std::move(c));
}

ojson poly_to_json(const Poly& p) {
    ojson arr = ojson::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

PrefixSeq seq_from_json(const Ring& r, const json& j) {
    if (!j.is_array()) fail(errc::bad_input, "sequence must be an array of terms");
    std::vector<RingElement> t;
    t.reserve(j.size());
    for (const auto& item : j) t.push_back(element_from_json(r, item));
    return PrefixSeq(r, std::move(t));
}

ojson seq_to_json(const PrefixSeq& s) {
    ojson arr = ojson::array();
    for (const auto& t : s.terms()) arr.push_back(t.str());
    return arr;
}

RootData roots_from_json(const Ring& r, const json& j) {
    if (!j.is_array()) fail(errc::bad_input, "roots must be an array of [root, multiplicity]");
    RootData roots;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            fail(errc::bad_input, "each root entry must be [root, multiplicity]");
        RootEntry e;
        e.root = element_from_json(r, item[0]);
        mpz_class mu = big_from_json(item[1], "multiplicity");
        if (mu < 1 || mu > 1024) fail(errc::bad_input, "multiplicity out of range");
        e.multiplicity = static_cast<unsigned>(mu.get_ui());
        roots.entries.push_back(std::move(e));
    }
    return roots;
}

ojson roots_to_json(const RootData& roots) {
    ojson arr = ojson::array();
    for (const auto& e : roots.entries) {
        ojson pair = ojson::array();
        pair.push_back(e.root.str());
        pair.push_back(e.multiplicity);
        arr.push_back(std::move(pair));
    }
    return arr;
}

ProblemFile problem_from_json(const json& j) {
    if (!j.is_object()) fail(errc::bad_input, "problem file must be a JSON object");
    if (!j.contains("ring")) fail(errc::bad_input, "problem file is missing \"ring\"");
    if (!j.contains("char_poly")) fail(errc::bad_input, "problem file is missing \"char_poly\"");
    Ring r = ring_from_json(j.at("ring"));
    Poly p = poly_from_json(r, j.at("char_poly"));
    if (p.degree() < 1 || !p.is_monic())
        fail(errc::bad_input, "char_poly must be monic of degree >= 1");
    ProblemFile out(r, std::move(p));
    if (j.contains("roots")) out.roots = roots_from_json(r, j.at("roots"));
    if (j.contains("init")) {
        out.init = seq_from_json(r, j.at("init"));
        if (out.init->size() != static_cast<std::size_t>(out.char_poly.degree()))
            fail(errc::bad_input, "init must have exactly deg(char_poly) terms");
    }
    if (j.contains("seq")) out.seq = seq_from_json(r, j.at("seq"));
    return out;
}

ojson problem_to_json(const ProblemFile& p) {
    ojson o;
    o["ring"] = ring_to_json(p.ring);
    o["char_poly"] = poly_to_json(p.char_poly);
    if (p.roots) o["roots"] = roots_to_json(*p.roots);
    if (p.init) o["init"] = seq_to_json(*p.init);
    if (p.seq) o["seq"] = seq_to_json(*p.seq);
    return o;
}

ProblemFile load_problem(const std::string& path_or_dash) {
    json j;
    try {
        if (path_or_dash == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(path_or_dash);
            if (!in) fail(errc::bad_input, "cannot open '" + path_or_dash + "'");
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        fail(errc::bad_input, std::string("malformed JSON: ") + e.what());
    }
    return problem_from_json(j);
}

} // namespace linrec
