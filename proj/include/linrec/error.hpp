#pragma once

#include <stdexcept>
#include <string>

namespace linrec {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes, tests match on them directly.
enum class errc {
    bad_input,
    ring_mismatch,
    not_a_field,
    division_by_zero,
    singular_system,
    not_monic,
    duplicate_root,
    multiplicity_mismatch,
    not_all_roots_in_k,
    insufficient_prefix,
    bad_init_length,
    out_of_range,
    internal_invariant_broken,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace linrec
