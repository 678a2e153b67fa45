#include "linrec/error.hpp"

namespace linrec {

const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_input: return "BadInput";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_a_field: return "NotAField";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::singular_system: return "SingularSystem";
        case errc::not_monic: return "NotMonic";
        case errc::duplicate_root: return "DuplicateRoot";
        case errc::multiplicity_mismatch: return "MultiplicityMismatch";
        case errc::not_all_roots_in_k: return "NotAllRootsInK";
        case errc::insufficient_prefix: return "InsufficientPrefix";
        case errc::bad_init_length: return "BadInitLength";
        case errc::out_of_range: return "OutOfRange";
        case errc::internal_invariant_broken: return "InternalInvariantBroken";
    }
    return "UnknownError";
}

} // namespace linrec
