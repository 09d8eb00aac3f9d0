// SPDX-License-Identifier: Apache-2.0
#include "stci/errors.hpp"

namespace stci {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::not_in_semigroup: return "NotInSemigroup";
        case errc::not_coprime: return "NotCoprime";
        case errc::condition_fails: return "ConditionFails";
        case errc::var_count_mismatch: return "VarCountMismatch";
        case errc::rule_conflict: return "RuleConflict";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::hom_var_occurs: return "HomVarOccurs";
        case errc::does_not_vanish: return "DoesNotVanish";
        case errc::not_bad_extension: return "NotBadExtension";
        case errc::bound_too_large: return "BoundTooLarge";
        case errc::too_large: return "TooLarge";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

}  // namespace stci
