#ifndef SUPERALG_ERRORS_HPP
#define SUPERALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superalg {

enum class errc {
    non_invertible_block,
    odd_parity_violation,
    rank_mismatch,
    generator_cap_exceeded,
    not_an_algebra,
    not_local,
    not_a_module,
    not_a_morphism,
    zero_function,
    unknown_point,
    no_even_basis,
    not_even,
    missing_map_data,
    missing_pullback_data,
    disconnected,
    missing_image,
    incomplete_composition_table,
    shape_mismatch,
    cutoff_too_large,
    ambiguous_genericity,
    inconsistent_descriptor,
    malformed_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_invertible_block: return "NonInvertibleBlock";
        case errc::odd_parity_violation: return "OddParityViolation";
        case errc::rank_mismatch: return "RankMismatch";
        case errc::generator_cap_exceeded: return "GeneratorCapExceeded";
        case errc::not_an_algebra: return "NotAnAlgebra";
        case errc::not_local: return "NotLocal";
        case errc::not_a_module: return "NotAModule";
        case errc::not_a_morphism: return "NotAMorphism";
        case errc::zero_function: return "ZeroFunction";
        case errc::unknown_point: return "UnknownPoint";
        case errc::no_even_basis: return "NoEvenBasis";
        case errc::not_even: return "NotEven";
        case errc::missing_map_data: return "MissingMapData";
        case errc::missing_pullback_data: return "MissingPullbackData";
        case errc::disconnected: return "Disconnected";
        case errc::missing_image: return "MissingImage";
        case errc::incomplete_composition_table: return "IncompleteCompositionTable";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::cutoff_too_large: return "CutoffTooLarge";
        case errc::ambiguous_genericity: return "AmbiguousGenericity";
        case errc::inconsistent_descriptor: return "InconsistentDescriptor";
        case errc::malformed_input: return "MalformedInput";
    }
    return "UnknownError";
}

/// Domain error carrying a machine-readable code next to the human message.
class kernel_error : public std::runtime_error {
public:
    kernel_error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw kernel_error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace superalg

#endif
