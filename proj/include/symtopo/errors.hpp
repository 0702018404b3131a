#pragma once

#include <stdexcept>
#include <string>

namespace symtopo {

enum class errc {
    not_full_dimensional,
    not_strongly_convex,
    inconsistent_h_representation,
    dimension_cap_exceeded,
    enumeration_cap_exceeded,
    multiset_cap_exceeded,
    mixed_arity,
    not_squarefree,
    not_height_one,
    whole_cone_face,
    bad_factor_index,
    invalid_parameter,
    syntax_error,
    unknown_reference,
    io_error,
    arithmetic_overflow,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_full_dimensional: return "NotFullDimensional";
        case errc::not_strongly_convex: return "NotStronglyConvex";
        case errc::inconsistent_h_representation: return "InconsistentHRepresentation";
        case errc::dimension_cap_exceeded: return "DimensionCapExceeded";
        case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
        case errc::multiset_cap_exceeded: return "MultisetCapExceeded";
        case errc::mixed_arity: return "MixedArity";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::not_height_one: return "NotHeightOne";
        case errc::whole_cone_face: return "WholeConeFace";
        case errc::bad_factor_index: return "BadFactorIndex";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_reference: return "UnknownReference";
        case errc::io_error: return "IoError";
        case errc::arithmetic_overflow: return "ArithmeticOverflow";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          raw_(msg) {}

    errc code() const { return code_; }
    const std::string& raw_message() const { return raw_; }

private:
    errc code_;
    std::string raw_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace symtopo
