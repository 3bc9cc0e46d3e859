#ifndef LEXSHELL_ERRORS_HPP
#define LEXSHELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lexshell {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- poset construction / queries ---
struct CycleError : Error {
    explicit CycleError(const std::string& msg) : Error(msg) {}
};
struct NonCoverError : Error {
    explicit NonCoverError(const std::string& msg) : Error(msg) {}
};
struct DuplicateCoverError : Error {
    explicit DuplicateCoverError(const std::string& msg) : Error(msg) {}
};
struct NotBoundedError : Error {
    explicit NotBoundedError(const std::string& msg) : Error(msg) {}
};
struct NotComparableError : Error {
    explicit NotComparableError(const std::string& msg) : Error(msg) {}
};
struct UnknownElementError : Error {
    explicit UnknownElementError(const std::string& msg) : Error(msg) {}
};

// --- simplicial complexes ---
struct RedundantFacetError : Error {
    explicit RedundantFacetError(const std::string& msg) : Error(msg) {}
};
struct EmptyInputError : Error {
    explicit EmptyInputError(const std::string& msg) : Error(msg) {}
};
struct EmptyPosetError : Error {
    explicit EmptyPosetError(const std::string& msg) : Error(msg) {}
};

// --- shelling ---
struct NotAPermutationError : Error {
    explicit NotAPermutationError(const std::string& msg) : Error(msg) {}
};
struct NotAFacetError : Error {
    explicit NotAFacetError(const std::string& msg) : Error(msg) {}
};
struct NotShellableError : Error {
    explicit NotShellableError(const std::string& msg) : Error(msg) {}
};

// --- labelings ---
struct IncompleteLabelingError : Error {
    explicit IncompleteLabelingError(const std::string& msg) : Error(msg) {}
};

// --- recursive atom orderings ---
struct MalformedCertificateError : Error {
    explicit MalformedCertificateError(const std::string& msg) : Error(msg) {}
};

// --- constructions / data files ---
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};
struct RecipeInapplicableError : Error {
    explicit RecipeInapplicableError(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Search node budget exhausted. Deliberately distinct from a "not found"
// result: exhaustive non-existence claims must never be faked by a timeout.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

} // namespace lexshell

#endif
