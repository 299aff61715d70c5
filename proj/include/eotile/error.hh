#ifndef EOTILE_ERROR_HH
#define EOTILE_ERROR_HH

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace eotile {

enum class ErrorCode {
    DuplicateEdge,
    RankCollision,
    BadVertex,
    BudgetExceeded,
    BadSize,
    NotComplete,
    MissingEdge,
    NotTuranable,
    BadAnchor,
    BadSpec,
    BadDivisibility,
    BadSplit,
    ParseError,
    UnknownExperiment
};

auto error_code_name(ErrorCode code) -> const char *;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what) :
        std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        _code(code)
    {
    }

    // Wraps an underlying failure, e.g. ParseError(DuplicateEdge).
    Error(ErrorCode code, ErrorCode cause, const std::string & what) :
        std::runtime_error(std::string(error_code_name(code)) + "(" + error_code_name(cause) + "): " + what),
        _code(code), _cause(cause)
    {
    }

    auto code() const -> ErrorCode { return _code; }
    auto cause() const -> std::optional<ErrorCode> { return _cause; }

private:
    ErrorCode _code;
    std::optional<ErrorCode> _cause;
};

// Outcome of a bounded search. Inconclusive means the budget ran out before the
// search space was exhausted, which is never the same thing as Absent.
enum class SearchStatus { Found, Absent, Inconclusive };

auto search_status_name(SearchStatus s) -> const char *;

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<T> value;
    std::uint64_t nodes = 0;

    auto found() const -> bool { return status == SearchStatus::Found; }
    auto absent() const -> bool { return status == SearchStatus::Absent; }
    auto inconclusive() const -> bool { return status == SearchStatus::Inconclusive; }
};

}

#endif
