#pragma once

#include <stdexcept>
#include <string>

namespace divgrace {

enum class Errc {
    invalid_spec,
    non_bipartite_unsupported,
    wrong_kind,
    size_mismatch,
    not_admissible,
    cannot_extend,
    invalid_top,
    preconditions_not_met,
    not_disjoint,
    invalid_request,
    search_budget_exceeded,
    invalid_labeling,
    out_of_domain,
    internal_contradiction,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace divgrace
