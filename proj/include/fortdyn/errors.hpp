#pragma once

#include <stdexcept>
#include <string>

namespace fortdyn {

enum class errc {
    out_of_range_entry,
    non_bijective_group_generator,
    carrier_too_large,
    carrier_too_large_for_oracle,
    not_invariant,
    bad_reference,
    bad_cardinal,
    bad_parameters,
    invalid_step_sequence,
    too_large,
    too_many_nodes,
    empty_poset,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace fortdyn
