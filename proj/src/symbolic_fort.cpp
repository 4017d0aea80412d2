#include "fortdyn/symbolic_fort.hpp"

namespace fortdyn {

void validate_symbolic(const SymbolicFortSystem& sys) {
    if (sys.fixed_count < 1)
        raise(errc::bad_parameters, "fixed_count must be >= 1 (the particular point b always exists)");
    if (sys.line_count < 0) raise(errc::bad_parameters, "line_count must be >= 0");
}

std::string closure_label(const ClosureSet& c) {
    switch (c.kind) {
        case ClosureSet::Kind::ParticularOnly: return "{b}";
        case ClosureSet::Kind::FixedSingleton: return "{fix" + std::to_string(c.index) + "}";
        case ClosureSet::Kind::LineWithB: return "{line" + std::to_string(c.index) + ",b}";
    }
    return {};
}

ClosureSet symbolic_orbit_closure(const SymbolicFortSystem& sys, const PointRef& ref) {
    validate_symbolic(sys);
    switch (ref.kind) {
        case PointRef::Kind::B:
            return {ClosureSet::Kind::ParticularOnly, 0};
        case PointRef::Kind::Fixed:
            if (ref.index < 1 || ref.index >= sys.fixed_count)
                raise(errc::bad_reference, "fixed-point index " + std::to_string(ref.index) + " out of range");
            return {ClosureSet::Kind::FixedSingleton, ref.index};
        case PointRef::Kind::LinePoint:
            if (ref.index < 0 || ref.index >= sys.line_count)
                raise(errc::bad_reference, "line index " + std::to_string(ref.index) + " out of range");
            return {ClosureSet::Kind::LineWithB, ref.index};
    }
    raise(errc::bad_reference, "unrecognized point reference");
}

std::vector<ClosureSet> symbolic_all_closures(const SymbolicFortSystem& sys) {
    validate_symbolic(sys);
    std::vector<ClosureSet> out;
    out.reserve(static_cast<std::size_t>(sys.fixed_count) + sys.line_count);
    out.push_back({ClosureSet::Kind::ParticularOnly, 0});
    for (int j = 1; j < sys.fixed_count; ++j) out.push_back({ClosureSet::Kind::FixedSingleton, j});
    for (int i = 0; i < sys.line_count; ++i) out.push_back({ClosureSet::Kind::LineWithB, i});
    return out;
}

bool closure_contains(const ClosureSet& a, const ClosureSet& b) {
    if (a == b) return true;
    return a.kind == ClosureSet::Kind::ParticularOnly && b.kind == ClosureSet::Kind::LineWithB;
}

}  // namespace fortdyn
