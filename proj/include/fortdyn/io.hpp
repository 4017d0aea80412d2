#pragma once

// The on-disk system document: a single JSON object describing a finite
// system, a symbolic Fort system, or a bare poset, plus the analysis report
// built from any of the three.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fortdyn/core_action.hpp"
#include "fortdyn/indicator.hpp"
#include "fortdyn/symbolic_fort.hpp"

namespace fortdyn {

struct PosetInput {
    std::vector<std::string> nodes;
    std::vector<std::pair<int, int>> covers;  // (i, j): node i is covered by node j
};

using SystemDoc = std::variant<FiniteDynSystem, SymbolicFortSystem, PosetInput>;

SystemDoc parse_system_document(const std::string& text);
SystemDoc load_system_file(const std::string& path);

std::string to_document_text(const FiniteDynSystem& sys);
std::string to_document_text(const SymbolicFortSystem& sys);

void write_system_file(const std::string& path, const std::string& text);

// Poset from an explicit cover list; rejects cyclic cover relations.
ClosurePoset poset_from_input(const PosetInput& input);

// Poset of whatever the document describes.
ClosurePoset poset_of(const SystemDoc& doc);

struct ClosureInfo {
    std::string label;
    std::vector<int> points;  // carrier members for finite systems, empty otherwise
    int height = 0;
};

struct AnalysisReport {
    std::string source_type;  // "finite" | "symbolic" | "poset"
    std::vector<ClosureInfo> closures;
    std::vector<int> sequence;
    int total_height = 0;
    bool classifiable = false;
    int alpha = 0, beta = 0;
    std::vector<std::pair<int, int>> hasse;
    std::vector<Mask> opens;  // filled only when the poset is small enough
};

AnalysisReport analyze(const SystemDoc& doc);

std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);
std::string render_dot(const AnalysisReport& report);

std::string sequence_to_string(const std::vector<int>& seq);
// Accepts "0,1,2", "(0, 1, 2)" and friends.
std::vector<int> parse_sequence(const std::string& text);

}  // namespace fortdyn
