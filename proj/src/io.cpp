#include "fortdyn/io.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fortdyn {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) raise(errc::parse_error, "document is not valid JSON");
    return doc;
}

FiniteDynSystem finite_from_json(const json& doc) {
    FiniteDynSystem sys;
    std::string kind = doc.value("kind", "");
    if (kind == "group")
        sys.kind = ActionKind::Group;
    else if (kind == "monoid")
        sys.kind = ActionKind::Monoid;
    else
        raise(errc::parse_error, "finite system needs \"kind\": \"group\" or \"monoid\"");
    if (!doc.contains("size") || !doc["size"].is_number_integer())
        raise(errc::parse_error, "finite system needs an integer \"size\"");
    sys.size = doc["size"].get<int>();
    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        raise(errc::parse_error, "finite system needs a nonempty \"generators\" array");
    for (const auto& g : doc["generators"]) {
        if (!g.is_array()) raise(errc::parse_error, "each generator must be an index array");
        sys.generators.push_back(g.get<std::vector<int>>());
    }
    validate_system(sys);
    return sys;
}

SymbolicFortSystem symbolic_from_json(const json& doc) {
    if (!doc.contains("fixed_points") || !doc.contains("z_lines"))
        raise(errc::parse_error, "symbolic system needs \"fixed_points\" and \"z_lines\"");
    SymbolicFortSystem sys{doc["fixed_points"].get<int>(), doc["z_lines"].get<int>()};
    validate_symbolic(sys);
    return sys;
}

PosetInput poset_from_json(const json& doc) {
    PosetInput input;
    if (!doc.contains("nodes") || !doc["nodes"].is_array() || doc["nodes"].empty())
        raise(errc::parse_error, "poset needs a nonempty \"nodes\" array");
    for (const auto& n : doc["nodes"]) input.nodes.push_back(n.get<std::string>());
    if (doc.contains("covers"))
        for (const auto& e : doc["covers"]) {
            if (!e.is_array() || e.size() != 2) raise(errc::parse_error, "covers must be [i,j] pairs");
            input.covers.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    return input;
}

}  // namespace

SystemDoc parse_system_document(const std::string& text) {
    json doc = parse_json(text);
    std::string type = doc.value("type", "");
    if (type == "finite") return finite_from_json(doc);
    if (type == "symbolic") return symbolic_from_json(doc);
    if (type == "poset") return poset_from_json(doc);
    raise(errc::parse_error, "document needs \"type\": \"finite\", \"symbolic\" or \"poset\"");
}

SystemDoc load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system_document(buf.str());
}

std::string to_document_text(const FiniteDynSystem& sys) {
    json doc;
    doc["type"] = "finite";
    doc["kind"] = sys.kind == ActionKind::Group ? "group" : "monoid";
    doc["size"] = sys.size;
    doc["generators"] = sys.generators;
    return doc.dump(2) + "\n";
}

std::string to_document_text(const SymbolicFortSystem& sys) {
    json doc;
    doc["type"] = "symbolic";
    doc["fixed_points"] = sys.fixed_count;
    doc["z_lines"] = sys.line_count;
    return doc.dump(2) + "\n";
}

void write_system_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) raise(errc::parse_error, "cannot write " + path);
    out << text;
}

ClosurePoset poset_from_input(const PosetInput& input) {
    int n = static_cast<int>(input.nodes.size());
    if (n < 1) raise(errc::empty_poset, "poset needs at least one node");
    if (n > kMaxPosetNodes) raise(errc::too_many_nodes, "poset is capped at 64 nodes");
    for (auto [i, j] : input.covers)
        if (i < 0 || i >= n || j < 0 || j >= n || i == j)
            raise(errc::parse_error, "cover pair references an invalid node");

    // Reflexive-transitive closure of the cover relation; a node gaining its
    // own bit through a nontrivial path means the covers are cyclic.
    std::vector<Mask> down(n);
    for (int v = 0; v < n; ++v) down[v] = Mask{1} << v;
    bool changed = true;
    int rounds = 0;
    while (changed) {
        if (++rounds > n + 1) raise(errc::parse_error, "covers relation is cyclic");
        changed = false;
        for (auto [i, j] : input.covers) {
            Mask merged = down[j] | down[i];
            if (merged != down[j]) {
                down[j] = merged;
                changed = true;
            }
        }
    }
    for (auto [i, j] : input.covers)
        if (down[i] >> j & 1) raise(errc::parse_error, "covers relation is cyclic");

    ClosurePoset p;
    p.labels = input.nodes;
    p.downsets = std::move(down);
    return p;
}

ClosurePoset poset_of(const SystemDoc& doc) {
    return std::visit(
        [](const auto& v) -> ClosurePoset {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PosetInput>)
                return poset_from_input(v);
            else
                return closure_poset(v);
        },
        doc);
}

namespace {

std::vector<int> mask_points(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace

AnalysisReport analyze(const SystemDoc& doc) {
    AnalysisReport report;
    ClosurePoset poset = poset_of(doc);

    if (const auto* fin = std::get_if<FiniteDynSystem>(&doc)) {
        report.source_type = "finite";
        auto closures = all_orbit_closures(*fin);
        for (std::size_t i = 0; i < closures.size(); ++i)
            report.closures.push_back(
                {poset.labels[i], mask_points(closures[i]), poset.node_height(static_cast<int>(i))});
    } else {
        report.source_type = std::holds_alternative<SymbolicFortSystem>(doc) ? "symbolic" : "poset";
        for (int v = 0; v < poset.size(); ++v)
            report.closures.push_back({poset.labels[v], {}, poset.node_height(v)});
    }

    report.sequence = indicator_sequence(poset);
    report.total_height = total_height(poset);
    if (auto cls = classify_group_topology(poset)) {
        report.classifiable = true;
        report.alpha = cls->first;
        report.beta = cls->second;
    }
    report.hasse = hasse_edges(poset);
    if (poset.size() <= 20) report.opens = enumerate_opens(poset);
    return report;
}

std::string sequence_to_string(const std::vector<int>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s;
}

std::vector<int> parse_sequence(const std::string& text) {
    std::string cleaned;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ' && c != '\t') cleaned += c;
    std::vector<int> out;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) raise(errc::parse_error, "empty entry in sequence \"" + text + "\"");
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            raise(errc::parse_error, "bad sequence entry \"" + item + "\"");
        }
    }
    if (out.empty()) raise(errc::parse_error, "empty sequence");
    return out;
}

namespace {

std::string opens_to_string(const AnalysisReport& report) {
    std::string s;
    for (std::size_t i = 0; i < report.opens.size(); ++i) {
        if (i) s += " ";
        Mask m = report.opens[i];
        if (!m) {
            s += "{}";
            continue;
        }
        std::string inner;
        for (int v : mask_points(m)) {
            if (!inner.empty()) inner += ",";
            inner += report.closures[v].label;
        }
        s += "{" + inner + "}";
    }
    return s;
}

}  // namespace

std::string render_text(const AnalysisReport& report) {
    std::ostringstream os;
    os << "source: " << report.source_type << "\n";
    os << "closures (" << report.closures.size() << "):\n";
    for (const auto& c : report.closures) {
        os << "  " << c.label << "  height=" << c.height;
        if (!c.points.empty()) {
            os << "  points=";
            for (std::size_t i = 0; i < c.points.size(); ++i)
                os << (i ? "," : "") << c.points[i];
        }
        os << "\n";
    }
    os << "indicator sequence: " << sequence_to_string(report.sequence) << "\n";
    os << "total height: " << report.total_height << "\n";
    if (report.classifiable)
        os << "classification: Y_" << report.alpha << " + Z_" << report.beta << "\n";
    else
        os << "classification: NotClassifiable (no group action realizes this topology)\n";
    os << "hasse edges:";
    for (auto [u, v] : report.hasse)
        os << " " << report.closures[u].label << "<" << report.closures[v].label;
    os << "\n";
    if (!report.opens.empty()) os << "opens: " << opens_to_string(report) << "\n";
    return os.str();
}

std::string render_json(const AnalysisReport& report) {
    json doc;
    doc["source_type"] = report.source_type;
    doc["closures"] = json::array();
    for (const auto& c : report.closures) {
        json jc;
        jc["label"] = c.label;
        jc["height"] = c.height;
        if (!c.points.empty()) jc["points"] = c.points;
        doc["closures"].push_back(jc);
    }
    doc["indicator_sequence"] = report.sequence;
    doc["total_height"] = report.total_height;
    if (report.classifiable)
        doc["classification"] = {{"alpha", report.alpha}, {"beta", report.beta}};
    else
        doc["classification"] = "not_classifiable";
    doc["hasse_edges"] = report.hasse;
    return doc.dump(2) + "\n";
}

std::string render_dot(const AnalysisReport& report) {
    std::ostringstream os;
    os << "digraph closures {\n  rankdir=BT;\n";
    for (std::size_t v = 0; v < report.closures.size(); ++v)
        os << "  n" << v << " [label=\"" << report.closures[v].label << "\"];\n";
    for (auto [u, v] : report.hasse) os << "  n" << u << " -> n" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fortdyn
