#include "ordspeed/reports.hpp"

#include <sstream>

namespace ordspeed {

Json to_json(const BigInt& v) { return v.str(); }

Json to_json(const OrderedGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

Json to_json(const LoopedOrderedGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}, {"loops", g.loops()}};
}

Json to_json(const BlockPartition& p) {
    Json blocks = Json::array();
    for (auto [a, b] : p.blocks) blocks.push_back({a, b});
    return {{"ell", p.ell}, {"blocks", blocks}};
}

Json to_json(const IrreducibleDecomposition& d) {
    Json blocks = Json::array();
    for (auto [a, b] : d.blocks) blocks.push_back({a, b});
    return {{"blocks", blocks}, {"sizes", d.sizes}};
}

Json to_json(const StructureWitness& w) {
    if (const auto* t1 = std::get_if<Type1Witness>(&w))
        return {{"type", "type1"},
                {"side", t1->y_left ? "left" : "right"},
                {"starts_with_edge", t1->starts_with_edge},
                {"y", t1->y},
                {"xs", t1->xs}};
    if (const auto* t2a = std::get_if<Type2aWitness>(&w))
        return {{"type", "type2a"}, {"xs", t2a->xs}, {"ys", t2a->ys}};
    if (const auto* t2b = std::get_if<Type2bWitness>(&w))
        return {{"type", "type2b"}, {"xs", t2b->xs}, {"ys", t2b->ys}};
    const auto& t3 = std::get<Type3Witness>(w);
    return {{"type", "type3"}, {"ell", t3.ell}, {"xs", t3.xs}, {"ys", t3.ys}};
}

Json to_json(const Certificate& c) {
    Json out = {{"complemented", c.complemented}};
    if (c.partition) out["partition"] = to_json(*c.partition);
    if (c.witness) out["witness"] = to_json(*c.witness);
    return out;
}

Json to_json(const SpeedSequence& seq) {
    Json rows = Json::array();
    for (size_t i = 0; i < seq.counts.size(); ++i)
        rows.push_back({{"n", i + 1}, {"count", seq.counts[i].str()}, {"exact", static_cast<bool>(seq.exact[i])}});
    return rows;
}

Json to_json(const RegimeClassification& r) {
    Json out = {{"case", regime_case_name(r.regime)}, {"diagnostics", r.diagnostics}};
    if (r.constant_m) out["M"] = r.constant_m->str();
    if (r.poly) {
        Json coeffs = Json::array();
        for (const BigInt& c : r.poly->coeffs) coeffs.push_back(c.str());
        out["binomial_coefficients"] = coeffs;
        out["onset"] = r.poly->onset;
    }
    if (r.fib_order) out["k"] = *r.fib_order;
    if (r.ratio_degree) out["ratio_degree"] = *r.ratio_degree;
    if (r.evidence_window) out["evidence_window"] = {r.evidence_window->first, r.evidence_window->second};
    return out;
}

Json to_json(const GrowthReport& r) {
    Json out = {{"nth_roots", r.nth_roots}, {"ratios", r.ratios}};
    if (r.fitted_root) out["fitted_root"] = *r.fitted_root;
    return out;
}

Json to_json(const JClass& c) { return {{"tag", j_tag_name(c.tag)}, {"order", c.order}}; }

Json to_json(const WitnessSetReport& r) {
    Json out;
    out["member"] = r.min_k.has_value();
    if (r.min_k) {
        out["min_k"] = *r.min_k;
        Json runs = Json::array();
        for (auto [a, b] : r.runs) runs.push_back({a, b});
        out["runs"] = runs;
    }
    if (r.offending_block) out["offending_block"] = *r.offending_block;
    return out;
}

namespace {

BigInt bigint_from_json(const Json& v) {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_unsigned()) return BigInt(v.get<uint64_t>());
    if (v.is_number_integer()) return BigInt(v.get<int64_t>());
    throw InputError("count must be an integer or decimal string");
}

}  // namespace

SpeedSequence parse_speed_sequence(const std::string& text) {
    SpeedSequence seq;
    std::vector<std::pair<int, std::pair<BigInt, bool>>> rows;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("empty speed sequence input");
    if (text[first] == '[' || text[first] == '{') {
        Json doc = Json::parse(text, nullptr, true, true);
        const Json& arr = doc.is_object() && doc.contains("rows") ? doc["rows"] : doc;
        if (!arr.is_array()) throw InputError("expected a JSON array of speed rows");
        for (const Json& row : arr) {
            int n = row.at("n").get<int>();
            BigInt count = bigint_from_json(row.at("count"));
            bool exact = row.value("exact", true);
            rows.push_back({n, {count, exact}});
        }
    } else {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            for (char& c : line)
                if (c == ',') c = ' ';
            std::istringstream ls(line);
            std::string ntok, ctok, etok;
            if (!(ls >> ntok >> ctok)) throw InputError("line " + std::to_string(lineno) + ": expected n,count");
            if (ntok == "n") continue;  // header
            bool exact = true;
            if (ls >> etok) exact = (etok == "true" || etok == "1");
            try {
                rows.push_back({std::stoi(ntok), {BigInt(ctok), exact}});
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(lineno) + ": bad speed row '" + line + "'");
            }
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first != static_cast<int>(i) + 1)
            throw InputError("speed rows must cover n = 1..N without gaps");
        seq.counts.push_back(rows[i].second.first);
        seq.exact.push_back(rows[i].second.second);
    }
    return seq;
}

}  // namespace ordspeed
