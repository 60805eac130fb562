#include "cigrid/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace cigrid {

Json int_json(const Int& x) { return x.get_str(); }

Json shape_json(const GridShape& g) {
    return Json{{"k", g.k}, {"l", g.l}, {"t", g.t}, {"d", g.d}, {"s", g.s}};
}

GridShape shape_from_json(const Json& j) {
    GridShape g;
    g.k = j.at("k").get<unsigned>();
    g.l = j.at("l").get<unsigned>();
    g.t = j.at("t").get<unsigned>();
    g.d = j.at("d").get<unsigned>();
    if (j.contains("s")) g.s = j.at("s").get<unsigned>();
    g.validate();
    return g;
}

Json cells_json(const std::vector<GridCell>& cells) {
    Json out = Json::array();
    for (const GridCell& c : cells) out.push_back(Json::array({c.row, c.col}));
    return out;
}

namespace {

const char* kind_name(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::Empty: return "V_empty";
        case ComponentKind::TEqL: return "V_S";
        case ComponentKind::KTwo: return "V_S_j";
    }
    return "?";
}

}  // namespace

Json component_json(const ComponentDescriptor& c) {
    Json out;
    out["kind"] = kind_name(c.kind);
    if (c.kind != ComponentKind::Empty) out["S"] = c.S.cells;
    if (c.kind == ComponentKind::KTwo) {
        out["u"] = c.S.u;
        out["v"] = c.S.v;
        out["j"] = c.j;
    }
    out["dim"] = c.dim;
    return out;
}

Json report_json(const DecompositionReport& r) {
    Json out;
    out["shape"] = shape_json(r.shape);
    // mirrors the decompose() dispatch
    out["regime"] = (r.shape.k == 2 && r.shape.d >= r.shape.t) ? "k2" : "t_eq_l";
    out["component_count"] = r.components.size();
    out["dim_V_Delta"] = r.dim_V_Delta;
    Json comps = Json::array();
    for (const ComponentDescriptor& c : r.components) comps.push_back(component_json(c));
    out["components"] = std::move(comps);
    out["top_component_indices"] = r.top_component_indices;
    return out;
}

Json report_summary_json(const DecompositionReport& r) {
    Json out;
    out["shape"] = shape_json(r.shape);
    out["component_count"] = r.components.size();
    out["dim_V_Delta"] = r.dim_V_Delta;
    return out;
}

Json degree_report_json(const DegreeReport& r) {
    Json out;
    out["d"] = r.d;
    out["l"] = r.l;
    out["t"] = r.t;
    out["deg_V_empty"] = int_json(r.deg_V_empty);
    out["alpha"] = r.alpha ? int_json(*r.alpha) : Json(nullptr);
    out["beta"] = r.beta ? int_json(*r.beta) : Json(nullptr);
    out["deg_V_Delta"] = int_json(r.deg_V_Delta);
    out["case"] = r.case_label;
    out["methods"] = r.methods;
    return out;
}

Json ideal_spec_json(const IdealSpec& spec) {
    Json out;
    out["name"] = spec.name;
    out["ambient"] = spec.ambient_name;
    out["rows"] = spec.rows;
    out["cols"] = spec.cols;
    Json families = Json::array();
    for (const GeneratorFamily& family : spec.families) {
        Json f;
        if (const auto* vars = std::get_if<VariablesFamily>(&family)) {
            f["type"] = "variables";
            f["cells"] = cells_json(vars->cells);
        } else if (const auto* minors = std::get_if<MinorsFamily>(&family)) {
            f["type"] = "minors";
            f["r"] = minors->r;
            if (minors->row_set) f["rows"] = *minors->row_set;
            f["cols"] = minors->column_set;
            f["vacuous"] = minors->vacuous;
        } else if (const auto* mono = std::get_if<MonomialsFamily>(&family)) {
            f["type"] = "monomials";
            Json list = Json::array();
            for (const auto& m : mono->monomials) list.push_back(cells_json(m));
            f["monomials"] = std::move(list);
        }
        families.push_back(std::move(f));
    }
    out["families"] = std::move(families);
    return out;
}

Json vector_config_json(const VectorConfig& v) {
    Json vectors = Json::array();
    for (const auto& vec : v.vectors) {
        Json row = Json::array();
        for (const Rat& entry : vec) row.push_back(rat_to_string(entry));
        vectors.push_back(std::move(row));
    }
    return Json{{"d", v.d}, {"vectors", std::move(vectors)}};
}

VectorConfig vector_config_from_json(const Json& j) {
    VectorConfig v;
    v.d = j.at("d").get<unsigned>();
    for (const Json& vec : j.at("vectors")) {
        std::vector<Rat> entries;
        for (const Json& entry : vec) {
            entries.push_back(parse_rat(entry.get<std::string>()));
        }
        v.vectors.push_back(std::move(entries));
    }
    v.validate();
    return v;
}

namespace {

std::string csv_escape(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
        return;
    }
    std::string value;
    if (j.is_string()) value = j.get<std::string>();
    else value = j.dump();  // numbers, bools, null, arrays
    out << csv_escape(prefix) << "," << csv_escape(value) << "\n";
}

}  // namespace

std::string json_to_csv(const Json& j) {
    std::ostringstream out;
    out << "key,value\n";
    flatten(j, "", out);
    return out.str();
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cigrid
