#include "iart/export.hpp"

#include <sstream>

namespace iart {

namespace {

const char* kind_name(PKind k) {
    switch (k) {
        case PKind::Negative: return "negative";
        case PKind::Positive: return "positive";
        case PKind::Neutral: return "neutral";
        case PKind::Module: return "module";
    }
    return "?";
}

const char* arrow_type_name(ArrowType t) { return t == ArrowType::A ? "A" : t == ArrowType::B ? "B" : "C"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

}  // namespace

Json catalog_json(const PresentationCatalog& cat) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = cat.q.name();
    j["orientation"] = cat.q.orientation_string();
    j["cartan"] = cat.cd.cartan;
    Json items = Json::array();
    for (int k = 0; k < cat.size(); ++k) {
        const auto& p = cat.items[k];
        items.push_back({{"index", k},
                         {"label", p.label},
                         {"kind", kind_name(p.kind)},
                         {"f_minus", p.f_minus},
                         {"f_plus", p.f_plus},
                         {"e", p.e_vec},
                         {"tau", cat.tau[k]}});
    }
    j["items"] = items;
    j["t_max"] = cat.tmax;
    j["star"] = cat.star;
    return j;
}

Json quiver_json(const IceQuiver& iq) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["variant"] = variant_name(iq.variant);
    Json verts = Json::array();
    for (int k = 0; k < iq.size(); ++k)
        verts.push_back({{"catalog", iq.verts[k]}, {"label", iq.item(k).label}, {"frozen", bool(iq.frozen[k])}});
    j["vertices"] = verts;
    Json arrows = Json::array();
    for (const auto& a : iq.arrows)
        arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"valuation", {a.a, a.b}}, {"type", arrow_type_name(a.type)}});
    j["arrows"] = arrows;
    j["bmat"] = iq.bmat();
    return j;
}

std::string quiver_dot(const IceQuiver& iq) {
    std::ostringstream o;
    o << "digraph iart {\n  rankdir=LR;\n";
    for (int k = 0; k < iq.size(); ++k)
        o << "  v" << k << " [label=\"" << iq.item(k).label << "\"" << (iq.frozen[k] ? ", shape=box" : "") << "];\n";
    for (const auto& a : iq.arrows) {
        o << "  v" << a.src << " -> v" << a.dst << " [";
        if (a.type == ArrowType::C) o << "style=dashed";
        else o << "label=\"" << arrow_type_name(a.type) << "\"";
        if (a.a != 1 || a.b != 1) o << ", taillabel=\"(" << a.a << "," << a.b << ")\"";
        o << "];\n";
    }
    o << "}\n";
    return o.str();
}

Json cone_json(const ConeSpec& c, const PresentationCatalog& cat, const IMat& sigma) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["variant"] = variant_name(c.variant);
    j["ambient"] = c.ambient;
    std::vector<std::string> labels;
    for (int v : c.ambient) labels.push_back(cat.items[v].label);
    j["ambient_labels"] = labels;
    Json cols = Json::array();
    for (const auto& col : c.columns)
        cols.push_back({{"frozen", col.frozen}, {"label", cat.items[col.frozen].label}, {"group", col.group}, {"h", col.h}});
    j["columns"] = cols;
    if (!sigma.empty()) j["sigma"] = sigma;
    return j;
}

ConeSpec cone_from_json(const Json& j) {
    if (j.value("format_version", 0) != kFormatVersion) throw InvalidInput("cone JSON has an unknown format version");
    ConeSpec c;
    c.variant = parse_variant(j.at("variant").get<std::string>());
    c.ambient = j.at("ambient").get<std::vector<int>>();
    for (const auto& col : j.at("columns"))
        c.columns.push_back({col.at("frozen").get<int>(), col.at("group").get<int>(), col.at("h").get<IVec>()});
    return c;
}

std::string cone_csv(const ConeSpec& c, const PresentationCatalog& cat) {
    std::vector<std::string> rows;
    for (int v : c.ambient) rows.push_back(cat.items[v].label);
    std::ostringstream o;
    o << "vertex";
    for (const auto& h : c.header(cat)) o << "," << csv_field(h);
    o << "\n";
    auto H = c.H();
    for (size_t r = 0; r < H.size(); ++r) {
        o << csv_field(rows[r]);
        for (auto x : H[r]) o << "," << x;
        o << "\n";
    }
    return o.str();
}

Json rep_json(const RepZ& t) {
    Json j;
    j["dims"] = t.dims;
    Json arrows = Json::array();
    for (size_t k = 0; k < t.arrows.size(); ++k)
        arrows.push_back({{"src", t.arrows[k].first}, {"dst", t.arrows[k].second}, {"matrix", t.mats[k]}});
    j["arrows"] = arrows;
    return j;
}

std::string matrix_csv(const IMat& m, const std::vector<std::string>& row_labels) {
    std::ostringstream o;
    for (size_t r = 0; r < m.size(); ++r) {
        o << csv_field(r < row_labels.size() ? row_labels[r] : std::to_string(r));
        for (auto x : m[r]) o << "," << x;
        o << "\n";
    }
    return o.str();
}

}  // namespace iart
