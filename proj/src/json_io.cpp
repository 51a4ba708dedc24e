#include "coheyt/json_io.hpp"

#include <fstream>

namespace coheyt {

poset_ptr poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements"))
        raise(errc::parse_error, "poset json needs an \"elements\" array");
    std::vector<std::string> names;
    for (const auto& e : j.at("elements")) names.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers"))
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2)
                raise(errc::parse_error, "cover entries are pairs");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    return build_poset(names, covers);
}

json poset_to_json(const poset& p) {
    json j;
    j["elements"] = p.names();
    json cov = json::array();
    for (auto [lo, hi] : p.covers()) cov.push_back(json::array({p.name(lo), p.name(hi)}));
    j["covers"] = cov;
    return j;
}

lattice_table table_from_json(const json& j) {
    lattice_table t;
    if (!j.is_object() || !j.contains("size") || !j.contains("leq"))
        raise(errc::parse_error, "table json needs \"size\" and \"leq\"");
    t.size = j.at("size").get<unsigned>();
    for (const auto& row : j.at("leq")) {
        std::vector<bool> r;
        for (const auto& v : row) r.push_back(v.get<bool>());
        t.leq.push_back(std::move(r));
    }
    return t;
}

downset element_from_json(const poset_ptr& p, const json& j) {
    if (!j.is_array()) raise(errc::parse_error, "element json is a name array");
    mask_t m = 0;
    for (const auto& e : j) {
        int i = p->index_of(e.get<std::string>());
        if (i < 0) raise(errc::unknown_name, e.get<std::string>());
        m |= mask_bit(static_cast<unsigned>(i));
    }
    return make_downset(p, m);
}

json element_to_json(const downset& d) {
    json j = json::array();
    mask_for_each(d.bits, [&](unsigned i) { j.push_back(d.parent->name(i)); });
    return j;
}

signature signature_from_json(const poset_ptr& p, const json& j) {
    if (!j.is_object() || !j.contains("g") || !j.contains("h") || !j.contains("r"))
        raise(errc::parse_error, "signature json needs \"g\", \"h\", \"r\"");
    downset g = element_from_json(p, j.at("g"));
    const auto& h = j.at("h");
    if (!h.is_array() || h.empty() || h.size() > 2)
        raise(errc::parse_error, "\"h\" holds one or two elements");
    downset h1 = element_from_json(p, h[0]);
    downset h2 = h.size() == 2 ? element_from_json(p, h[1]) : h1;
    int r = j.at("r").get<int>();
    return make_signature(std::move(g), std::move(h1), std::move(h2), r);
}

json signature_to_json(const signature& s) {
    json j;
    j["g"] = element_to_json(s.g);
    j["h"] = json::array({element_to_json(s.h1), element_to_json(s.h2)});
    j["r"] = s.r;
    return j;
}

json embedding_to_json(const embedding& e) {
    json j;
    j["provenance"] = e.provenance();
    json m = json::array();
    for (const auto& d : e.domain())
        m.push_back(json::array({element_to_json(d), element_to_json(e.apply(d))}));
    j["map"] = m;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        raise(errc::parse_error, path + ": " + ex.what());
    }
    return j;
}

}
