#include "hgrl/schema.hpp"

#include "hgrl/io.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace hgrl {

using nlohmann::json;

int Schema::node_type_id(const std::string& name) const {
    for (std::size_t i = 0; i < node_types.size(); ++i)
        if (node_types[i] == name) return static_cast<int>(i);
    return -1;
}

int Schema::relation_id(const std::string& name) const {
    for (std::size_t i = 0; i < relations.size(); ++i)
        if (relations[i].name == name) return static_cast<int>(i);
    return -1;
}

void Schema::validate() const {
    if (node_types.empty()) throw std::runtime_error("schema: no node types");
    if (!allow_homogeneous && node_types.size() + relations.size() <= 2)
        throw std::runtime_error("schema: |node types| + |relations| must exceed 2");
    for (const auto& r : relations) {
        if (r.src_type < 0 || r.src_type >= static_cast<int>(node_types.size()) ||
            r.dst_type < 0 || r.dst_type >= static_cast<int>(node_types.size()))
            throw std::runtime_error("schema: relation '" + r.name + "' has unknown endpoint type");
    }
    if (target_type < 0 || target_type >= static_cast<int>(node_types.size()))
        throw std::runtime_error("schema: unknown target type");
}

Schema load_schema(const std::filesystem::path& json_file) {
    json j = json::parse(read_file(json_file));
    Schema s;
    for (const auto& t : j.at("node_types")) s.node_types.push_back(t.get<std::string>());
    for (const auto& r : j.at("relations")) {
        RelationType rel;
        rel.name = r.at("name").get<std::string>();
        rel.src_type = s.node_type_id(r.at("src").get<std::string>());
        rel.dst_type = s.node_type_id(r.at("dst").get<std::string>());
        if (rel.src_type < 0 || rel.dst_type < 0)
            throw std::runtime_error("schema: relation '" + rel.name + "' references unknown node type");
        s.relations.push_back(rel);
    }
    s.target_type = s.node_type_id(j.at("target_type").get<std::string>());
    if (s.target_type < 0) throw std::runtime_error("schema: unknown target type");
    if (j.contains("allow_homogeneous")) s.allow_homogeneous = j["allow_homogeneous"].get<bool>();
    s.validate();
    return s;
}

void save_schema(const Schema& schema, const std::filesystem::path& json_file) {
    json j;
    j["node_types"] = schema.node_types;
    j["relations"] = json::array();
    for (const auto& r : schema.relations)
        j["relations"].push_back({{"name", r.name},
                                  {"src", schema.node_types[r.src_type]},
                                  {"dst", schema.node_types[r.dst_type]}});
    j["target_type"] = schema.node_types[schema.target_type];
    if (schema.allow_homogeneous) j["allow_homogeneous"] = true;
    write_file(json_file, j.dump(2) + "\n");
}

}  // namespace hgrl
