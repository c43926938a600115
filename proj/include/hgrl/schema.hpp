#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hgrl {

struct RelationType {
    std::string name;
    int src_type = 0;
    int dst_type = 0;
};

// Node/relation type table. A heterogeneous graph requires
// |types| + |relations| > 2; allow_homogeneous relaxes that for tests.
struct Schema {
    std::vector<std::string> node_types;
    std::vector<RelationType> relations;
    int target_type = 0;
    bool allow_homogeneous = false;

    int node_type_id(const std::string& name) const;   // -1 if unknown
    int relation_id(const std::string& name) const;    // -1 if unknown

    void validate() const;
};

Schema load_schema(const std::filesystem::path& json_file);
void save_schema(const Schema& schema, const std::filesystem::path& json_file);

}  // namespace hgrl
