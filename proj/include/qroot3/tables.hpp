#pragma once

#include <string>
#include <vector>

#include "qroot3/json_io.hpp"

// Reproduced tables: each row carries the printed value, the computed one, and whether they agree.
namespace qroot3::tables {

struct Table {
    std::string name, title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool all_match() const;
};

// actions, tensor, metrics, cohomology, pairing
const std::vector<std::string>& names();
Table build(const std::string& name);  // throws std::invalid_argument for unknown names

std::string render_text(const Table& t);
json_io::Json render_json(const Table& t);  // array of records keyed by column

}  // namespace qroot3::tables
