#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arcspace {

// Ordered key/value report; identical content whether rendered as text or json.
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    bool pass = true;
    int undetermined = 0;

    void add(const std::string& key, const std::string& value) {
        lines.emplace_back(key, value);
    }
    std::string text() const;
    std::string json_str() const;
};

int run_cli(int argc, char** argv);

}  // namespace arcspace
