#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fedsim {

// Minimal strict INI reader: [section] headers, key = value lines, full-line
// or trailing # comments. Duplicate sections or keys are errors; parse
// problems carry line numbers.
struct IniFile {
    struct Entry {
        std::string key;
        std::string value;
        int line = 0;
        mutable bool consumed = false;
    };
    struct Section {
        std::string name;
        int line = 0;
        std::vector<Entry> entries;
    };

    std::vector<Section> sections;

    static IniFile parse(const std::string& text, std::vector<std::string>& errors);
    static IniFile parse_file(const std::string& path, std::vector<std::string>& errors);

    const Section* find(const std::string& name) const;
    // Marks the entry consumed so unknown-key detection can run afterwards.
    const Entry* get(const std::string& section, const std::string& key) const;
    // One error per entry never consumed by get(); strict-parsing support.
    void report_unconsumed(std::vector<std::string>& errors) const;
};

// Shared value parsing helpers; on failure an error mentioning `field` is
// appended and the fallback is returned.
double parse_double(const std::string& text, const std::string& field,
                    std::vector<std::string>& errors, double fallback = 0.0);
long long parse_int(const std::string& text, const std::string& field,
                    std::vector<std::string>& errors, long long fallback = 0);
bool parse_bool(const std::string& text, const std::string& field,
                std::vector<std::string>& errors, bool fallback = false);
std::vector<std::string> split_list(const std::string& text, char sep = ',');
std::string trim(const std::string& s);

}  // namespace fedsim
