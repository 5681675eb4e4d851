#include "fedsim/ini.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fedsim {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

IniFile IniFile::parse(const std::string& text, std::vector<std::string>& errors) {
    IniFile file;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                errors.push_back("line " + std::to_string(lineno) + ": unterminated section header");
                continue;
            }
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) {
                errors.push_back("line " + std::to_string(lineno) + ": empty section name");
                continue;
            }
            for (const auto& s : file.sections)
                if (s.name == name)
                    errors.push_back("line " + std::to_string(lineno) + ": duplicate section [" +
                                     name + "]");
            file.sections.push_back({name, lineno, {}});
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        if (file.sections.empty()) {
            errors.push_back("line " + std::to_string(lineno) + ": key outside any [section]");
            continue;
        }
        Entry entry{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno, false};
        if (entry.key.empty()) {
            errors.push_back("line " + std::to_string(lineno) + ": empty key");
            continue;
        }
        for (const auto& e : file.sections.back().entries)
            if (e.key == entry.key)
                errors.push_back("line " + std::to_string(lineno) + ": duplicate key '" +
                                 entry.key + "' in [" + file.sections.back().name + "]");
        file.sections.back().entries.push_back(std::move(entry));
    }
    return file;
}

IniFile IniFile::parse_file(const std::string& path, std::vector<std::string>& errors) {
    std::ifstream in(path);
    if (!in) {
        errors.push_back("cannot open file: " + path);
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), errors);
}

const IniFile::Section* IniFile::find(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

const IniFile::Entry* IniFile::get(const std::string& section, const std::string& key) const {
    const Section* s = find(section);
    if (!s) return nullptr;
    for (const auto& e : s->entries) {
        if (e.key == key) {
            e.consumed = true;
            return &e;
        }
    }
    return nullptr;
}

void IniFile::report_unconsumed(std::vector<std::string>& errors) const {
    for (const auto& s : sections)
        for (const auto& e : s.entries)
            if (!e.consumed)
                errors.push_back("line " + std::to_string(e.line) + ": unknown key '" + e.key +
                                 "' in [" + s.name + "]");
}

double parse_double(const std::string& text, const std::string& field,
                    std::vector<std::string>& errors, double fallback) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
        errors.push_back(field + ": not a number: '" + text + "'");
        return fallback;
    }
    return v;
}

long long parse_int(const std::string& text, const std::string& field,
                    std::vector<std::string>& errors, long long fallback) {
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0') {
        errors.push_back(field + ": not an integer: '" + text + "'");
        return fallback;
    }
    return v;
}

bool parse_bool(const std::string& text, const std::string& field,
                std::vector<std::string>& errors, bool fallback) {
    if (text == "on" || text == "true" || text == "1" || text == "yes") return true;
    if (text == "off" || text == "false" || text == "0" || text == "no") return false;
    errors.push_back(field + ": expected on/off, got '" + text + "'");
    return fallback;
}

}  // namespace fedsim
