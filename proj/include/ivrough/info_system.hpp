#pragma once
// The interval-valued information system: an ordered universe of objects, an
// ordered list of attributes, and a total (object, attribute) -> Interval
// cell mapping.  File order is the canonical index order used everywhere
// downstream (relation matrices, tie-breaking, output ordering).

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "interval.hpp"

namespace ivrough {

class InformationSystem {
public:
    InformationSystem(std::vector<std::string> objects,
                      std::vector<std::string> attributes,
                      std::vector<Interval> cells)  // row-major: object x attribute
        : objects_(std::move(objects)), attributes_(std::move(attributes)), cells_(std::move(cells)) {
        if (objects_.empty()) throw Error("information system: no objects");
        if (attributes_.empty()) throw Error("information system: no attributes");
        if (cells_.size() != objects_.size() * attributes_.size())
            throw Error("information system: cell count does not match objects x attributes");
        for (std::size_t i = 0; i < objects_.size(); ++i)
            if (!object_index_.emplace(objects_[i], i).second)
                throw Error("duplicate object identifier '" + objects_[i] + "'");
        for (std::size_t j = 0; j < attributes_.size(); ++j)
            if (!attribute_index_.emplace(attributes_[j], j).second)
                throw Error("duplicate attribute identifier '" + attributes_[j] + "'");
    }

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    const Interval& cell(std::size_t object, std::size_t attribute) const {
        return cells_[object * attributes_.size() + attribute];
    }

    std::size_t object_index(std::string_view name) const {
        auto it = object_index_.find(std::string(name));
        if (it == object_index_.end()) throw Error("unknown object '" + std::string(name) + "'");
        return it->second;
    }

    std::size_t attribute_index(std::string_view name) const {
        auto it = attribute_index_.find(std::string(name));
        if (it == attribute_index_.end()) throw Error("unknown attribute '" + std::string(name) + "'");
        return it->second;
    }

    bool has_attribute(std::string_view name) const {
        return attribute_index_.count(std::string(name)) != 0;
    }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Interval> cells_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> attribute_index_;
};

namespace detail {

inline std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
}

inline std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

// Parses the line-oriented dataset format:
//   object,<attr1>,<attr2>,...
//   <objectId>,<lo:hi>,<lo:hi>,...
// '#'-prefixed lines are comments; blank lines are ignored.  All problems are
// reported with their line (and field) position.
inline InformationSystem parse_dataset(std::string_view text) {
    std::vector<std::string> attributes;
    std::vector<std::string> objects;
    std::vector<Interval> cells;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const std::string line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields = detail::split_csv(line);
        if (!have_header) {
            if (fields.size() < 2 || fields[0] != "object")
                throw Error("line " + std::to_string(line_no) +
                            ": header must be 'object,<attr1>,...'");
            attributes.assign(fields.begin() + 1, fields.end());
            for (const std::string& a : attributes)
                if (a.empty())
                    throw Error("line " + std::to_string(line_no) + ": empty attribute name");
            have_header = true;
            continue;
        }
        if (fields.size() != attributes.size() + 1)
            throw Error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(attributes.size() + 1) + " fields, found " +
                        std::to_string(fields.size()));
        if (fields[0].empty())
            throw Error("line " + std::to_string(line_no) + ": empty object identifier");
        objects.push_back(fields[0]);
        for (std::size_t j = 1; j < fields.size(); ++j) {
            try {
                cells.push_back(parse_interval(fields[j]));
            } catch (const Error& e) {
                throw Error("line " + std::to_string(line_no) + ", field " + std::to_string(j + 1) +
                            " (" + attributes[j - 1] + "): " + e.what());
            }
        }
    }
    if (!have_header) throw Error("dataset has no header line");
    if (objects.empty()) throw Error("dataset has no data rows");
    return InformationSystem(std::move(objects), std::move(attributes), std::move(cells));
}

// Writes the same format parse_dataset accepts; parse(serialize(s)) == s.
inline std::string serialize_dataset(const InformationSystem& s) {
    std::ostringstream out;
    out << "object";
    for (const std::string& a : s.attributes()) out << ',' << a;
    out << '\n';
    for (std::size_t i = 0; i < s.object_count(); ++i) {
        out << s.objects()[i];
        for (std::size_t j = 0; j < s.attribute_count(); ++j)
            out << ',' << format_interval(s.cell(i, j));
        out << '\n';
    }
    return out.str();
}

// Same universe, attributes restricted to `names` (kept in the system's own
// canonical order, not the order given).
inline InformationSystem project(const InformationSystem& s, const std::vector<std::string>& names) {
    if (names.empty()) throw Error("project: empty attribute subset");
    std::vector<bool> keep(s.attribute_count(), false);
    for (const std::string& name : names) keep[s.attribute_index(name)] = true;
    std::vector<std::string> attrs;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < s.attribute_count(); ++j)
        if (keep[j]) {
            attrs.push_back(s.attributes()[j]);
            cols.push_back(j);
        }
    std::vector<Interval> cells;
    cells.reserve(s.object_count() * cols.size());
    for (std::size_t i = 0; i < s.object_count(); ++i)
        for (std::size_t j : cols) cells.push_back(s.cell(i, j));
    return InformationSystem(s.objects(), std::move(attrs), std::move(cells));
}

}  // namespace ivrough
