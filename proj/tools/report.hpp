#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qhash::cli {

enum class Format { Text, Json };

/// Ordered command output rendered either as `key value` lines or as one JSON object.
/// Both renderings dump numbers through the same serializer.
class Report {
public:
    using Json = nlohmann::ordered_json;

    template <typename T>
    void field(const std::string& key, T&& value) {
        entries_.push_back(Json::object({{key, Json(std::forward<T>(value))}}));
        groups_.emplace_back();
    }

    /// Several fields printed on one text line; merged into the top level in JSON.
    void line(Json fields) {
        entries_.push_back(std::move(fields));
        groups_.emplace_back();
    }

    /// One element of the array `group`; one text line each.
    void record(const std::string& group, Json fields) {
        entries_.push_back(std::move(fields));
        groups_.push_back(group);
    }

    /// Free-form text line (text mode only), e.g. a state or circuit dump.
    void raw(std::string text) { raw_.emplace_back(entries_.size(), std::move(text)); }

    void write(std::ostream& out, Format format) const {
        if (format == Format::Json) {
            Json root = Json::object();
            for (std::size_t i = 0; i < entries_.size(); ++i) {
                if (groups_[i].empty()) {
                    for (auto& [k, v] : entries_[i].items()) root[k] = v;
                } else {
                    root[groups_[i]].push_back(entries_[i]);
                }
            }
            out << root.dump(2) << '\n';
            return;
        }
        std::size_t next_raw = 0;
        for (std::size_t i = 0; i <= entries_.size(); ++i) {
            while (next_raw < raw_.size() && raw_[next_raw].first == i) out << raw_[next_raw++].second;
            if (i == entries_.size()) break;
            bool first = true;
            for (auto& [k, v] : entries_[i].items()) {
                out << (first ? "" : " ") << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
                first = false;
            }
            out << '\n';
        }
    }

private:
    std::vector<Json> entries_;
    std::vector<std::string> groups_;
    std::vector<std::pair<std::size_t, std::string>> raw_;
};

}  // namespace qhash::cli
