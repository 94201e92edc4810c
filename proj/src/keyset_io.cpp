#include "qhash/keyset.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qhash {

KeySet::KeySet(std::uint64_t modulus, std::vector<std::uint64_t> keys)
    : modulus_(modulus), keys_(std::move(keys)) {
    if (modulus_ < 2) throw std::invalid_argument("key set modulus must be at least 2");
    if (keys_.empty()) throw std::invalid_argument("key set must contain at least one key");
    for (auto k : keys_) {
        if (k >= modulus_)
            throw std::invalid_argument("key " + std::to_string(k) + " outside [0, " +
                                        std::to_string(modulus_) + ")");
    }
}

std::optional<double> KeySet::declared_epsilon() const {
    if (epsilon_field_ == "-") return std::nullopt;
    return std::stod(epsilon_field_);
}

void KeySet::set_epsilon_field(std::string field) {
    if (field != "-") {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != field.size() || !(v > 0))
            throw std::invalid_argument("epsilon must be a positive number or '-', got '" + field + "'");
    }
    epsilon_field_ = std::move(field);
}

KeySet full_residue_set(std::uint64_t modulus) {
    std::vector<std::uint64_t> keys(modulus);
    std::iota(keys.begin(), keys.end(), std::uint64_t{0});
    return KeySet(modulus, std::move(keys));
}

namespace {

std::uint64_t parse_u64(const std::string& token, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
    return value;
}

// Splits a non-comment line into tokens; returns false for blank/comment lines.
bool tokenize(const std::string& raw, std::vector<std::string>& tokens) {
    tokens.clear();
    std::istringstream ss(raw);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return !tokens.empty() && tokens.front().front() != '#';
}

std::string header_value(const std::vector<std::string>& tokens, const char* name, std::size_t line) {
    if (tokens.size() != 2 || tokens[0] != name)
        throw ParseError(line, std::string("expected '") + name + " <value>'");
    return tokens[1];
}

}  // namespace

KeySet parse_keyset(std::istream& in) {
    std::string raw;
    std::vector<std::string> tokens;
    std::size_t line = 0;
    int header = 0;
    std::uint64_t modulus = 0;
    std::uint64_t count = 0;
    std::string epsilon;
    std::size_t epsilon_line = 0;
    std::vector<std::uint64_t> keys;

    while (std::getline(in, raw)) {
        ++line;
        if (!tokenize(raw, tokens)) continue;
        switch (header) {
            case 0:
                modulus = parse_u64(header_value(tokens, "N", line), line);
                if (modulus < 2) throw ParseError(line, "modulus must be at least 2");
                ++header;
                continue;
            case 1:
                count = parse_u64(header_value(tokens, "d", line), line);
                if (count == 0) throw ParseError(line, "key count must be positive");
                ++header;
                continue;
            case 2:
                epsilon = header_value(tokens, "epsilon", line);
                epsilon_line = line;
                ++header;
                continue;
            default:
                break;
        }
        if (tokens.size() != 1) throw ParseError(line, "expected exactly one key per line");
        const auto key = parse_u64(tokens[0], line);
        if (key >= modulus)
            throw ParseError(line, "key " + tokens[0] + " outside [0, " + std::to_string(modulus) + ")");
        keys.push_back(key);
    }
    if (header < 3) throw ParseError(line + 1, "unexpected end of file in header");
    if (keys.size() != count)
        throw ParseError(line + 1, "declared d " + std::to_string(count) + " but found " +
                                       std::to_string(keys.size()) + " keys");

    KeySet result(modulus, std::move(keys));
    try {
        result.set_epsilon_field(epsilon);
    } catch (const std::invalid_argument& e) {
        throw ParseError(epsilon_line, e.what());
    }
    return result;
}

KeySet parse_keyset(const std::string& text) {
    std::istringstream in(text);
    return parse_keyset(in);
}

KeySet load_keyset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open key-set file '" + path + "'");
    return parse_keyset(in);
}

std::string format_keyset(const KeySet& keyset) {
    std::string out;
    out += "N " + std::to_string(keyset.modulus()) + "\n";
    out += "d " + std::to_string(keyset.size()) + "\n";
    out += "epsilon " + keyset.epsilon_field() + "\n";
    for (auto k : keyset.keys()) out += std::to_string(k) + "\n";
    return out;
}

void save_keyset(const KeySet& keyset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write key-set file '" + path + "'");
    out << format_keyset(keyset);
}

}  // namespace qhash
