#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhash {

/// Raised for malformed key-set or code files. `line()` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Hash parameter set: a modulus N and a multiset of residues in [0, N).
///
/// Keys are kept in the order given, repeats included.
class KeySet {
public:
    KeySet(std::uint64_t modulus, std::vector<std::uint64_t> keys);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
    [[nodiscard]] const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
    [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }
    [[nodiscard]] std::uint64_t operator[](std::size_t i) const { return keys_[i]; }

    /// The `epsilon` header field as written, "-" when absent.
    [[nodiscard]] const std::string& epsilon_field() const noexcept { return epsilon_field_; }
    [[nodiscard]] std::optional<double> declared_epsilon() const;
    void set_epsilon_field(std::string field);

    friend bool operator==(const KeySet&, const KeySet&) = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> keys_;
    std::string epsilon_field_ = "-";
};

/// Every residue of Z_N once, in increasing order.
KeySet full_residue_set(std::uint64_t modulus);

// Text format:
//   N <modulus>
//   d <count>
//   epsilon <bound or ->
//   <key>            (one per line)
// Blank lines and lines starting with '#' are ignored; fields are whitespace separated.
KeySet parse_keyset(std::istream& in);
KeySet parse_keyset(const std::string& text);
KeySet load_keyset(const std::string& path);

std::string format_keyset(const KeySet& keyset);
void save_keyset(const KeySet& keyset, const std::string& path);

}  // namespace qhash
