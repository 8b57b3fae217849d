#pragma once

// Structured-text config format used by .circuit, .pwm, .input, .scenario and
// bundle.meta files: one `key = value` statement per entry, where value is a
// decimal number, a double-quoted string, or a (possibly nested, possibly
// multi-line) bracketed array. `#` starts a comment. Keys may be dotted
// (e.g. `pair.0.duty`); the map is flat.

#include "nss/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace nss {

class ConfigValue {
public:
    enum class Kind { number, string, array };

    ConfigValue() : kind_(Kind::number), number_(0.0) {}
    explicit ConfigValue(double v) : kind_(Kind::number), number_(v) {}
    explicit ConfigValue(std::string s) : kind_(Kind::string), string_(std::move(s)) {}
    explicit ConfigValue(std::vector<ConfigValue> a)
        : kind_(Kind::array), array_(std::move(a)) {}

    Kind kind() const { return kind_; }
    bool is_number() const { return kind_ == Kind::number; }
    bool is_string() const { return kind_ == Kind::string; }
    bool is_array() const { return kind_ == Kind::array; }

    double as_number() const;
    const std::string& as_string() const;
    const std::vector<ConfigValue>& as_array() const;

    /// Array of numbers -> Vector.
    Vector as_vector() const;
    /// Array of equal-length number arrays -> Matrix (row-major source order).
    Matrix as_matrix() const;

private:
    Kind kind_;
    double number_ = 0.0;
    std::string string_;
    std::vector<ConfigValue> array_;
};

class ConfigMap {
public:
    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    const ConfigValue& at(const std::string& key) const;

    double get_number(const std::string& key) const;
    double get_number(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    Vector get_vector(const std::string& key) const;
    Matrix get_matrix(const std::string& key) const;

    void set(const std::string& key, ConfigValue v) { entries_[key] = std::move(v); }

    const std::map<std::string, ConfigValue>& entries() const { return entries_; }

private:
    std::map<std::string, ConfigValue> entries_;
};

/// Parses config text. Throws ParseError (with line number) on malformed
/// input; an empty or comment-only file is a ParseError.
ConfigMap parse_config(const std::string& text);

/// Reads and parses a config file. Throws ParseError if unreadable.
ConfigMap parse_config_file(const std::string& path);

/// Serializes a value in the same format parse_config accepts.
std::string format_config_value(const ConfigValue& v);

}  // namespace nss
