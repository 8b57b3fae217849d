#include "nss/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nss {

double ConfigValue::as_number() const {
    if (kind_ != Kind::number) throw ParseError("config value is not a number");
    return number_;
}

const std::string& ConfigValue::as_string() const {
    if (kind_ != Kind::string) throw ParseError("config value is not a string");
    return string_;
}

const std::vector<ConfigValue>& ConfigValue::as_array() const {
    if (kind_ != Kind::array) throw ParseError("config value is not an array");
    return array_;
}

Vector ConfigValue::as_vector() const {
    const auto& a = as_array();
    Vector v(static_cast<Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Index>(i)] = a[i].as_number();
    return v;
}

Matrix ConfigValue::as_matrix() const {
    const auto& rows = as_array();
    if (rows.empty()) throw ParseError("matrix value has no rows");
    const auto& first = rows[0].as_array();
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(first.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r].as_array();
        if (row.size() != first.size())
            throw ParseError("matrix value has ragged rows");
        for (std::size_t c = 0; c < row.size(); ++c)
            m(static_cast<Index>(r), static_cast<Index>(c)) = row[c].as_number();
    }
    return m;
}

const ConfigValue& ConfigMap::at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ParseError("missing config key: " + key);
    return it->second;
}

double ConfigMap::get_number(const std::string& key) const { return at(key).as_number(); }

double ConfigMap::get_number(const std::string& key, double fallback) const {
    return has(key) ? at(key).as_number() : fallback;
}

long ConfigMap::get_int(const std::string& key) const {
    double v = get_number(key);
    long n = std::lround(v);
    if (std::abs(v - static_cast<double>(n)) > 1e-9)
        throw ParseError("config key " + key + " is not an integer");
    return n;
}

long ConfigMap::get_int(const std::string& key, long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::string ConfigMap::get_string(const std::string& key) const { return at(key).as_string(); }

std::string ConfigMap::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? at(key).as_string() : fallback;
}

Vector ConfigMap::get_vector(const std::string& key) const { return at(key).as_vector(); }

Matrix ConfigMap::get_matrix(const std::string& key) const { return at(key).as_matrix(); }

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("config parse error at line " + std::to_string(line) + ": " + msg);
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }

    /// Skips spaces, tabs and comments. Newlines are skipped only when
    /// `newlines` is set (inside arrays they are insignificant).
    void skip_ws(bool newlines) {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string read_key() {
        std::string key;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
                key.push_back(advance());
            } else {
                break;
            }
        }
        if (key.empty()) fail("expected a key");
        return key;
    }

    ConfigValue read_value() {
        skip_ws(true);
        if (eof()) fail("expected a value");
        char c = peek();
        if (c == '[') return read_array();
        if (c == '"') return read_string();
        return read_number();
    }

    ConfigValue read_array() {
        advance();  // '['
        std::vector<ConfigValue> items;
        skip_ws(true);
        while (!eof() && peek() != ']') {
            items.push_back(read_value());
            skip_ws(true);
            if (!eof() && peek() == ',') {
                advance();
                skip_ws(true);
            }
        }
        if (eof()) fail("unterminated array");
        advance();  // ']'
        return ConfigValue(std::move(items));
    }

    ConfigValue read_string() {
        advance();  // '"'
        std::string s;
        while (!eof() && peek() != '"') {
            char c = advance();
            if (c == '\n') fail("unterminated string");
            s.push_back(c);
        }
        if (eof()) fail("unterminated string");
        advance();  // closing '"'
        return ConfigValue(std::move(s));
    }

    ConfigValue read_number() {
        std::size_t start = pos;
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
                c == '.' || c == 'e' || c == 'E' || c == 'n' || c == 'a' || c == 'i' ||
                c == 'f') {
                advance();
            } else {
                break;
            }
        }
        std::string tok = text.substr(start, pos - start);
        if (tok.empty()) fail("expected a number");
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) fail("malformed number '" + tok + "'");
            return ConfigValue(v);
        } catch (const std::logic_error&) {
            fail("malformed number '" + tok + "'");
        }
    }
};

}  // namespace

ConfigMap parse_config(const std::string& text) {
    Lexer lex(text);
    ConfigMap map;
    while (true) {
        lex.skip_ws(true);
        if (lex.eof()) break;
        std::string key = lex.read_key();
        lex.skip_ws(false);
        if (lex.eof() || lex.peek() != '=') lex.fail("expected '=' after key '" + key + "'");
        lex.advance();
        map.set(key, lex.read_value());
        lex.skip_ws(false);
        if (!lex.eof() && lex.peek() != '\n') lex.fail("trailing characters after value of '" + key + "'");
    }
    if (map.entries().empty()) throw ParseError("config is empty");
    return map;
}

ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string format_config_value(const ConfigValue& v) {
    std::ostringstream out;
    switch (v.kind()) {
        case ConfigValue::Kind::number: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v.as_number());
            out << buf;
            break;
        }
        case ConfigValue::Kind::string:
            out << '"' << v.as_string() << '"';
            break;
        case ConfigValue::Kind::array: {
            out << '[';
            const auto& items = v.as_array();
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i) out << ", ";
                out << format_config_value(items[i]);
            }
            out << ']';
            break;
        }
    }
    return out.str();
}

}  // namespace nss
