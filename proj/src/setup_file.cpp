#include "jetpoisson/setup_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "jetpoisson/parser.hpp"
#include "jetpoisson/printer.hpp"

namespace jetpoisson {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
T parse_number(const std::string& value, std::size_t line, const char* key) {
    T n{};
    auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc{} || end != value.data() + value.size())
        throw SetupError(std::string(key) + " expects a non-negative integer, got '" + value + "'", line);
    return n;
}

struct RawSection {
    std::string header;
    std::size_t header_line = 0;
    std::vector<std::pair<std::string, std::string>> keys;
    std::vector<std::size_t> key_lines;
};

}  // namespace

SetupFile parse_setup(const std::string& text) {
    std::vector<RawSection> sections;
    std::stringstream ss(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw SetupError("unterminated section header", line_no);
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) throw SetupError("empty section header", line_no);
            sections.push_back({name, line_no, {}, {}});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw SetupError("expected 'key = value'", line_no);
        if (sections.empty()) throw SetupError("key outside any section", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw SetupError("empty key", line_no);
        sections.back().keys.push_back({key, value});
        sections.back().key_lines.push_back(line_no);
    }

    std::optional<Signature> sig;
    std::vector<NamedOperator> operators;
    SetupOptions options;

    for (const auto& section : sections) {
        if (section.header == "signature") {
            if (sig) throw SetupError("duplicate [signature] section", section.header_line);
            std::vector<std::string> indep, dep;
            for (std::size_t k = 0; k < section.keys.size(); ++k) {
                const auto& [key, value] = section.keys[k];
                if (key == "independent")
                    indep = split_names(value);
                else if (key == "dependent")
                    dep = split_names(value);
                else
                    throw SetupError("unknown signature key '" + key + "'", section.key_lines[k]);
            }
            if (indep.empty()) indep = {"x"};
            if (dep.empty()) dep = {"u"};
            try {
                sig.emplace(indep, dep);
            } catch (const std::invalid_argument& err) {
                throw SetupError(err.what(), section.header_line);
            }
        } else if (section.header == "operator" || section.header.rfind("operator ", 0) == 0) {
            std::string name = trim(section.header.substr(8));
            if (name.empty()) throw SetupError("operator section needs a name", section.header_line);
            if (!sig) throw SetupError("[signature] must precede operator sections", section.header_line);
            for (const auto& other : operators)
                if (other.name == name)
                    throw SetupError("duplicate operator '" + name + "'", section.header_line);
            std::optional<DiffOperator> op;
            for (std::size_t k = 0; k < section.keys.size(); ++k) {
                const auto& [key, value] = section.keys[k];
                if (key != "matrix")
                    throw SetupError("unknown operator key '" + key + "'", section.key_lines[k]);
                try {
                    op = parse_operator(*sig, value);
                } catch (const ParseError& err) {
                    throw SetupError(std::string("in matrix: ") + err.what(), section.key_lines[k]);
                }
            }
            if (!op) throw SetupError("operator section needs a matrix key", section.header_line);
            operators.push_back({name, std::move(*op)});
        } else if (section.header == "options") {
            for (std::size_t k = 0; k < section.keys.size(); ++k) {
                const auto& [key, value] = section.keys[k];
                std::size_t at = section.key_lines[k];
                if (key == "max_degree")
                    options.max_degree = parse_number<unsigned>(value, at, "max_degree");
                else if (key == "max_order")
                    options.max_order = parse_number<unsigned>(value, at, "max_order");
                else if (key == "seed")
                    options.seed = parse_number<std::uint64_t>(value, at, "seed");
                else
                    throw SetupError("unknown option '" + key + "'", at);
            }
        } else {
            throw SetupError("unknown section [" + section.header + "]", section.header_line);
        }
    }

    if (!sig) throw SetupError("missing [signature] section", line_no == 0 ? 1 : line_no);
    return {std::move(*sig), std::move(operators), options};
}

SetupFile load_setup(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open setup file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_setup(buffer.str());
}

std::string canonical_text(const SetupFile& setup) {
    std::string out = "[signature]\nindependent = ";
    for (unsigned mu = 0; mu < setup.sig.m(); ++mu) {
        if (mu) out += ", ";
        out += setup.sig.indep_name(mu);
    }
    out += "\ndependent = ";
    for (unsigned a = 0; a < setup.sig.main_deps(); ++a) {
        if (a) out += ", ";
        out += setup.sig.dep_name(a);
    }
    out += "\n";
    for (const auto& named : setup.operators) {
        out += "\n[operator " + named.name + "]\nmatrix = ";
        out += to_string(setup.sig, named.op);
        out += "\n";
    }
    SetupOptions defaults;
    if (setup.options.max_degree != defaults.max_degree ||
        setup.options.max_order != defaults.max_order || setup.options.seed != defaults.seed) {
        out += "\n[options]\n";
        if (setup.options.max_degree != defaults.max_degree)
            out += "max_degree = " + std::to_string(setup.options.max_degree) + "\n";
        if (setup.options.max_order != defaults.max_order)
            out += "max_order = " + std::to_string(setup.options.max_order) + "\n";
        if (setup.options.seed != defaults.seed)
            out += "seed = " + std::to_string(setup.options.seed) + "\n";
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string setup_digest(const SetupFile& setup) {
    std::uint64_t h = fnv1a64(canonical_text(setup));
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace jetpoisson
