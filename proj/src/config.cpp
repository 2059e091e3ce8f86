#include "tuplecode/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tuplecode {

const char* test_id_name(TestId id) {
    switch (id) {
        case TestId::test1: return "test1";
        case TestId::test2: return "test2";
        case TestId::test3: return "test3";
        case TestId::custom: return "custom";
    }
    return "?";
}

std::vector<double> default_probability_grid() {
    return {0.001, 0.002, 0.005, 0.007, 0.008, 0.01, 0.02, 0.05, 0.07, 0.08,
            0.1,   0.2,   0.3,   0.4,   0.5,   0.6,  0.7,  0.8,  0.9,  1.0};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> parts;
    while (!s.empty()) {
        const std::size_t comma = s.find(',');
        parts.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return parts;
}

long long parse_int(std::string_view s, const std::string& key) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("config: bad integer for '" + key + "': " + std::string(s));
    return value;
}

std::uint64_t parse_u64(std::string_view s, const std::string& key) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("config: bad unsigned for '" + key + "': " + std::string(s));
    return value;
}

double parse_double(std::string_view s, const std::string& key) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("config: bad number for '" + key + "': " + std::string(s));
    return value;
}

} // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "test") {
            if (value == "test1" || value == "1") cfg.test_id = TestId::test1;
            else if (value == "test2" || value == "2") cfg.test_id = TestId::test2;
            else if (value == "test3" || value == "3") cfg.test_id = TestId::test3;
            else if (value == "custom") cfg.test_id = TestId::custom;
            else throw std::invalid_argument("config: unknown test '" + std::string(value) + "'");
        } else if (key == "message_bits") {
            cfg.message_bits = static_cast<int>(parse_int(value, key));
        } else if (key == "iterations") {
            cfg.iterations = static_cast<int>(parse_int(value, key));
        } else if (key == "probabilities") {
            cfg.probability_grid.clear();
            for (std::string_view p : split_list(value))
                cfg.probability_grid.push_back(parse_double(p, key));
        } else if (key == "codeword_lengths") {
            cfg.codeword_lengths.clear();
            for (std::string_view p : split_list(value))
                cfg.codeword_lengths.push_back(static_cast<int>(parse_int(p, key)));
        } else if (key == "tuple_lengths") {
            cfg.tuple_lengths.clear();
            if (value != "all-valid")
                for (std::string_view p : split_list(value))
                    cfg.tuple_lengths.push_back(static_cast<int>(parse_int(p, key)));
        } else if (key == "classifiers") {
            if (value == "max") {
                cfg.classifier_spec = ClassifierSpec{};
            } else if (value.starts_with("remove:")) {
                cfg.classifier_spec.max = false;
                cfg.classifier_spec.removed_ordinals.clear();
                for (std::string_view p : split_list(value.substr(7)))
                    cfg.classifier_spec.removed_ordinals.push_back(
                        static_cast<int>(parse_int(p, key)));
            } else {
                throw std::invalid_argument(
                    "config: classifiers must be 'max' or 'remove:<ordinals>'");
            }
        } else if (key == "codebook_file") {
            cfg.codebook_source.file = std::string(value);
        } else if (key == "codebook_seed") {
            cfg.codebook_source.seed = parse_u64(value, key);
        } else if (key == "seed") {
            cfg.master_seed = parse_u64(value, key);
        } else if (key == "reencode") {
            if (value == "true" || value == "1") cfg.reencode_each_iteration = true;
            else if (value == "false" || value == "0") cfg.reencode_each_iteration = false;
            else throw std::invalid_argument("config: reencode must be true or false");
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_to_text(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "test = " << test_id_name(cfg.test_id) << "\n";
    out << "message_bits = " << cfg.message_bits << "\n";
    out << "iterations = " << cfg.iterations << "\n";
    const std::vector<double> grid =
        cfg.probability_grid.empty() ? default_probability_grid() : cfg.probability_grid;
    out << "probabilities = ";
    for (std::size_t i = 0; i < grid.size(); ++i) out << (i ? "," : "") << grid[i];
    out << "\n";
    if (!cfg.codeword_lengths.empty()) {
        out << "codeword_lengths = ";
        for (std::size_t i = 0; i < cfg.codeword_lengths.size(); ++i)
            out << (i ? "," : "") << cfg.codeword_lengths[i];
        out << "\n";
    }
    if (cfg.tuple_lengths.empty()) {
        out << "tuple_lengths = all-valid\n";
    } else {
        out << "tuple_lengths = ";
        for (std::size_t i = 0; i < cfg.tuple_lengths.size(); ++i)
            out << (i ? "," : "") << cfg.tuple_lengths[i];
        out << "\n";
    }
    if (cfg.classifier_spec.max) {
        out << "classifiers = max\n";
    } else {
        out << "classifiers = remove:";
        for (std::size_t i = 0; i < cfg.classifier_spec.removed_ordinals.size(); ++i)
            out << (i ? "," : "") << cfg.classifier_spec.removed_ordinals[i];
        out << "\n";
    }
    if (!cfg.codebook_source.file.empty())
        out << "codebook_file = " << cfg.codebook_source.file << "\n";
    out << "codebook_seed = " << cfg.codebook_source.seed << "\n";
    out << "seed = " << cfg.master_seed << "\n";
    out << "reencode = " << (cfg.reencode_each_iteration ? "true" : "false") << "\n";
    return out.str();
}

std::vector<std::string> validate_config(const ExperimentConfig& cfg) {
    std::vector<std::string> violations;
    auto flag = [&](std::string msg) { violations.push_back(std::move(msg)); };

    if (cfg.message_bits <= 0) flag("message_bits must be positive");
    if (cfg.iterations < 1) flag("iterations must be at least 1");

    std::vector<int> lengths = cfg.codeword_lengths;
    if (lengths.empty()) {
        switch (cfg.test_id) {
            case TestId::test1: lengths = {3, 4, 5, 6, 7, 8}; break;
            case TestId::test2: lengths = {8}; break;
            case TestId::test3: lengths = {8, 12}; break;
            case TestId::custom: flag("custom runs need codeword_lengths"); break;
        }
    }
    for (int n : lengths) {
        if (n <= 2) flag("codeword length must satisfy n > 2, got " + std::to_string(n));
        else if (cfg.message_bits > 0 && cfg.message_bits % n != 0)
            flag("message_bits=" + std::to_string(cfg.message_bits) +
                 " is not divisible by codeword length " + std::to_string(n));
    }
    for (int N : cfg.tuple_lengths) {
        if (N <= 1) flag("tuple length must satisfy N > 1, got " + std::to_string(N));
        for (int n : lengths)
            if (n > 2 && N > n)
                flag("tuple length N=" + std::to_string(N) + " exceeds codeword length n=" +
                     std::to_string(n));
    }
    for (double p : (cfg.probability_grid.empty() ? default_probability_grid()
                                                  : cfg.probability_grid))
        if (p < 0.0 || p > 1.0)
            flag("probability outside [0,1]: " + std::to_string(p));

    return violations;
}

} // namespace tuplecode
