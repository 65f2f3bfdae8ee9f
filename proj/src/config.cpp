#include "speclab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace speclab {

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Distribution: return "distribution";
        case ExperimentKind::Cluster: return "cluster";
        case ExperimentKind::Attract: return "attract";
        case ExperimentKind::Inequalities: return "inequalities";
        case ExperimentKind::Norms: return "norms";
        case ExperimentKind::BlockCheck: return "blockcheck";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigInvalid("expected a number, got '" + s + "'", line);
    }
}

std::int64_t parse_int(const std::string& s, int line) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ConfigInvalid("expected an integer, got '" + s + "'", line);
    return v;
}

cxd parse_point(const std::string& s, int line) {
    const std::vector<std::string> parts = split(s, ':');
    if (parts.size() == 1) return cxd(parse_double(parts[0], line), 0.0);
    if (parts.size() == 2) return cxd(parse_double(parts[0], line), parse_double(parts[1], line));
    throw ConfigInvalid("expected re or re:im, got '" + s + "'", line);
}

TestFunction parse_test_function(const std::string& s, int line) {
    const std::vector<std::string> parts = split(s, ':');
    if (parts.empty()) throw ConfigInvalid("empty test function spec", line);
    if (parts[0] == "monomial") {
        if (parts.size() != 2) throw ConfigInvalid("monomial takes one degree: monomial:q", line);
        return TestFunction::monomial(static_cast<int>(parse_int(parts[1], line)));
    }
    if (parts[0] == "hat") {
        if (parts.size() != 5)
            throw ConfigInvalid("hat takes hat:center_re:center_im:inner:outer", line);
        return TestFunction::hat(cxd(parse_double(parts[1], line), parse_double(parts[2], line)),
                                 parse_double(parts[3], line), parse_double(parts[4], line));
    }
    throw ConfigInvalid("unknown test function kind '" + parts[0] + "'", line);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_string(const std::string& text) {
    ExperimentConfig cfg;
    bool background_seen = false;
    std::vector<double> bg_a, bg_b;
    std::size_t bg_k = 0;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigInvalid("unterminated section header", line);
            section = trim(s.substr(1, s.size() - 2));
            const bool known = section == "experiment" || section == "background" ||
                               section == "sequence" || section == "ladder" ||
                               section == "epsilons" || section == "tests" ||
                               section == "attract" || section == "random" ||
                               section == "norms" || section == "blockcheck";
            if (!known) throw ConfigInvalid("unknown section [" + section + "]", line);
            if (section == "background") background_seen = true;
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigInvalid("expected key = value", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigInvalid("empty key or value", line);
        if (section.empty()) throw ConfigInvalid("key outside of any [section]", line);

        if (section == "experiment") {
            if (key == "kind") {
                if (value == "distribution") cfg.kind = ExperimentKind::Distribution;
                else if (value == "cluster") cfg.kind = ExperimentKind::Cluster;
                else if (value == "attract") cfg.kind = ExperimentKind::Attract;
                else if (value == "inequalities") cfg.kind = ExperimentKind::Inequalities;
                else if (value == "norms") cfg.kind = ExperimentKind::Norms;
                else if (value == "blockcheck") cfg.kind = ExperimentKind::BlockCheck;
                else throw ConfigInvalid("unknown experiment kind '" + value + "'", line);
            } else if (key == "seed") {
                cfg.seed = static_cast<std::uint64_t>(parse_int(value, line));
            } else if (key == "output") {
                cfg.output_dir = value;
            } else if (key == "quadrature") {
                cfg.quadrature_n = static_cast<std::size_t>(parse_int(value, line));
            } else if (key == "gap_threshold") {
                cfg.gap_threshold = parse_double(value, line);
            } else {
                throw ConfigInvalid("unknown key '" + key + "' in [experiment]", line);
            }
        } else if (section == "background") {
            if (key == "k") bg_k = static_cast<std::size_t>(parse_int(value, line));
            else if (key == "a") {
                for (const std::string& item : split(value, ','))
                    bg_a.push_back(parse_double(item, line));
            } else if (key == "b") {
                for (const std::string& item : split(value, ','))
                    bg_b.push_back(parse_double(item, line));
            } else {
                throw ConfigInvalid("unknown key '" + key + "' in [background]", line);
            }
        } else if (section == "sequence") {
            if (key == "preset") cfg.preset = value;
            else if (key == "amplitude") cfg.amplitude = parse_double(value, line);
            else throw ConfigInvalid("unknown key '" + key + "' in [sequence]", line);
        } else if (section == "ladder") {
            if (key == "n") {
                cfg.n_ladder.clear();
                for (const std::string& item : split(value, ',')) {
                    const std::int64_t n = parse_int(item, line);
                    if (n <= 0) throw ConfigInvalid("ladder entries must be positive", line);
                    cfg.n_ladder.push_back(static_cast<std::size_t>(n));
                }
            } else {
                throw ConfigInvalid("unknown key '" + key + "' in [ladder]", line);
            }
        } else if (section == "epsilons") {
            if (key == "values") {
                cfg.epsilons.clear();
                for (const std::string& item : split(value, ','))
                    cfg.epsilons.push_back(parse_double(item, line));
            } else {
                throw ConfigInvalid("unknown key '" + key + "' in [epsilons]", line);
            }
        } else if (section == "tests") {
            if (key == "functions") {
                cfg.test_functions.clear();
                for (const std::string& item : split(value, ','))
                    cfg.test_functions.push_back(parse_test_function(item, line));
            } else {
                throw ConfigInvalid("unknown key '" + key + "' in [tests]", line);
            }
        } else if (section == "attract") {
            if (key == "points") {
                cfg.attract_points.clear();
                for (const std::string& item : split(value, ','))
                    cfg.attract_points.push_back(parse_point(item, line));
            } else if (key == "j_max") {
                cfg.j_max = static_cast<std::size_t>(parse_int(value, line));
            } else {
                throw ConfigInvalid("unknown key '" + key + "' in [attract]", line);
            }
        } else if (section == "random") {
            if (key == "instances") cfg.instances = static_cast<std::size_t>(parse_int(value, line));
            else if (key == "min_order") cfg.min_order = static_cast<std::size_t>(parse_int(value, line));
            else if (key == "max_order") cfg.max_order = static_cast<std::size_t>(parse_int(value, line));
            else throw ConfigInvalid("unknown key '" + key + "' in [random]", line);
        } else if (section == "norms") {
            if (key == "diagonals") cfg.matrix_diagonals = static_cast<int>(parse_int(value, line));
            else if (key == "c_upper") cfg.c_upper = static_cast<int>(parse_int(value, line));
            else throw ConfigInvalid("unknown key '" + key + "' in [norms]", line);
        } else if (section == "blockcheck") {
            if (key == "max_m") cfg.max_m = static_cast<std::size_t>(parse_int(value, line));
            else if (key == "epsilon") cfg.block_epsilon = parse_double(value, line);
            else throw ConfigInvalid("unknown key '" + key + "' in [blockcheck]", line);
        }
    }

    if (background_seen) {
        if (bg_k == 0) throw ConfigInvalid("[background] requires k");
        cfg.background.k = bg_k;
        cfg.background.a_vec = bg_a;
        cfg.background.b_vec = bg_b;
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str());
}

void ExperimentConfig::validate() const {
    try {
        background.validate();
    } catch (const Error& e) {
        throw ConfigInvalid(e.what());
    }
    if (preset != "free") preset_description(preset);  // throws on unknown names

    const bool needs_ladder = kind == ExperimentKind::Distribution ||
                              kind == ExperimentKind::Cluster || kind == ExperimentKind::Attract;
    if (needs_ladder && n_ladder.empty())
        throw ConfigInvalid("[ladder] n is required for this experiment kind");
    for (std::size_t i = 0; i + 1 < n_ladder.size(); ++i)
        if (n_ladder[i] >= n_ladder[i + 1])
            throw ConfigInvalid("ladder must be strictly increasing");
    if (!n_ladder.empty() && n_ladder.back() > 4096)
        throw ConfigInvalid("ladder rungs must not exceed 4096");

    for (double e : epsilons)
        if (!(e > 0.0)) throw ConfigInvalid("epsilon values must be positive");
    if (kind == ExperimentKind::Cluster && epsilons.empty())
        throw ConfigInvalid("[epsilons] values is required for the cluster experiment");

    if (kind == ExperimentKind::Distribution && test_functions.empty())
        throw ConfigInvalid("[tests] functions is required for the distribution experiment");

    if (kind == ExperimentKind::Attract) {
        if (attract_points.empty())
            throw ConfigInvalid("[attract] points is required for the attract experiment");
        if (j_max == 0 || (!n_ladder.empty() && j_max > n_ladder.front()))
            throw ConfigInvalid("j_max must be in [1, smallest rung]");
    }

    if (kind == ExperimentKind::Inequalities || kind == ExperimentKind::Norms) {
        if (instances == 0) throw ConfigInvalid("[random] instances must be positive");
        if (min_order < 2 || max_order < min_order)
            throw ConfigInvalid("[random] orders must satisfy 2 <= min_order <= max_order");
    }

    if (kind == ExperimentKind::Norms) {
        if (matrix_diagonals < 1 || matrix_diagonals % 2 == 0)
            throw ConfigInvalid("[norms] diagonals must be odd and positive");
        if (c_upper == 0 || c_upper < -1) throw ConfigInvalid("[norms] c_upper must be positive");
    }

    if (kind == ExperimentKind::BlockCheck) {
        if (max_m == 0) throw ConfigInvalid("[blockcheck] max_m must be positive");
        if (!(block_epsilon > 0.0)) throw ConfigInvalid("[blockcheck] epsilon must be positive");
    }

    if (quadrature_n < 2) throw ConfigInvalid("quadrature size must be at least 2");
    if (!(gap_threshold > 0.0)) throw ConfigInvalid("gap_threshold must be positive");
}

}  // namespace speclab
