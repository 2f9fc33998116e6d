#include "dupdel/report.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace dupdel {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kCompareHeader = "d,empirical_mean,empirical_stderr,theoretical,gap,verdict";

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error("report: " + what); }

std::uint64_t to_u64(const std::string& s) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0' || errno == ERANGE || s[0] == '-') fail("bad integer '" + s + "'");
    return v;
}

int to_int(const std::string& s) { return static_cast<int>(to_u64(s)); }

bool to_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    fail("bad boolean '" + s + "'");
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// ---- flat key/value form shared by CSV and by parsed JSON -----------------

using FlatRows = std::vector<std::pair<std::string, std::string>>;

void flatten(const ordered_json& j, const std::string& prefix, FlatRows& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_boolean()) {
        out.emplace_back(prefix, j.get<bool>() ? "true" : "false");
    } else if (j.is_number_unsigned()) {
        out.emplace_back(prefix, std::to_string(j.get<std::uint64_t>()));
    } else if (j.is_number_integer()) {
        out.emplace_back(prefix, std::to_string(j.get<std::int64_t>()));
    } else {
        fail("unsupported value at '" + prefix + "'");  // raw floats never appear: they travel as strings
    }
}

// Consumable key -> value map; parsing must account for every key.
class FlatMap {
public:
    explicit FlatMap(FlatRows rows) {
        for (auto& [k, v] : rows) {
            const auto [it, inserted] = map_.emplace(std::move(k), std::move(v));
            if (!inserted) fail("duplicate key '" + it->first + "'");
        }
    }

    bool has(const std::string& key) const { return map_.count(key) != 0; }

    std::string take(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end()) fail("missing field '" + key + "'");
        std::string value = std::move(it->second);
        map_.erase(it);
        return value;
    }

    std::optional<std::string> take_opt(const std::string& key) {
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        std::string value = std::move(it->second);
        map_.erase(it);
        return value;
    }

    void finish() const {
        if (!map_.empty()) fail("unexpected field '" + map_.begin()->first + "'");
    }

private:
    std::map<std::string, std::string> map_;
};

std::optional<double> take_decimal_opt(FlatMap& m, const std::string& key) {
    auto s = m.take_opt(key);
    if (!s) return std::nullopt;
    return parse_decimal(*s);
}

// ---- CSV text ----------------------------------------------------------

std::string csv_escape(const std::string& s) {
    if (s.find_first_of("\n\r") != std::string::npos) fail("value may not contain line breaks");
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) fail("unterminated quote in CSV line");
    fields.push_back(std::move(cur));
    return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    return lines;
}

std::string flat_to_csv(const FlatRows& rows) {
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) {
        out += csv_escape(k);
        out += ',';
        out += csv_escape(v);
        out += '\n';
    }
    return out;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

// Parses either format into flat rows (comparison CSV is handled separately).
FlatRows text_to_flat(const std::string& text) {
    FlatRows rows;
    if (looks_like_json(text)) {
        flatten(ordered_json::parse(text), "", rows);
        return rows;
    }
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "key,value") fail("expected 'key,value' CSV header");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_csv_line(lines[i]);
        if (fields.size() != 2) fail("expected 2 fields on CSV line " + std::to_string(i + 1));
        rows.emplace_back(std::move(fields[0]), std::move(fields[1]));
    }
    return rows;
}

std::string serialize_tree(const ordered_json& tree, Format format) {
    if (format == Format::json) return tree.dump(2) + "\n";
    FlatRows rows;
    flatten(tree, "", rows);
    return flat_to_csv(rows);
}

// ---- simulation report ---------------------------------------------------

ordered_json tree_of(const RunReport& r) {
    ordered_json j;
    j["kind"] = "simulate";
    auto& cfg = j["config"];
    cfg["version"] = r.config.version;
    cfg["steps"] = r.config.steps;
    cfg["seeds"] = r.config.seeds;
    cfg["checkpoints"] = r.config.checkpoints;
    cfg["dmax"] = r.config.dmax;
    cfg["couple"] = r.config.couple;
    j["checkpoints"] = ordered_json::array();
    for (const CheckpointReport& cp : r.checkpoints) {
        ordered_json c;
        c["step"] = cp.step;
        c["vertex_count"] = cp.vertex_count;
        c["degrees"] = ordered_json::array();
        for (const DegreeRow& row : cp.degrees)
            c["degrees"].push_back({{"d", row.d},
                                    {"proportion", format_decimal(row.proportion)},
                                    {"stderr", format_decimal(row.stderr_)}});
        c["cliques"] = ordered_json::array();
        for (const CliqueRow& row : cp.cliques)
            c["cliques"].push_back({{"k", row.k},
                                    {"proportion", format_decimal(row.proportion)},
                                    {"stderr", format_decimal(row.stderr_)},
                                    {"per_step", format_decimal(row.per_step)}});
        auto& g = c["growth"];
        g["edges_mean"] = format_decimal(cp.growth.edges_mean);
        g["edges_per_step_mean"] = format_decimal(cp.growth.edges_per_step_mean);
        g["edges_per_step_min"] = format_decimal(cp.growth.edges_per_step_min);
        g["edges_per_step_max"] = format_decimal(cp.growth.edges_per_step_max);
        g["max_degree_max"] = cp.growth.max_degree_max;
        if (cp.growth.has_red) {
            g["red_vertices_max"] = cp.growth.red_vertices_max;
            g["red_edges_max"] = cp.growth.red_edges_max;
        }
        if (cp.couple_match) c["couple_match"] = *cp.couple_match;
        j["checkpoints"].push_back(std::move(c));
    }
    auto& cl = j["clustering"];
    cl["global_mean"] = format_decimal(r.clustering.global_mean);
    cl["global_stderr"] = format_decimal(r.clustering.global_stderr);
    cl["global_min"] = format_decimal(r.clustering.global_min);
    cl["global_max"] = format_decimal(r.clustering.global_max);
    cl["average_mean"] = format_decimal(r.clustering.average_mean);
    cl["average_stderr"] = format_decimal(r.clustering.average_stderr);
    cl["average_min"] = format_decimal(r.clustering.average_min);
    cl["average_max"] = format_decimal(r.clustering.average_max);
    if (r.couple_all_match) j["couple_all_match"] = *r.couple_all_match;
    return j;
}

RunReport run_report_from_flat(FlatMap& m) {
    if (m.take("kind") != "simulate") fail("not a simulation report");
    RunReport r;
    r.config.version = to_int(m.take("config.version"));
    r.config.steps = to_u64(m.take("config.steps"));
    for (std::size_t i = 0; m.has("config.seeds." + std::to_string(i)); ++i)
        r.config.seeds.push_back(to_u64(m.take("config.seeds." + std::to_string(i))));
    for (std::size_t i = 0; m.has("config.checkpoints." + std::to_string(i)); ++i)
        r.config.checkpoints.push_back(to_u64(m.take("config.checkpoints." + std::to_string(i))));
    r.config.dmax = to_int(m.take("config.dmax"));
    r.config.couple = to_bool(m.take("config.couple"));
    for (std::size_t c = 0; m.has("checkpoints." + std::to_string(c) + ".step"); ++c) {
        const std::string p = "checkpoints." + std::to_string(c) + ".";
        CheckpointReport cp;
        cp.step = to_u64(m.take(p + "step"));
        cp.vertex_count = to_u64(m.take(p + "vertex_count"));
        for (std::size_t i = 0; m.has(p + "degrees." + std::to_string(i) + ".d"); ++i) {
            const std::string q = p + "degrees." + std::to_string(i) + ".";
            DegreeRow row;
            row.d = to_int(m.take(q + "d"));
            row.proportion = parse_decimal(m.take(q + "proportion"));
            row.stderr_ = parse_decimal(m.take(q + "stderr"));
            cp.degrees.push_back(row);
        }
        for (std::size_t i = 0; m.has(p + "cliques." + std::to_string(i) + ".k"); ++i) {
            const std::string q = p + "cliques." + std::to_string(i) + ".";
            CliqueRow row;
            row.k = to_int(m.take(q + "k"));
            row.proportion = parse_decimal(m.take(q + "proportion"));
            row.stderr_ = parse_decimal(m.take(q + "stderr"));
            row.per_step = parse_decimal(m.take(q + "per_step"));
            cp.cliques.push_back(row);
        }
        cp.growth.edges_mean = parse_decimal(m.take(p + "growth.edges_mean"));
        cp.growth.edges_per_step_mean = parse_decimal(m.take(p + "growth.edges_per_step_mean"));
        cp.growth.edges_per_step_min = parse_decimal(m.take(p + "growth.edges_per_step_min"));
        cp.growth.edges_per_step_max = parse_decimal(m.take(p + "growth.edges_per_step_max"));
        cp.growth.max_degree_max = to_u64(m.take(p + "growth.max_degree_max"));
        if (m.has(p + "growth.red_vertices_max")) {
            cp.growth.has_red = true;
            cp.growth.red_vertices_max = to_u64(m.take(p + "growth.red_vertices_max"));
            cp.growth.red_edges_max = to_u64(m.take(p + "growth.red_edges_max"));
        }
        if (auto s = m.take_opt(p + "couple_match")) cp.couple_match = to_bool(*s);
        r.checkpoints.push_back(std::move(cp));
    }
    r.clustering.global_mean = parse_decimal(m.take("clustering.global_mean"));
    r.clustering.global_stderr = parse_decimal(m.take("clustering.global_stderr"));
    r.clustering.global_min = parse_decimal(m.take("clustering.global_min"));
    r.clustering.global_max = parse_decimal(m.take("clustering.global_max"));
    r.clustering.average_mean = parse_decimal(m.take("clustering.average_mean"));
    r.clustering.average_stderr = parse_decimal(m.take("clustering.average_stderr"));
    r.clustering.average_min = parse_decimal(m.take("clustering.average_min"));
    r.clustering.average_max = parse_decimal(m.take("clustering.average_max"));
    if (auto s = m.take_opt("couple_all_match")) r.couple_all_match = to_bool(*s);
    m.finish();
    return r;
}

// ---- theory table ----------------------------------------------------------

ordered_json tree_of(const TheoryTable& t) {
    ordered_json j;
    j["kind"] = "theory";
    j["dmax"] = t.dmax;
    j["tol"] = format_decimal(t.tol);
    j["methods"] = t.methods;
    if (t.fixed_point) {
        auto& fp = j["fixed_point"];
        fp["k_max"] = t.fixed_point->k_max;
        fp["sweeps"] = t.fixed_point->sweeps;
        fp["enclosure"] = format_decimal(t.fixed_point->enclosure);
    }
    j["rows"] = ordered_json::array();
    for (const TheoryRow& row : t.rows) {
        ordered_json r;
        r["d"] = row.d;
        if (row.fixed_point) r["fixed_point"] = format_decimal(*row.fixed_point);
        if (row.quadrature) r["quadrature"] = format_decimal(*row.quadrature);
        if (row.asymptotic) r["asymptotic"] = format_decimal(*row.asymptotic);
        if (row.recursion_residual) r["recursion_residual"] = format_decimal(*row.recursion_residual);
        if (row.cross_method_gap) r["cross_method_gap"] = format_decimal(*row.cross_method_gap);
        j["rows"].push_back(std::move(r));
    }
    if (t.normalization_residual) j["normalization_residual"] = format_decimal(*t.normalization_residual);
    if (!t.asymptotic_note.empty()) j["asymptotic_note"] = t.asymptotic_note;
    return j;
}

TheoryTable theory_from_flat(FlatMap& m) {
    if (m.take("kind") != "theory") fail("not a theory table");
    TheoryTable t;
    t.dmax = to_int(m.take("dmax"));
    t.tol = parse_decimal(m.take("tol"));
    for (std::size_t i = 0; m.has("methods." + std::to_string(i)); ++i)
        t.methods.push_back(m.take("methods." + std::to_string(i)));
    if (m.has("fixed_point.k_max")) {
        TheoryFixedPointMeta fp;
        fp.k_max = to_int(m.take("fixed_point.k_max"));
        fp.sweeps = to_u64(m.take("fixed_point.sweeps"));
        fp.enclosure = parse_decimal(m.take("fixed_point.enclosure"));
        t.fixed_point = fp;
    }
    for (std::size_t i = 0; m.has("rows." + std::to_string(i) + ".d"); ++i) {
        const std::string p = "rows." + std::to_string(i) + ".";
        TheoryRow row;
        row.d = to_int(m.take(p + "d"));
        row.fixed_point = take_decimal_opt(m, p + "fixed_point");
        row.quadrature = take_decimal_opt(m, p + "quadrature");
        row.asymptotic = take_decimal_opt(m, p + "asymptotic");
        row.recursion_residual = take_decimal_opt(m, p + "recursion_residual");
        row.cross_method_gap = take_decimal_opt(m, p + "cross_method_gap");
        t.rows.push_back(row);
    }
    t.normalization_residual = take_decimal_opt(m, "normalization_residual");
    if (auto s = m.take_opt("asymptotic_note")) t.asymptotic_note = *s;
    m.finish();
    return t;
}

// ---- comparison report ---------------------------------------------------

ordered_json tree_of(const CompareReport& c) {
    ordered_json j;
    j["kind"] = "compare";
    j["rows"] = ordered_json::array();
    for (const CompareRow& row : c.rows) {
        ordered_json r;
        if (all_digits(row.label))
            r["d"] = to_u64(row.label);
        else
            r["d"] = row.label;
        if (row.empirical_mean) r["empirical_mean"] = format_decimal(*row.empirical_mean);
        if (row.empirical_stderr) r["empirical_stderr"] = format_decimal(*row.empirical_stderr);
        if (row.theoretical) r["theoretical"] = format_decimal(*row.theoretical);
        if (row.gap) r["gap"] = format_decimal(*row.gap);
        r["verdict"] = row.verdict;
        j["rows"].push_back(std::move(r));
    }
    j["verdict"] = c.verdict;
    return j;
}

CompareReport compare_from_flat(FlatMap& m) {
    if (m.take("kind") != "compare") fail("not a comparison report");
    CompareReport c;
    for (std::size_t i = 0; m.has("rows." + std::to_string(i) + ".d"); ++i) {
        const std::string p = "rows." + std::to_string(i) + ".";
        CompareRow row;
        row.label = m.take(p + "d");
        row.empirical_mean = take_decimal_opt(m, p + "empirical_mean");
        row.empirical_stderr = take_decimal_opt(m, p + "empirical_stderr");
        row.theoretical = take_decimal_opt(m, p + "theoretical");
        row.gap = take_decimal_opt(m, p + "gap");
        row.verdict = m.take(p + "verdict");
        c.rows.push_back(std::move(row));
    }
    c.verdict = m.take("verdict");
    m.finish();
    return c;
}

std::string compare_to_csv(const CompareReport& c) {
    std::string out = std::string(kCompareHeader) + "\n";
    auto cell = [](const std::optional<double>& v) { return v ? format_decimal(*v) : std::string(); };
    for (const CompareRow& row : c.rows) {
        out += csv_escape(row.label) + ',' + cell(row.empirical_mean) + ',' + cell(row.empirical_stderr) + ',' +
               cell(row.theoretical) + ',' + cell(row.gap) + ',' + csv_escape(row.verdict) + '\n';
    }
    out += "overall,,,,," + csv_escape(c.verdict) + '\n';
    return out;
}

CompareReport compare_from_csv(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kCompareHeader) fail("expected comparison CSV header");
    if (lines.size() < 2) fail("comparison CSV has no overall row");
    CompareReport c;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_csv_line(lines[i]);
        if (fields.size() != 6) fail("expected 6 fields on CSV line " + std::to_string(i + 1));
        auto cell = [&](std::size_t k) -> std::optional<double> {
            if (fields[k].empty()) return std::nullopt;
            return parse_decimal(fields[k]);
        };
        if (fields[0] == "overall") {
            if (i + 1 != lines.size()) fail("overall row must be last");
            c.verdict = fields[5];
            return c;
        }
        CompareRow row;
        row.label = std::move(fields[0]);
        row.empirical_mean = cell(1);
        row.empirical_stderr = cell(2);
        row.theoretical = cell(3);
        row.gap = cell(4);
        row.verdict = std::move(fields[5]);
        c.rows.push_back(std::move(row));
    }
    fail("comparison CSV has no overall row");
}

}  // namespace

Format format_from_name(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    fail("unknown format '" + name + "'");
}

std::string format_decimal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

double parse_decimal(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) fail("bad decimal '" + s + "'");
    return v;
}

std::string serialize(const RunReport& report, Format format) { return serialize_tree(tree_of(report), format); }

std::string serialize(const TheoryTable& table, Format format) { return serialize_tree(tree_of(table), format); }

std::string serialize(const CompareReport& report, Format format) {
    if (format == Format::csv) return compare_to_csv(report);
    return tree_of(report).dump(2) + "\n";
}

RunReport parse_run_report(const std::string& text) {
    FlatMap m(text_to_flat(text));
    return run_report_from_flat(m);
}

TheoryTable parse_theory_table(const std::string& text) {
    FlatMap m(text_to_flat(text));
    return theory_from_flat(m);
}

CompareReport parse_compare_report(const std::string& text) {
    if (!looks_like_json(text)) {
        const auto lines = split_lines(text);
        if (!lines.empty() && lines[0] == kCompareHeader) return compare_from_csv(text);
    }
    FlatMap m(text_to_flat(text));
    return compare_from_flat(m);
}

std::string detect_kind(const std::string& text) {
    if (!looks_like_json(text)) {
        const auto lines = split_lines(text);
        if (!lines.empty() && lines[0] == kCompareHeader) return "compare";
    }
    FlatRows rows = text_to_flat(text);
    for (const auto& [k, v] : rows)
        if (k == "kind") return v;
    fail("input has no kind");
}

}  // namespace dupdel
