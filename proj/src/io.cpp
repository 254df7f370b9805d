#include <chromgh/error.hpp>
#include <chromgh/io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace chromgh::io {

namespace {

std::size_t line_at(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// Best-effort source line of a key, searched after an optional anchor key.
std::size_t line_of_key(std::string_view text, std::string_view key, std::string_view anchor = {}) {
    std::size_t from = 0;
    if (!anchor.empty()) {
        const auto a = text.find("\"" + std::string(anchor) + "\"");
        if (a != std::string_view::npos) from = a;
    }
    const auto k = text.find("\"" + std::string(key) + "\"", from);
    return line_at(text, k == std::string_view::npos ? from : k);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
}

bool is_color(const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

ColorSet parse_color_set(const json& v, std::string_view text, std::string_view key) {
    if (!v.is_array()) throw ParseError(line_of_key(text, key), "expected an array of colors");
    ColorSet s;
    for (const auto& c : v) {
        if (!is_color(c)) throw ParseError(line_of_key(text, key), "colors are non-negative integers");
        s.insert(c.get<Color>());
    }
    return s;
}

Matrix parse_matrix(const json& v, std::string_view text, std::string_view key) {
    if (!v.is_array()) throw ParseError(line_of_key(text, key), "expected an array of rows");
    Matrix m;
    for (const auto& row : v) {
        if (!row.is_array()) throw ParseError(line_of_key(text, key), "expected an array of numbers");
        std::vector<double> r;
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError(line_of_key(text, key), "expected a number");
            r.push_back(x.get<double>());
        }
        m.push_back(std::move(r));
    }
    return m;
}

Norm parse_norm(const json& v, std::string_view text) {
    if (!v.is_string()) throw ParseError(line_of_key(text, "metric"), "metric must be a string");
    const auto s = v.get<std::string>();
    if (s == "euclidean") return Norm::Euclidean;
    if (s == "l1") return Norm::L1;
    if (s == "linf") return Norm::Linf;
    throw ParseError(line_of_key(text, "metric"), "unknown metric '" + s + "'");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::BadParams, "cannot write " + path.string());
    out << text;
}

json number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double parse_number(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v == "inf") return std::numeric_limits<double>::infinity();
    throw Error(ErrorCode::ParseError, "expected a number or \"inf\"");
}

ChromaticPair parse_pair_text(std::string_view text) {
    const json root = parse_json(text);
    if (!root.is_object()) throw ParseError(1, "a chromatic pair is a JSON object");

    Matrix m;
    if (root.contains("distance_matrix")) {
        m = parse_matrix(root["distance_matrix"], text, "distance_matrix");
    } else if (root.contains("points")) {
        const Norm norm = root.contains("metric") ? parse_norm(root["metric"], text) : Norm::Euclidean;
        const Matrix pts = parse_matrix(root["points"], text, "points");
        for (const auto& p : pts)
            if (p.size() != pts.front().size())
                throw ParseError(line_of_key(text, "points"), "points have different dimensions");
        m = point_distances(pts, norm);
    } else {
        throw ParseError(1, "expected \"points\" or \"distance_matrix\"");
    }

    std::map<Index, Color> colors;
    if (root.contains("colors")) {
        const json& c = root["colors"];
        if (!c.is_object()) throw ParseError(line_of_key(text, "colors"), "colors must be an object");
        for (const auto& [key, value] : c.items()) {
            Index idx = 0;
            const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
            if (ec != std::errc{} || ptr != key.data() + key.size() || idx >= m.size())
                throw ParseError(line_of_key(text, key, "colors"), "bad color index '" + key + "'");
            if (!is_color(value))
                throw ParseError(line_of_key(text, key, "colors"), "color of point " + key + " must be a non-negative integer");
            colors[idx] = value.get<Color>();
        }
    }
    return ChromaticPair::from_map(validate_metric(m), colors);
}

ChromaticPair parse_pair(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    if (path.extension() == ".csv") return parse_csv_text(text);
    return parse_pair_text(text);
}

json pair_to_json(const ChromaticPair& pair) {
    json colors = json::object();
    for (Index i = 0; i < pair.size(); ++i)
        if (auto c = pair.color(i)) colors[std::to_string(i)] = *c;
    return {{"distance_matrix", pair.ambient().to_matrix()}, {"colors", colors}};
}

ChromaticPair parse_csv_text(std::string_view text, Norm norm) {
    std::vector<std::vector<double>> points;
    std::vector<std::optional<Color>> colors;
    std::optional<std::size_t> color_col;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t"));
            cell.erase(cell.find_last_not_of(" \t") + 1);
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') cells.emplace_back();

        auto to_double = [&](const std::string& s, double& out) {
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc{} && ptr == s.data() + s.size();
        };
        double probe = 0.0;
        if (!header_seen && points.empty() && !cells.empty() && !to_double(cells.front(), probe)) {
            header_seen = true;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::string lower = cells[i];
                std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
                if (lower == "color") color_col = i;
            }
            continue;
        }
        std::vector<double> p;
        std::optional<Color> color;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (color_col && i == *color_col) {
                if (cells[i].empty()) continue;
                Color c = 0;
                const auto [ptr, ec] = std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), c);
                if (ec != std::errc{} || ptr != cells[i].data() + cells[i].size())
                    throw ParseError(line_no, "bad color '" + cells[i] + "'");
                color = c;
                continue;
            }
            double v = 0.0;
            if (!to_double(cells[i], v)) throw ParseError(line_no, "bad coordinate '" + cells[i] + "'");
            p.push_back(v);
        }
        if (!points.empty() && p.size() != points.front().size()) throw ParseError(line_no, "inconsistent dimension");
        points.push_back(std::move(p));
        colors.push_back(color);
    }
    return ChromaticPair(validate_metric(point_distances(points, norm)), std::move(colors));
}

ConstraintSpec parse_constraints_text(std::string_view text) {
    const json root = parse_json(text);
    if (!root.is_object()) throw ParseError(1, "a constraint set is a JSON object");
    ConstraintSpec spec;
    if (root.contains("universe")) spec.universe = parse_color_set(root["universe"], text, "universe");
    if (root.contains("sets")) {
        if (!root["sets"].is_array()) throw ParseError(line_of_key(text, "sets"), "sets must be an array");
        for (const auto& s : root["sets"]) {
            if (s == "N") spec.sets.emplace_back(FullUniverse{});
            else spec.sets.emplace_back(parse_color_set(s, text, "sets"));
        }
    }
    if (root.contains("ambient_only")) {
        if (!root["ambient_only"].is_boolean()) throw ParseError(line_of_key(text, "ambient_only"), "expected a boolean");
        spec.ambient_only = root["ambient_only"].get<bool>();
    }
    return spec;
}

json color_set_to_json(const ColorSet& s) { return s.values(); }

json constraints_to_json(const ConstraintSet& c) {
    json sets = json::array();
    if (!c.is_ambient_only()) {
        for (const auto& m : c.members()) sets.push_back(color_set_to_json(m));
        sets.push_back("N");
    }
    json out = {{"universe", color_set_to_json(c.universe())}, {"sets", sets}};
    if (c.is_ambient_only()) out["ambient_only"] = true;
    return out;
}

ComplexSpec parse_complex_text(std::string_view text) {
    const json root = parse_json(text);
    if (!root.is_object() || !root.contains("maximal_faces") || !root["maximal_faces"].is_array())
        throw ParseError(1, "expected {\"maximal_faces\": [...]}");
    ColorFamily faces;
    for (const auto& f : root["maximal_faces"]) faces.push_back(parse_color_set(f, text, "maximal_faces"));
    return ComplexSpec(std::move(faces));
}

json complex_to_json(const ComplexSpec& c) {
    json faces = json::array();
    for (const auto& f : c.maximal_faces()) faces.push_back(color_set_to_json(f));
    return {{"maximal_faces", faces}};
}

PersistenceDiagram parse_diagram_text(std::string_view text) {
    const json root = parse_json(text);
    if (!root.is_object() || !root.contains("degree") || !root["degree"].is_number_integer())
        throw ParseError(1, "expected {\"degree\": int, \"pairs\": [...]}");
    PersistenceDiagram d;
    d.degree = root["degree"].get<int>();
    if (root.contains("pairs")) {
        for (const auto& q : root["pairs"]) {
            if (!q.is_array() || q.size() != 2 || !q[0].is_number())
                throw ParseError(line_of_key(text, "pairs"), "a pair is [birth, death]");
            double death = 0.0;
            try {
                death = parse_number(q[1]);
            } catch (const Error&) {
                throw ParseError(line_of_key(text, "pairs"), "death must be a number or \"inf\"");
            }
            const double birth = q[0].get<double>();
            if (death < birth) throw ParseError(line_of_key(text, "pairs"), "death precedes birth");
            if (death > birth) d.points.push_back({birth, death});
        }
    }
    std::sort(d.points.begin(), d.points.end());
    return d;
}

json diagram_to_json(const PersistenceDiagram& d) {
    json pairs = json::array();
    for (const auto& q : d.points) pairs.push_back({q.birth, number(q.death)});
    return {{"degree", d.degree}, {"pairs", pairs}};
}

json filtration_to_json(const Filtration& f) {
    json simplices = json::array();
    for (const auto& s : f.simplices) simplices.push_back({{"vertices", s.vertices}, {"value", s.value}});
    json out = {{"max_dim", f.max_dim}, {"simplices", simplices}};
    if (!f.dropped_vertices.empty()) out["dropped_vertices"] = f.dropped_vertices;
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace chromgh::io
