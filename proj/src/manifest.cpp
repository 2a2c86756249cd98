#include "recurv/manifest.hpp"

#include <fstream>
#include <sstream>

#include "recurv/expr.hpp"

namespace recurv {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string unquote(const std::string& s, const std::string& file, int line) {
    std::string t = trim(s);
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"')
        return t.substr(1, t.size() - 2);
    throw ManifestError(file, line, "expected a quoted expression, got '" + t + "'");
}

} // namespace

Tensor Manifest::metric_tensor() const {
    int n = chart->dimension;
    Tensor g(chart, 2, Symmetry::Symmetric2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::string& e = metric_exprs[static_cast<std::size_t>(i) * n + j];
            g.at({i, j}) = parse_expression(e, *chart);
        }
    if (!g.symmetry_valid())
        throw ManifestError("metric component table is not symmetric");
    bool any_diag = false;
    for (int i = 0; i < n; ++i) any_diag = any_diag || !g.at({i, i}).is_zero();
    if (!any_diag) throw ManifestError("metric has no nonzero diagonal entry");
    return g;
}

std::optional<Tensor> Manifest::eta_form() const {
    if (eta_exprs.empty()) return std::nullopt;
    int n = chart->dimension;
    Tensor eta(chart, 1, Symmetry::OneForm);
    for (int i = 0; i < n; ++i) eta.at({i}) = parse_expression(eta_exprs[i], *chart);
    return eta;
}

Manifest parse_manifest(const std::string& text, const std::string& filename) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::string section;

    std::string name;
    int dimension = -1;
    std::vector<std::string> coordinates;
    std::vector<std::string> positive_names;
    struct Entry { int i, j; std::string expr; int line; };
    std::vector<Entry> metric_entries;
    std::vector<std::pair<int, std::string>> eta_entries;
    std::vector<std::vector<Rational>> points;

    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ManifestError(filename, lineno, "malformed section header");
            section = t.substr(1, t.size() - 2);
            if (section != "chart" && section != "metric" && section != "extras")
                throw ManifestError(filename, lineno, "unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ManifestError(filename, lineno, "expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (section == "chart") {
            if (key == "name") {
                name = value;
            } else if (key == "dimension") {
                dimension = std::stoi(value);
            } else if (key == "coordinates") {
                coordinates = split_ws(value);
            } else if (key == "positive") {
                positive_names = split_ws(value);
            } else {
                throw ManifestError(filename, lineno, "unknown chart key '" + key + "'");
            }
        } else if (section == "metric") {
            if (key.size() < 3 || key[0] != 'g')
                throw ManifestError(filename, lineno, "metric keys look like g12");
            int i = key[1] - '0', j = key[2] - '0';
            if (key.size() != 3 || i < 1 || j < 1)
                throw ManifestError(filename, lineno, "metric keys look like g12");
            metric_entries.push_back({i - 1, j - 1, unquote(value, filename, lineno), lineno});
        } else if (section == "extras") {
            if (key.rfind("eta", 0) == 0 && key.size() == 4) {
                int i = key[3] - '0';
                if (i < 1) throw ManifestError(filename, lineno, "eta keys look like eta1");
                eta_entries.emplace_back(i - 1, unquote(value, filename, lineno));
            } else if (key == "point") {
                std::vector<Rational> pt;
                for (const std::string& w : split_ws(value))
                    pt.push_back(rational_from_string(w));
                points.push_back(std::move(pt));
            } else {
                throw ManifestError(filename, lineno, "unknown extras key '" + key + "'");
            }
        } else {
            throw ManifestError(filename, lineno, "content outside any section");
        }
    }

    if (dimension < 0) throw ManifestError(filename, 0, "missing [chart] dimension");
    if (coordinates.empty()) throw ManifestError(filename, 0, "missing chart coordinates");
    if (static_cast<int>(coordinates.size()) != dimension)
        throw ManifestError(filename, 0, "dimension does not match coordinate count");
    if (dimension > 9)
        throw ManifestError(filename, 0, "dimensions above 9 are not supported");

    std::vector<bool> positive(coordinates.size(), false);
    for (const std::string& p : positive_names) {
        bool found = false;
        for (std::size_t i = 0; i < coordinates.size(); ++i)
            if (coordinates[i] == p) { positive[i] = true; found = true; }
        if (!found)
            throw ManifestError(filename, 0, "positivity for unknown coordinate '" + p + "'");
    }

    Manifest m;
    m.name = name;
    m.chart = std::make_shared<const Chart>(dimension, coordinates, positive);
    m.metric_exprs.assign(static_cast<std::size_t>(dimension) * dimension, "0");
    if (metric_entries.empty()) throw ManifestError(filename, 0, "missing [metric] section");
    for (const auto& e : metric_entries) {
        if (e.i >= dimension || e.j >= dimension)
            throw ManifestError(filename, e.line, "metric index out of range");
        m.metric_exprs[static_cast<std::size_t>(e.i) * dimension + e.j] = e.expr;
        m.metric_exprs[static_cast<std::size_t>(e.j) * dimension + e.i] = e.expr;
    }
    if (!eta_entries.empty()) {
        m.eta_exprs.assign(coordinates.size(), "0");
        for (const auto& [i, expr] : eta_entries) {
            if (i >= dimension) throw ManifestError(filename, 0, "eta index out of range");
            m.eta_exprs[i] = expr;
        }
    }
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != dimension)
            throw ManifestError(filename, 0, "sample point length does not match dimension");
    m.sample_points = std::move(points);

    // Validate expressions early so errors carry the manifest context.
    try {
        (void)m.metric_tensor();
        (void)m.eta_form();
    } catch (const ParseError& e) {
        throw ManifestError(filename + ": " + e.what());
    }
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot open manifest '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str(), path);
}

std::string print_manifest(const Manifest& m) {
    std::ostringstream os;
    int n = m.chart->dimension;
    os << "[chart]\n";
    if (!m.name.empty()) os << "name = " << m.name << "\n";
    os << "dimension = " << n << "\n";
    os << "coordinates =";
    for (const auto& c : m.chart->coordinates) os << " " << c;
    os << "\n";
    bool any_pos = false;
    for (bool p : m.chart->positive) any_pos = any_pos || p;
    if (any_pos) {
        os << "positive =";
        for (int i = 0; i < n; ++i)
            if (m.chart->positive[i]) os << " " << m.chart->coordinates[i];
        os << "\n";
    }
    os << "\n[metric]\n";
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const std::string& e = m.metric_exprs[static_cast<std::size_t>(i) * n + j];
            if (e == "0") continue;
            os << "g" << (i + 1) << (j + 1) << " = \"" << e << "\"\n";
        }
    if (!m.eta_exprs.empty() || !m.sample_points.empty()) {
        os << "\n[extras]\n";
        for (std::size_t i = 0; i < m.eta_exprs.size(); ++i)
            if (m.eta_exprs[i] != "0")
                os << "eta" << (i + 1) << " = \"" << m.eta_exprs[i] << "\"\n";
        for (const auto& pt : m.sample_points) {
            os << "point =";
            for (const auto& q : pt) os << " " << rational_str(q);
            os << "\n";
        }
    }
    return os.str();
}

bool operator==(const Manifest& a, const Manifest& b) {
    return a.name == b.name && *a.chart == *b.chart && a.metric_exprs == b.metric_exprs &&
           a.eta_exprs == b.eta_exprs && a.sample_points == b.sample_points;
}

} // namespace recurv
