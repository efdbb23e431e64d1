#include "holoform/sectionio.hpp"

#include <sstream>
#include <stdexcept>

namespace holoform {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

[[noreturn]] void bad(std::size_t line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line + 1) + ": " + what);
}

}  // namespace

std::string model_to_string(const ChartModel& m) { return m.str(); }

ChartModel model_from_string(const std::string& text) {
    std::vector<ChartModel> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" x ", pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;
        if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'T'))
            throw std::invalid_argument("bad model leaf '" + tok + "'");
        int n = std::stoi(tok.substr(1));
        parts.push_back(tok[0] == 'P' ? ChartModel::projective(n) : ChartModel::torus(n));
    }
    if (parts.empty()) throw std::invalid_argument("empty model");
    ChartModel out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out = ChartModel::product(out, parts[i]);
    return out;
}

std::string write_section(const Section& s) {
    std::ostringstream os;
    os << "holoform-section v1\n";
    os << "model: " << model_to_string(s.model) << "\n";
    os << "bundle:";
    for (int k : s.bundle.twists) os << " " << k;
    os << "\n";
    os << "degree: " << s.degree << "\n";
    for (const auto& [id, f] : s.chart_forms) {
        os << "chart";
        for (int a : id) os << " " << a;
        os << "\n" << f.str() << "\n";
    }
    return os.str();
}

Section read_section(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != "holoform-section v1")
        bad(0, "expected header 'holoform-section v1'");
    if (lines.size() < 4 || lines[1].rfind("model: ", 0) != 0)
        bad(1, "expected 'model: ...'");
    ChartModel model = model_from_string(lines[1].substr(7));
    if (lines[2].rfind("bundle:", 0) != 0) bad(2, "expected 'bundle: ...'");
    BundleDescriptor bundle;
    {
        std::istringstream is(lines[2].substr(7));
        int k;
        while (is >> k) bundle.twists.push_back(k);
    }
    if (lines[3].rfind("degree: ", 0) != 0) bad(3, "expected 'degree: ...'");
    int degree = std::stoi(lines[3].substr(8));
    int dim = model.dimension();
    std::map<ChartId, Form> forms;
    std::size_t i = 4;
    while (i < lines.size()) {
        if (lines[i].empty()) {
            ++i;
            continue;
        }
        if (lines[i].rfind("chart", 0) != 0) bad(i, "expected 'chart ...'");
        ChartId id;
        {
            std::istringstream is(lines[i].substr(5));
            int a;
            while (is >> a) id.push_back(a);
        }
        if (i + 1 >= lines.size()) bad(i, "chart header without a form body");
        try {
            forms[id] = parse_form(lines[i + 1], dim, degree);
        } catch (const std::exception& e) {
            bad(i + 1, std::string("bad form body: ") + e.what());
        }
        i += 2;
    }
    return make_section(std::move(model), std::move(bundle), degree, std::move(forms));
}

std::string write_certificate(const Certificate& c) {
    std::ostringstream os;
    os << "holoform-certificate v1\n";
    for (const auto& [k, v] : c.headers) os << k << ": " << v << "\n";
    os << "begin body\n";
    for (const std::string& line : c.body) os << line << "\n";
    os << "end body\n";
    return os.str();
}

Certificate read_certificate(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != "holoform-certificate v1")
        bad(0, "expected header 'holoform-certificate v1'");
    Certificate c;
    std::size_t i = 1;
    while (i < lines.size() && lines[i] != "begin body") {
        std::size_t colon = lines[i].find(": ");
        if (colon == std::string::npos) bad(i, "expected 'key: value'");
        c.headers.emplace_back(lines[i].substr(0, colon), lines[i].substr(colon + 2));
        ++i;
    }
    if (i >= lines.size()) bad(lines.size() - 1, "missing 'begin body'");
    ++i;
    while (i < lines.size() && lines[i] != "end body") c.body.push_back(lines[i++]);
    if (i >= lines.size()) bad(lines.size() - 1, "missing 'end body'");
    return c;
}

}  // namespace holoform
