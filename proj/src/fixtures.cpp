#include "qformlab/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qformlab {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep)) out.push_back(field);
    return out;
}

quad_form parse_form_field(const std::string& s) {
    quad_form q;
    std::istringstream is(s);
    if (!(is >> q.a >> q.b >> q.c))
        throw std::runtime_error("fixture: bad form field '" + s + "'");
    return q;
}

sparse_series parse_series_field(const std::string& trunc_s,
                                 const std::string& terms_s) {
    sparse_series out;
    out.trunc = std::stoi(trunc_s);
    std::istringstream is(terms_s);
    std::string pair;
    while (is >> pair) {
        auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("fixture: bad term '" + pair + "'");
        out.terms.emplace_back(std::stoi(pair.substr(0, colon)),
                               std::stoll(pair.substr(colon + 1)));
    }
    return out;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {  // column header
            header_seen = true;
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != columns)
            throw std::runtime_error("fixture: wrong column count in " + path +
                                     ": '" + line + "'");
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

std::string default_fixture_dir() {
#ifdef QFORMLAB_DATA_DIR
    return QFORMLAB_DATA_DIR;
#else
    return "data";
#endif
}

fixture_set load_fixtures(const std::string& dir) {
    fixture_set fx;

    for (const auto& row : read_csv(dir + "/schoeneberg.csv", 3))
        fx.schoeneberg.push_back(
            {std::stoll(row[0]), parse_form_field(row[1]), parse_form_field(row[2])});

    for (const auto& row : read_csv(dir + "/class1.csv", 3))
        fx.class1.push_back(
            {std::stoll(row[0]), parse_form_field(row[1]), std::stoi(row[2])});

    auto load3 = [](const std::string& path) {
        std::vector<class3_row> rows;
        for (const auto& row : read_csv(path, 5))
            rows.push_back({std::stoll(row[0]), parse_form_field(row[1]),
                            parse_form_field(row[2]),
                            parse_series_field(row[3], row[4])});
        return rows;
    };
    fx.class3a = load3(dir + "/class3a.csv");
    fx.class3b = load3(dir + "/class3b.csv");

    for (const auto& row : read_csv(dir + "/class5.csv", 8))
        fx.class5.push_back({std::stoll(row[0]), parse_form_field(row[1]),
                             parse_form_field(row[2]), parse_form_field(row[3]),
                             parse_series_field(row[4], row[5]),
                             parse_series_field(row[6], row[7])});
    return fx;
}

std::vector<long long> fixture_set::all_discriminants() const {
    std::vector<long long> out;
    for (const auto& r : class1) out.push_back(r.bigD);
    for (const auto& r : class3a) out.push_back(r.bigD);
    for (const auto& r : class3b) out.push_back(r.bigD);
    for (const auto& r : class5) out.push_back(r.bigD);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qformlab
