#include "emd/ingest.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace emd {

std::string DistributionRecord::label() const {
    return division + " " + course + " " + year;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

long long parse_count(const std::string& field, std::size_t line_no) {
    std::string s = field;
    // Trim surrounding whitespace.
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail(line_no, "empty count field");
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) fail(line_no, "malformed count '" + field + "'");
        if (v < 0) fail(line_no, "negative count '" + field + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail(line_no, "malformed count '" + field + "'");
    } catch (const std::out_of_range&) {
        fail(line_no, "count out of range '" + field + "'");
    }
}

}  // namespace

std::vector<DistributionRecord> parse_distribution_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw std::runtime_error("no records in " + path);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 5 || header[0] != "id" || header[1] != "division" ||
        header[2] != "course" || header[3] != "year")
        fail(line_no, "expected header id,division,course,year,g1,...,gn");
    std::size_t n = header.size() - 4;

    std::vector<DistributionRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            fail(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
        DistributionRecord rec;
        rec.id = parse_count(fields[0], line_no);
        rec.division = fields[1];
        rec.course = fields[2];
        rec.year = fields[3];
        std::vector<long long> counts;
        counts.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            counts.push_back(parse_count(fields[4 + k], line_no));
        rec.counts = Composition(std::move(counts));
        if (rec.enrollment() == 0) fail(line_no, "zero enrollment");
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw std::runtime_error("no records in " + path);
    return records;
}

}  // namespace emd
