// csv.cpp

#include "goldbach/csv.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace goldbach {

void write_series_csv(std::ostream& out, const PairCountSeries& s,
                      const SigmaTable* classification) {
    out << "n,count,d,sigma,stratum\n";
    char buf[160];
    for (size_t i = 0; i < s.counts.size(); ++i) {
        uint64_t n = PairCountSeries::n_min + i;
        if (classification) {
            LayerKey k = classify(n, *classification);
            std::snprintf(buf, sizeof buf, "%" PRIu64 ",%u,%" PRIu64 ",%" PRIu64 ",%u\n",
                          n, s.counts[i], k.d, k.sigma, k.stratum_rank);
        } else {
            std::snprintf(buf, sizeof buf, "%" PRIu64 ",%u,,,\n", n, s.counts[i]);
        }
        out << buf;
    }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

uint64_t parse_u64(const std::string& s) {
    size_t used = 0;
    uint64_t v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("csv: malformed integer field: " + s);
    return v;
}

} // namespace

std::vector<SeriesRow> read_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,count,d,sigma,stratum")
        throw std::invalid_argument("csv: unexpected series header: " + line);
    std::vector<SeriesRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != 5) throw std::invalid_argument("csv: expected 5 fields: " + line);
        SeriesRow r;
        r.n = parse_u64(f[0]);
        r.count = parse_u64(f[1]);
        if (!f[2].empty()) r.d = parse_u64(f[2]);
        if (!f[3].empty()) r.sigma = parse_u64(f[3]);
        if (!f[4].empty()) r.stratum = static_cast<uint32_t>(parse_u64(f[4]));
        rows.push_back(r);
    }
    return rows;
}

size_t CsvTable::column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw std::invalid_argument("csv: no column named '" + name + "'");
}

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    t.header = split_line(line);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto f = split_line(line);
        if (f.size() != t.header.size())
            throw std::invalid_argument("csv: ragged row: " + line);
        std::vector<double> row(f.size());
        for (size_t i = 0; i < f.size(); ++i)
            row[i] = f[i].empty() ? std::numeric_limits<double>::quiet_NaN()
                                  : std::stod(f[i]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace goldbach
