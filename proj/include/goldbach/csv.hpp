// csv.hpp
// Series CSV emission and parsing. The series schema is fixed:
// header "n,count,d,sigma,stratum", one row per n, LF line endings, plain
// ASCII; the classification columns stay empty when no SigmaTable is given.

#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/paircount.hpp"
#include "goldbach/residue.hpp"

namespace goldbach {

struct SeriesRow {
    uint64_t n = 0;
    uint64_t count = 0;
    std::optional<uint64_t> d;
    std::optional<uint64_t> sigma;
    std::optional<uint32_t> stratum;
};

void write_series_csv(std::ostream& out, const PairCountSeries& s,
                      const SigmaTable* classification);

std::vector<SeriesRow> read_series_csv(std::istream& in);

// Generic numeric table, for plotting arbitrary columns (missing cells are
// NaN).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    // column index by name; throws when absent
    size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);

} // namespace goldbach
