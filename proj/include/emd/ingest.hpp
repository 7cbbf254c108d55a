#pragma once

#include <string>
#include <vector>

#include "emd/compositions.hpp"
#include "emd/prob_vector.hpp"

namespace emd {

/// One ingested distribution: identifying metadata plus per-bin counts.
struct DistributionRecord {
    long long id = 0;
    std::string division;
    std::string course;
    std::string year;
    Composition counts;

    long long enrollment() const { return counts.sum(); }
    std::string label() const;  // "division course year"
    ProbVector probabilities() const { return ProbVector::from_counts(counts); }
};

/**
 * Reads distribution records from a CSV file with header
 *   id,division,course,year,g1,...,gn
 * Counts must be non-negative integers with a positive sum per row; every
 * data row must match the header's column count. Errors name the line.
 */
std::vector<DistributionRecord> parse_distribution_csv(const std::string& path);

/// Splits one CSV line, honoring double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line);

/// Quotes a field if it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace emd
