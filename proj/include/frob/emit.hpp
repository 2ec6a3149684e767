#ifndef FROB_EMIT_HPP
#define FROB_EMIT_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frob/analysis.hpp"
#include "frob/montecarlo.hpp"

namespace frob {

enum class OutputFormat { Csv, Json, SvgScatter, Text };

// Real values are printed with 6 decimal places everywhere, matching the
// precision of the tabulated reference values; comparisons inside the
// library never go through printed text.
std::string format_real(double v);

// Records: header is exactly
//   a1,a2,a3,ub1,ub2,gap,sum,prod12,prod123,frobenius
// with the frobenius field blank when not computed.
void write_csv(std::ostream& out, std::span<const ComparisonRecord> records);
void write_json(std::ostream& out, std::span<const ComparisonRecord> records);
std::vector<ComparisonRecord> read_csv(std::istream& in);

// Aggregate rows: header axis,bucket,count,min_gap,max_gap,mean_gap.
void write_csv(std::ostream& out, std::span<const AggregateRow> rows);
void write_json(std::ostream& out, std::span<const AggregateRow> rows);

struct SvgOptions {
    Axis axis = Axis::A3;
    bool log_x = false;       // useful for the wide prod123 range
    std::size_t max_points = 0; // 0 = plot everything
    std::string note;         // extra metadata line
};

// Self-contained 800x600 scatter of gap (y) against the chosen axis key
// (x). Every record becomes one point element unless max_points forces
// downsampling, which is then declared in the <metadata> block.
void write_svg_scatter(std::ostream& out,
                       std::span<const ComparisonRecord> records,
                       const SvgOptions& opts);

} // namespace frob

#endif
