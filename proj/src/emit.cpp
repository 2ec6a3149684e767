#include "frob/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace frob {

namespace {

constexpr const char* record_header =
    "a1,a2,a3,ub1,ub2,gap,sum,prod12,prod123,frobenius";
constexpr const char* aggregate_header =
    "axis,bucket,count,min_gap,max_gap,mean_gap";

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

// Real emitted at 6 decimals, then parsed back, so JSON numbers carry the
// same value the CSV text does.
double rounded6(double v) { return std::stod(format_real(v)); }

} // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void write_csv(std::ostream& out, std::span<const ComparisonRecord> records) {
    out << record_header << '\n';
    for (const auto& r : records) {
        out << r.a1 << ',' << r.a2 << ',' << r.a3 << ',' << format_real(r.ub1)
            << ',' << format_real(r.ub2) << ',' << format_real(r.gap) << ','
            << r.sum << ',' << r.prod12 << ',' << r.prod123 << ',';
        if (r.frobenius)
            out << *r.frobenius;
        out << '\n';
    }
}

std::vector<ComparisonRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("read_csv: empty input");
    if (split_line(line) != split_line(record_header))
        throw std::runtime_error("read_csv: unexpected header: " + line);
    std::vector<ComparisonRecord> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto f = split_line(line);
        if (f.size() != 10)
            throw std::runtime_error("read_csv: malformed row: " + line);
        ComparisonRecord r;
        r.a1 = std::stoll(f[0]);
        r.a2 = std::stoll(f[1]);
        r.a3 = std::stoll(f[2]);
        r.ub1 = std::stod(f[3]);
        r.ub2 = std::stod(f[4]);
        r.gap = std::stod(f[5]);
        r.sum = std::stoll(f[6]);
        r.prod12 = std::stoll(f[7]);
        r.prod123 = std::stoll(f[8]);
        if (!f[9].empty())
            r.frobenius = std::stoll(f[9]);
        records.push_back(r);
    }
    return records;
}

void write_json(std::ostream& out, std::span<const ComparisonRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json obj;
        obj["a1"] = r.a1;
        obj["a2"] = r.a2;
        obj["a3"] = r.a3;
        obj["ub1"] = rounded6(r.ub1);
        obj["ub2"] = rounded6(r.ub2);
        obj["gap"] = rounded6(r.gap);
        obj["sum"] = r.sum;
        obj["prod12"] = r.prod12;
        obj["prod123"] = r.prod123;
        if (r.frobenius)
            obj["frobenius"] = *r.frobenius;
        else
            obj["frobenius"] = nullptr;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

void write_csv(std::ostream& out, std::span<const AggregateRow> rows) {
    out << aggregate_header << '\n';
    for (const auto& r : rows) {
        out << axis_name(r.axis) << ',' << r.bucket << ',' << r.count << ','
            << format_real(r.min_gap) << ',' << format_real(r.max_gap) << ','
            << format_real(r.mean_gap) << '\n';
    }
}

void write_json(std::ostream& out, std::span<const AggregateRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json obj;
        obj["axis"] = axis_name(r.axis);
        obj["bucket"] = r.bucket;
        obj["count"] = r.count;
        obj["min_gap"] = rounded6(r.min_gap);
        obj["max_gap"] = rounded6(r.max_gap);
        obj["mean_gap"] = rounded6(r.mean_gap);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

void write_svg_scatter(std::ostream& out,
                       std::span<const ComparisonRecord> records,
                       const SvgOptions& opts) {
    constexpr int width = 800, height = 600, margin = 60;
    const int plot_w = width - 2 * margin;
    const int plot_h = height - 2 * margin;

    const auto x_of = [&opts](const ComparisonRecord& r) {
        const double key = static_cast<double>(axis_key(r, opts.axis));
        return opts.log_x ? std::log10(std::max(key, 1.0)) : key;
    };

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const auto& r : records) {
        const double x = x_of(r), y = r.gap;
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;
    if (ymax == ymin)
        ymax = ymin + 1.0;

    std::size_t stride = 1;
    if (opts.max_points > 0 && records.size() > opts.max_points)
        stride = (records.size() + opts.max_points - 1) / opts.max_points;
    const std::size_t kept = (records.size() + stride - 1) / stride;

    std::string x_label = axis_name(opts.axis);
    if (opts.log_x)
        x_label = "log10(" + x_label + ")";

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    out << "  <metadata>axis=" << axis_name(opts.axis)
        << " points=" << kept << " of=" << records.size();
    if (stride > 1)
        out << " downsampled=1-in-" << stride;
    if (!opts.note.empty())
        out << ' ' << opts.note;
    out << "</metadata>\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // axes
    out << "  <line x1=\"" << margin << "\" y1=\"" << height - margin
        << "\" x2=\"" << width - margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\""
        << margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << width / 2 << "\" y=\"" << height - margin / 4
        << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label
        << "</text>\n";
    out << "  <text x=\"" << margin / 4 << "\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
        << margin / 4 << ' ' << height / 2 << ")\">gap (ub2 - ub1)</text>\n";

    for (int tick = 0; tick <= 4; ++tick) {
        const double fx = xmin + (xmax - xmin) * tick / 4.0;
        const double fy = ymin + (ymax - ymin) * tick / 4.0;
        const int px = margin + plot_w * tick / 4;
        const int py = height - margin - plot_h * tick / 4;
        char label[32];
        std::snprintf(label, sizeof(label), "%.4g", fx);
        out << "  <text x=\"" << px << "\" y=\"" << height - margin + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << label
            << "</text>\n";
        std::snprintf(label, sizeof(label), "%.4g", fy);
        out << "  <text x=\"" << margin - 6 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << label
            << "</text>\n";
    }

    for (std::size_t i = 0; i < records.size(); i += stride) {
        const auto& r = records[i];
        const double px =
            margin + (x_of(r) - xmin) / (xmax - xmin) * plot_w;
        const double py =
            height - margin - (r.gap - ymin) / (ymax - ymin) * plot_h;
        out << "  <circle cx=\"" << format_real(px) << "\" cy=\""
            << format_real(py)
            << "\" r=\"1.5\" fill=\"#1f77b4\" fill-opacity=\"0.5\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace frob
