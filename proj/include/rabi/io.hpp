// io.hpp: JSON/CSV/SVG serialization and atomic file output

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rabi/fock.hpp"
#include "rabi/heat_kernel.hpp"
#include "rabi/partition.hpp"
#include "rabi/rabi_bernoulli.hpp"
#include "rabi/zeta.hpp"

namespace rabi {

// nlohmann::json keeps object keys in a std::map, so every dump is key-sorted. Doubles are written
// in the shortest form that parses back to the same bits.
using Json = nlohmann::json;

std::string dump_json(const Json& j);

Json to_json(cplx z);
Json to_json(const ModelParams& p);
Json to_json(const Spectrum& sp);
Json to_json(const CurveTable& ct);
Json to_json(const SeriesResult& r);
Json to_json(const ZetaResult& r);
Json to_json(const LimitReport& r);
Json to_json(const TraceCheck& r);
Json to_json(const OmegaResult& r);
Json to_json(const ModifiedMellinResult& r);

// RFC 4180: fields with commas, quotes or line breaks are quoted, quotes doubled; CRLF rows.
std::string csv_number(double v);  // %.17g
std::string csv_escape(const std::string& field);
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

std::string curves_csv(const CurveTable& ct);

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed{false};
    std::string color;  // empty: palette
};

struct SvgPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    bool legend{true};
};

// Self-contained SVG 1.1 with a fixed 800x600 viewBox.
std::string render_svg(const SvgPlot& plot);

// Spectral curves plus dashed baselines at N +- eps for the integers in range.
SvgPlot curves_plot(const CurveTable& ct);

// Writes to a temporary file in the same directory, then renames over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rabi
