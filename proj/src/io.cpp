// io.cpp: JSON/CSV/SVG serialization and atomic file output

#include "rabi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace rabi {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ModelParams& p) { return Json{{"g", p.g}, {"delta", p.delta}, {"eps", p.eps}}; }

Json to_json(const Spectrum& sp) {
    return Json{{"eigenvalues", sp.eigenvalues},
                {"truncation_dim", sp.truncation_dim},
                {"converged_count", sp.converged_count},
                {"tol", sp.tol},
                {"max_change", sp.max_change}};
}

Json to_json(const CurveTable& ct) {
    return Json{{"g_grid", ct.g_grid}, {"shifted_levels", ct.shifted_levels}, {"eps", ct.eps}, {"delta", ct.delta}};
}

Json to_json(const SeriesResult& r) {
    return Json{{"value", r.value},
                {"prefactor", r.prefactor},
                {"per_lambda_terms", r.per_lambda_terms},
                {"odd_terms", r.odd_terms},
                {"stat_err", r.stat_err},
                {"trunc_err", r.trunc_err},
                {"lambda_used", r.lambda_used},
                {"warnings", r.warnings}};
}

Json to_json(const ZetaResult& r) {
    return Json{{"value", to_json(r.value)},
                {"err_bracket", r.err_bracket},
                {"method", r.method},
                {"metadata", r.metadata},
                {"warnings", r.warnings}};
}

Json to_json(const LimitReport& r) {
    Json values = Json::array();
    for (const auto& v : r.values) values.push_back(to_json(v));
    return Json{{"scenario", r.scenario},
                {"parameter", r.parameter},
                {"target", to_json(r.target)},
                {"grid", r.grid},
                {"values", values},
                {"brackets", r.brackets},
                {"distances", r.distances},
                {"tolerance", r.tolerance},
                {"decreasing", r.decreasing},
                {"pass", r.pass},
                {"extras", r.extras},
                {"notes", r.notes}};
}

Json to_json(const TraceCheck& r) {
    return Json{{"integral", r.integral}, {"expected", r.expected}, {"rel_err", r.rel_err}};
}

Json to_json(const OmegaResult& r) {
    return Json{{"coefficients", r.coefficients}, {"aliasing_estimate", r.aliasing_estimate}, {"warnings", r.warnings}};
}

Json to_json(const ModifiedMellinResult& r) {
    return Json{{"series", to_json(r.series)},
                {"series_bracket", r.series_bracket},
                {"eigen", to_json(r.eigen)},
                {"eigen_bracket", r.eigen_bracket},
                {"limit", to_json(r.limit)},
                {"literal_limit", to_json(r.literal_limit)}};
}

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(row[i]);
        }
        out += "\r\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(field);
            field.clear();
            any = true;
        } else if (c == '\r' || c == '\n') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            row.push_back(field);
            rows.push_back(row);
            row.clear();
            field.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw std::invalid_argument("parse_csv: unterminated quoted field");
    if (any || !field.empty()) {
        row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

std::string curves_csv(const CurveTable& ct) {
    std::vector<std::string> header{"g"};
    for (std::size_t j = 0; j < ct.level_count(); ++j) header.push_back("E" + std::to_string(j) + "+g^2");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < ct.g_grid.size(); ++i) {
        std::vector<std::string> row{csv_number(ct.g_grid[i])};
        for (double v : ct.shifted_levels[i]) row.push_back(csv_number(v));
        rows.push_back(std::move(row));
    }
    return to_csv(header, rows);
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

// About five round ticks covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    std::vector<double> ticks;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) ticks.push_back(v);
    return ticks;
}

}  // namespace

std::string render_svg(const SvgPlot& plot) {
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : plot.series) {
        if (s.x.size() != s.y.size()) throw std::invalid_argument("render_svg: x and y sizes differ");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
    if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
       << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
       << xml_escape(plot.title) << "</text>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"12\" stroke-width=\"1\">\n";
    for (double t : nice_ticks(xmin, xmax)) {
        os << "<line x1=\"" << fmt(px(t)) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(px(t)) << "\" y2=\""
           << fmt(kTop + ph) << "\" stroke=\"#e0e0e0\"/>\n"
           << "<text x=\"" << fmt(px(t)) << "\" y=\"" << fmt(kTop + ph + 18) << "\" text-anchor=\"middle\">"
           << tick_label(t) << "</text>\n";
    }
    for (double t : nice_ticks(ymin, ymax)) {
        os << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(py(t)) << "\" x2=\"" << fmt(kLeft + pw) << "\" y2=\""
           << fmt(py(t)) << "\" stroke=\"#e0e0e0\"/>\n"
           << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(t) + 4) << "\" text-anchor=\"end\">"
           << tick_label(t) << "</text>\n";
    }
    os << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\""
       << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n"
       << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 20) << "\" text-anchor=\"middle\">"
       << xml_escape(plot.x_label) << "</text>\n"
       << "<text x=\"20\" y=\"" << fmt(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << fmt(kTop + ph / 2) << ")\">" << xml_escape(plot.y_label) << "</text>\n";
    os << "</g>\n";

    os << "<defs><clipPath id=\"plot\"><rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
       << fmt(pw) << "\" height=\"" << fmt(ph) << "\"/></clipPath></defs>\n";
    os << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"1.5\">\n";
    std::size_t color_index = 0;
    std::vector<std::pair<std::string, std::string>> legend;
    for (const auto& s : plot.series) {
        const std::string color = s.color.empty() ? kPalette[color_index++ % std::size(kPalette)] : s.color;
        os << "<polyline stroke=\"" << color << "\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
           << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            os << fmt(px(s.x[i])) << "," << fmt(py(s.y[i])) << " ";
        }
        os << "\"/>\n";
        if (!s.label.empty()) legend.emplace_back(s.label, color + (s.dashed ? "|d" : ""));
    }
    os << "</g>\n";

    if (plot.legend && !legend.empty()) {
        const std::size_t shown = std::min<std::size_t>(legend.size(), 12);
        const double lx = kLeft + pw - 150;
        const double ly = kTop + 10;
        os << "<g font-family=\"sans-serif\" font-size=\"11\">\n"
           << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" width=\"140\" height=\""
           << fmt(16.0 * shown + 8) << "\" fill=\"white\" fill-opacity=\"0.85\" stroke=\"#999999\"/>\n";
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& [label, style] = legend[i];
            const bool dashed = style.size() > 2 && style.substr(style.size() - 2) == "|d";
            const std::string color = dashed ? style.substr(0, style.size() - 2) : style;
            const double y = ly + 14 + 16.0 * i;
            os << "<line x1=\"" << fmt(lx + 6) << "\" y1=\"" << fmt(y - 4) << "\" x2=\"" << fmt(lx + 30)
               << "\" y2=\"" << fmt(y - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\""
               << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n"
               << "<text x=\"" << fmt(lx + 36) << "\" y=\"" << fmt(y) << "\">" << xml_escape(label) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

SvgPlot curves_plot(const CurveTable& ct) {
    SvgPlot plot;
    char title[128];
    std::snprintf(title, sizeof title, "Spectral curves E + g^2 (Delta = %g, eps = %g)", ct.delta, ct.eps);
    plot.title = title;
    plot.x_label = "g";
    plot.y_label = "E + g^2";
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t j = 0; j < ct.level_count(); ++j) {
        SvgSeries s;
        s.label = j < 8 ? "E" + std::to_string(j) : "";
        for (std::size_t i = 0; i < ct.g_grid.size(); ++i) {
            s.x.push_back(ct.g_grid[i]);
            s.y.push_back(ct.shifted_levels[i][j]);
            lo = std::min(lo, ct.shifted_levels[i][j]);
            hi = std::max(hi, ct.shifted_levels[i][j]);
        }
        plot.series.push_back(std::move(s));
    }
    if (!ct.g_grid.empty() && std::isfinite(lo)) {
        const double x0 = ct.g_grid.front();
        const double x1 = ct.g_grid.back();
        bool labelled = false;
        for (int n = static_cast<int>(std::floor(lo - std::abs(ct.eps))) - 1; n <= std::ceil(hi + std::abs(ct.eps)) + 1;
             ++n) {
            for (double sgn : {1.0, -1.0}) {
                const double b = n + sgn * ct.eps;
                if (b < lo - 0.5 || b > hi + 0.5) continue;
                SvgSeries base;
                base.x = {x0, x1};
                base.y = {b, b};
                base.dashed = true;
                base.color = "#555555";
                base.label = labelled ? "" : "N +- eps";
                labelled = true;
                plot.series.push_back(std::move(base));
                if (ct.eps == 0.0) break;
            }
        }
    }
    return plot;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::filesystem::create_directories(dir);
    const auto tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("write_atomic: cannot open " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write_atomic: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace rabi
