#include "comono/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "comono/errors.hpp"

namespace comono::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

/// Line-oriented CSV reader: checks the header, skips blank lines, counts lines.
class CsvReader {
  public:
    CsvReader(std::istream& in, std::string_view header, std::size_t columns)
        : in_(in), columns_(columns) {
        if (!next_line()) throw ParseError("missing header, expected '" + std::string(header) + "'", 1);
        if (trim(line_) != header) {
            throw ParseError("bad header '" + std::string(trim(line_)) + "', expected '" + std::string(header) + "'",
                             line_no_);
        }
    }

    /// Next data row, or false at end of input.
    bool next(std::vector<std::string_view>& fields) {
        while (next_line()) {
            if (trim(line_).empty()) continue;
            fields = split(line_);
            if (fields.size() != columns_) {
                throw ParseError("expected " + std::to_string(columns_) + " fields, found " +
                                     std::to_string(fields.size()),
                                 line_no_);
            }
            return true;
        }
        return false;
    }

    std::size_t line() const { return line_no_; }

  private:
    bool next_line() {
        if (!std::getline(in_, line_)) return false;
        ++line_no_;
        return true;
    }

    std::istream& in_;
    std::size_t columns_;
    std::string line_;
    std::size_t line_no_ = 0;
};

double parse_finite(std::string_view field, std::size_t line, std::string_view what) {
    const double v = parse_double(field, line);
    if (!std::isfinite(v)) throw ParseError(std::string(what) + " is not finite", line);
    return v;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view field, std::size_t line) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec == std::errc::result_out_of_range) {
        throw ParseError("value '" + std::string(field) + "' is out of double range (not finite)", line);
    }
    if (res.ec != std::errc() || res.ptr != field.data() + field.size() || field.empty()) {
        throw ParseError("cannot parse number '" + std::string(field) + "'", line);
    }
    return v;
}

FiltrationModel read_atoms(std::istream& in) {
    CsvReader csv(in, kAtomsHeader, 4);
    std::vector<Atom> atoms;
    std::unordered_set<std::string> seen;
    std::vector<std::string_view> f;
    double total = 0.0;
    while (csv.next(f)) {
        const std::size_t line = csv.line();
        Atom atom{std::string(f[0]), 0.0, {}};
        if (atom.id.empty()) throw ParseError("empty atom id", line);
        if (!seen.insert(atom.id).second) throw ParseError("duplicate atom id '" + atom.id + "'", line);
        atom.weight = parse_finite(f[1], line, "weight");
        if (!(atom.weight > 0.0)) throw ParseError("weight must be positive", line);
        atom.payoff = {parse_finite(f[2], line, "f"), parse_finite(f[3], line, "g")};
        total += atom.weight;
        atoms.push_back(std::move(atom));
    }
    if (atoms.empty()) throw ParseError("atom table has no rows");
    if (std::fabs(total - 1.0) > kWeightSumSlack) {
        throw ParseError("weights sum to " + format_double(total) + ", expected 1");
    }
    for (auto& a : atoms) a.weight /= total;
    try {
        return FiltrationModel(std::move(atoms));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

FiltrationModel ingest_atoms(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_atoms(in);
}

void write_atoms(const FiltrationModel& model, std::ostream& out) {
    out << kAtomsHeader << '\n';
    for (const auto& a : model.atoms()) {
        out << a.id << ',' << format_double(a.weight) << ',' << format_double(a.payoff.x) << ','
            << format_double(a.payoff.y) << '\n';
    }
}

void write_curve(std::span<const Segment> segments, std::ostream& out) {
    out << kCurveHeader << '\n';
    for (const auto& s : segments) {
        out << s.stage << ',' << to_string(s.kind) << ',' << format_double(s.a.x) << ',' << format_double(s.a.y)
            << ',' << format_double(s.b.x) << ',' << format_double(s.b.y) << '\n';
    }
}

std::vector<Segment> read_curve(std::istream& in) {
    CsvReader csv(in, kCurveHeader, 6);
    std::vector<Segment> out;
    std::vector<std::string_view> f;
    while (csv.next(f)) {
        const std::size_t line = csv.line();
        Segment s{};
        s.stage = static_cast<int>(parse_finite(f[0], line, "stage"));
        try {
            s.kind = segment_kind_from_string(f[1]);
        } catch (const InvalidInput& e) {
            throw ParseError(e.what(), line);
        }
        s.a = {parse_finite(f[2], line, "ax"), parse_finite(f[3], line, "ay")};
        s.b = {parse_finite(f[4], line, "bx"), parse_finite(f[5], line, "by")};
        out.push_back(s);
    }
    return out;
}

void write_curve_svg(StageIndex max_stage, std::ostream& out) {
    const double extent = max_stage.half_width();
    const double pad = 0.05 * extent;
    const double view = 2.0 * (extent + pad);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(-extent - pad) << ' '
        << format_double(-extent - pad) << ' ' << format_double(view) << ' ' << format_double(view)
        << "\" width=\"800\" height=\"800\">\n";
    out << "<g transform=\"scale(1,-1)\" fill=\"none\" vector-effect=\"non-scaling-stroke\">\n";
    constexpr Point2 unit[4] = {{-4, -4}, {4, 2}, {4, 4}, {-4, -2}};
    for (int k = 1; k <= max_stage.value(); ++k) {
        const double s = StageIndex(k).radius();
        out << "<polygon stroke=\"#9aa5b1\" stroke-width=\"" << format_double(extent / 400.0) << "\" points=\"";
        for (int i = 0; i < 4; ++i) {
            out << (i ? " " : "") << format_double(s * unit[i].x) << ',' << format_double(s * unit[i].y);
        }
        out << "\"/>\n";
    }
    const auto segments = curve_segments(max_stage);
    out << "<polyline stroke=\"#c0392b\" stroke-width=\"" << format_double(extent / 200.0) << "\" points=\"";
    out << format_double(segments.front().a.x) << ',' << format_double(segments.front().a.y);
    for (const auto& seg : segments) out << ' ' << format_double(seg.b.x) << ',' << format_double(seg.b.y);
    out << "\"/>\n</g>\n</svg>\n";
}

void export_curve(StageIndex max_stage, const std::filesystem::path& path) {
    {
        auto out = open_out(path);
        write_curve(curve_segments(max_stage), out);
        if (!out) throw IoError("failed writing '" + path.string() + "'");
    }
    auto svg_path = path;
    svg_path.replace_extension(".svg");
    auto svg = open_out(svg_path);
    write_curve_svg(max_stage, svg);
    if (!svg) throw IoError("failed writing '" + svg_path.string() + "'");
}

void write_decomposition(const Decomposition& d, std::ostream& out) {
    out << kDecompositionHeader << '\n'
        << d.stage.value() << ',' << format_double(d.lambda) << ',' << format_double(d.e1.x) << ','
        << format_double(d.e1.y) << ',' << format_double(d.e2.x) << ',' << format_double(d.e2.y) << '\n';
}

void write_law(const LiftedLaw& law, std::ostream& out) {
    out << kLawHeader << '\n';
    for (const auto& a : law.atoms) {
        const Branch& first = a.branches.front();
        const Branch& second = a.branches.back();
        // A single-branch atom stores its point twice; lambda tells which side it came from.
        double lambda = first.prob;
        if (a.branches.size() == 1) lambda = first.point.x < 0.0 ? 1.0 : 0.0;
        out << a.atom_id << ',' << format_double(lambda) << ',' << format_double(first.point.x) << ','
            << format_double(first.point.y) << ',' << format_double(second.point.x) << ','
            << format_double(second.point.y) << '\n';
    }
}

LiftedLaw read_law(std::istream& in) {
    CsvReader csv(in, kLawHeader, 6);
    LiftedLaw law;
    std::vector<std::string_view> f;
    while (csv.next(f)) {
        const std::size_t line = csv.line();
        AtomLaw entry{std::string(f[0]), {}};
        if (entry.atom_id.empty()) throw ParseError("empty atom id", line);
        const double lambda = parse_finite(f[1], line, "lambda");
        const Point2 e1{parse_finite(f[2], line, "u1"), parse_finite(f[3], line, "v1")};
        const Point2 e2{parse_finite(f[4], line, "u2"), parse_finite(f[5], line, "v2")};
        if ((lambda == 0.0 || lambda == 1.0) && e1 == e2) {
            entry.branches = {{1.0, e1}};
        } else {
            entry.branches = {{lambda, e1}, {1.0 - lambda, e2}};
        }
        law.atoms.push_back(std::move(entry));
    }
    return law;
}

LiftedLaw read_law(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_law(in);
}

void write_samples(const FiltrationModel& model, std::span<const SamplePair> samples, std::ostream& out) {
    out << kSamplesHeader << '\n';
    std::size_t id = 0;
    for (const auto& s : samples) {
        out << id++ << ',' << model[s.atom].id << ',' << format_double(s.u) << ',' << format_double(s.xi) << ','
            << format_double(s.eta) << '\n';
    }
}

void write_report(const VerificationReport& report, std::ostream& out) {
    out << "overall_pass=" << (report.overall_pass ? "true" : "false") << '\n'
        << "max_reconstruction_error=" << format_double(report.max_reconstruction_error) << '\n'
        << "min_comonotone_product=" << format_double(report.min_comonotone_product) << '\n'
        << "min_norm_bound_margin=" << format_double(report.min_norm_bound_margin) << '\n'
        << "cond_exp_max_residual=" << format_double(report.cond_exp_max_residual) << '\n'
        << "mc_checks=" << report.mc_checks.size() << '\n';
    auto row = [&](const Check& c) {
        out << "check." << c.name << ".statistic=" << format_double(c.statistic) << '\n'
            << "check." << c.name << ".threshold=" << format_double(c.threshold) << '\n'
            << "check." << c.name << ".pass=" << (c.pass ? "true" : "false") << '\n';
    };
    for (const auto& c : report.checks) row(c);
    for (const auto& c : report.mc_checks) row(c);
}

void write_report_csv(const VerificationReport& report, std::ostream& out) {
    out << kReportHeader << '\n';
    auto row = [&](const Check& c) {
        out << c.name << ',' << format_double(c.statistic) << ',' << format_double(c.threshold) << ','
            << (c.pass ? "true" : "false") << '\n';
    };
    for (const auto& c : report.checks) row(c);
    for (const auto& c : report.mc_checks) row(c);
}

}  // namespace comono::io
