#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comono/curve.hpp"
#include "comono/decomposition.hpp"
#include "comono/filtration.hpp"
#include "comono/lift.hpp"
#include "comono/verification.hpp"

namespace comono::io {

inline constexpr std::string_view kAtomsHeader = "atom_id,weight,f,g";
inline constexpr std::string_view kCurveHeader = "stage,kind,ax,ay,bx,by";
inline constexpr std::string_view kLawHeader = "atom_id,lambda,u1,v1,u2,v2";
inline constexpr std::string_view kSamplesHeader = "sample_id,atom_id,u,xi,eta";
inline constexpr std::string_view kDecompositionHeader = "stage,lambda,u1,v1,u2,v2";
inline constexpr std::string_view kReportHeader = "check,statistic,threshold,pass";

/// Weight sums within this distance of 1 are renormalized on ingest; others are rejected.
inline constexpr double kWeightSumSlack = 1e-6;

/// Shortest decimal that parses back to exactly v.
std::string format_double(double v);

/// Whole-field parse; throws ParseError (tagged with line) on junk or out-of-range values.
double parse_double(std::string_view field, std::size_t line);

/// Reads an atom table. Throws ParseError with the offending line number.
FiltrationModel read_atoms(std::istream& in);
FiltrationModel ingest_atoms(const std::filesystem::path& path);
void write_atoms(const FiltrationModel& model, std::ostream& out);

void write_curve(std::span<const Segment> segments, std::ostream& out);
std::vector<Segment> read_curve(std::istream& in);

/// The curve through max_stage and the outlines of P_1..P_max_stage as an SVG drawing.
void write_curve_svg(StageIndex max_stage, std::ostream& out);

/// Writes `path` as curve CSV and a sibling `.svg` with the same stem. Throws IoError.
void export_curve(StageIndex max_stage, const std::filesystem::path& path);

void write_decomposition(const Decomposition& d, std::ostream& out);

/// Single-branch atoms are written with lambda in {0, 1} and the point repeated.
void write_law(const LiftedLaw& law, std::ostream& out);

/// Inverse of write_law. A row collapses to one branch only when lambda is exactly 0 or 1
/// and both points coincide; anything else is kept as two branches, as written, so that
/// verify_model can judge it.
LiftedLaw read_law(std::istream& in);
LiftedLaw read_law(const std::filesystem::path& path);

void write_samples(const FiltrationModel& model, std::span<const SamplePair> samples, std::ostream& out);

/// Flat `key=value` lines.
void write_report(const VerificationReport& report, std::ostream& out);
/// One CSV row per check.
void write_report_csv(const VerificationReport& report, std::ostream& out);

}  // namespace comono::io
