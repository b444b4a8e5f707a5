#include "ylat/report.hpp"

#include <charconv>
#include <sstream>

namespace ylat {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string to_csv(const ConvergenceReport& report) {
    std::string out = "level,level_mass_exact,level_mass_float,cumulative_float,residual_float\n";
    for (const ConvergenceRow& row : report.rows) {
        out += std::to_string(row.level) + ",";
        out += format(row.mass) + ",";
        out += format_double(to_double(row.mass)) + ",";
        out += format_double(to_double(row.cumulative)) + ",";
        out += format_double(to_double(row.residual)) + "\n";
    }
    return out;
}

std::string to_structured(const ConvergenceReport& report) {
    std::string out;
    out += "report: convergence\n";
    out += "title: " + report.title + "\n";
    out += "max_level: " + std::to_string(report.max_level) + "\n";
    out += "columns: level mass cumulative residual\n";
    for (const ConvergenceRow& row : report.rows)
        out += std::to_string(row.level) + " " + format(row.mass) + " " + format(row.cumulative) +
               " " + format(row.residual) + "\n";
    out += "total: " + format(report.total()) + "\n";
    out += "residual: " + format(report.residual()) + "\n";
    return out;
}

std::string to_table(const ConvergenceReport& report) {
    std::ostringstream out;
    out << report.title << "\n";
    out << "level   mass                    cumulative              residual\n";
    for (const ConvergenceRow& row : report.rows) {
        std::string mass = format(row.mass);
        if (mass.size() > 22) mass = format_double(to_double(row.mass));
        std::string cum = format_double(to_double(row.cumulative));
        std::string res = format_double(to_double(row.residual));
        out << std::to_string(row.level);
        out << std::string(row.level < 10 ? 7 : (row.level < 100 ? 6 : 5), ' ');
        out << mass << std::string(mass.size() < 24 ? 24 - mass.size() : 1, ' ');
        out << cum << std::string(cum.size() < 24 ? 24 - cum.size() : 1, ' ');
        out << res << "\n";
    }
    out << "residual after level " << report.max_level << ": " << format_double(to_double(report.residual()))
        << "\n";
    return out.str();
}

namespace {

std::string histogram_header(const EntryHistogram& hist) {
    return "box: " + std::to_string(hist.box.row) + "," + std::to_string(hist.box.col) +
           "\ntrials: " + std::to_string(hist.trials) + "\nsteps: " + std::to_string(hist.steps) +
           "\nnot_reached: " + std::to_string(hist.not_reached) + "\n";
}

}  // namespace

std::string to_csv(const EntryHistogram& hist, const std::vector<ComparisonRow>& rows) {
    (void)hist;
    std::string out = "n,count,empirical,analytic,z_score\n";
    for (const ComparisonRow& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.count) + ",";
        out += format_double(r.empirical) + ",";
        out += format_double(r.analytic) + ",";
        out += format_double(r.z_score) + "\n";
    }
    return out;
}

std::string to_structured(const EntryHistogram& hist, const std::vector<ComparisonRow>& rows) {
    std::string out = "report: entry-histogram\n" + histogram_header(hist);
    out += "columns: n count empirical analytic z_score\n";
    for (const ComparisonRow& r : rows)
        out += std::to_string(r.n) + " " + std::to_string(r.count) + " " +
               format_double(r.empirical) + " " + format_double(r.analytic) + " " +
               format_double(r.z_score) + "\n";
    return out;
}

std::string to_table(const EntryHistogram& hist, const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << histogram_header(hist);
    out << "n       count       empirical     analytic      z\n";
    for (const ComparisonRow& r : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-7ld %-11ld %-13.6f %-13.6f %+.3f\n", r.n, r.count,
                      r.empirical, r.analytic, r.z_score);
        out << line;
    }
    return out.str();
}

}  // namespace ylat
