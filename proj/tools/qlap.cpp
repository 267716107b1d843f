// Command-line front end: tree-shape enumeration, the shift poset, spectra
// and exact characteristic polynomials of the deformed operators, and the
// claim verification suite.
//
// Exit codes: 0 success / all selected checks pass, 1 verification failure,
// 2 usage or input error.

#include <qlap/charpoly.hpp>
#include <qlap/eigensolve.hpp>
#include <qlap/gts.hpp>
#include <qlap/matrix.hpp>
#include <qlap/tree.hpp>
#include <qlap/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

// Output sink: a file when --out is given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// Eigenvalue display: ten significant digits, with sub-1e-9 residue of an
// exact zero printed as 0.
std::string fmt_ev(double v) {
    if (std::abs(v) < 1e-9) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::complex<double> parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected re,im but got: " + s);
    mpq_class re = qlap::rational_from_decimal(s.substr(0, comma));
    mpq_class im = qlap::rational_from_decimal(s.substr(comma + 1));
    return {re.get_d(), im.get_d()};
}

void print_reports(std::ostream& os, const std::vector<qlap::CheckReport>& reports) {
    for (const qlap::CheckReport& r : reports) {
        char line[160];
        std::snprintf(line, sizeof line, "%-32s %s  instances=%ld  elapsed=%ldms",
                      r.claim.c_str(), r.ok() ? "PASS" : "FAIL", r.instances, r.elapsed_ms);
        os << line << "\n";
        for (const std::string& f : r.failures) os << "    FAIL: " << f << "\n";
        for (const std::string& n : r.notes) os << "    note: " << n << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for trees ordered by the generalized shift"};
    app.require_subcommand(1);

    // ----- trees -----
    int trees_n = 6;
    bool trees_oracle = false;
    std::string trees_format = "text", trees_out;
    CLI::App* trees = app.add_subcommand("trees", "List canonical tree shapes of a given order");
    trees->add_option("--n", trees_n, "number of vertices (1..12)")->required();
    trees->add_flag("--oracle", trees_oracle,
                    "use the independent sequence-decoding oracle (2 <= n <= 9)");
    trees->add_option("--format", trees_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    trees->add_option("--out", trees_out, "write to file instead of stdout");

    // ----- poset -----
    int poset_n = 6;
    std::string poset_format = "dot", poset_out;
    CLI::App* poset = app.add_subcommand("poset", "Emit the cover diagram of the shift order");
    poset->add_option("--n", poset_n, "number of vertices (2..12)")->required();
    poset->add_option("--format", poset_format, "dot | json")
        ->check(CLI::IsMember({"dot", "json"}));
    poset->add_option("--out", poset_out, "write to file instead of stdout");

    // ----- spectrum -----
    std::string spec_code, spec_matrix = "qlap", spec_format = "csv", spec_out;
    std::vector<std::string> spec_qs, spec_qts;
    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Eigenvalues of a deformed operator for one shape");
    spectrum->add_option("code", spec_code, "canonical level-sequence, e.g. 0,1,1,1,1,1")
        ->required();
    spectrum->add_option("--matrix", spec_matrix, "qlap | qtlap | ed | edqt")
        ->check(CLI::IsMember({"qlap", "qtlap", "ed", "edqt"}));
    spectrum->add_option("--q", spec_qs, "deformation value (repeatable; qlap/ed)");
    spectrum->add_option("--qt", spec_qts,
                         "complex deformation re,im with conjugate partner (repeatable; "
                         "qtlap/edqt)");
    spectrum->add_option("--format", spec_format, "csv | text")
        ->check(CLI::IsMember({"csv", "text"}));
    spectrum->add_option("--out", spec_out, "write to file instead of stdout");

    // ----- charpoly -----
    std::string cp_code, cp_out;
    std::vector<int> cp_deleted;
    CLI::App* cp = app.add_subcommand(
        "charpoly", "Exact bivariate characteristic polynomial of the deformed operator");
    cp->add_option("code", cp_code, "canonical level-sequence")->required();
    cp->add_option("--delete", cp_deleted, "vertex to delete (repeatable)");
    cp->add_option("--out", cp_out, "write to file instead of stdout");

    // ----- verify -----
    std::string ver_selector = "all", ver_format = "text", ver_out;
    int ver_n = 0, ver_jobs = 0;
    unsigned long long ver_seed = 20260823ULL;
    double ver_slack = 1e-8;
    bool ver_fake = false, ver_timing = false;
    std::vector<std::string> ver_qs;
    CLI::App* verify = app.add_subcommand("verify", "Run the claim verification suite");
    verify->add_option("selector", ver_selector,
                       "all, a group (enumeration, identities, exactpoly, monotonicity, "
                       "structural, interlacing, aux, star, bounds, qt, ed, table1, solvers) "
                       "or a single claim id");
    verify->add_option("--n", ver_n, "cap every size-limited sweep at this many vertices");
    verify->add_option("--q", ver_qs, "replace the default deformation grid (repeatable)");
    verify->add_option("--jobs", ver_jobs, "worker threads (default: all cores)");
    verify->add_option("--seed", ver_seed, "seed for the randomized solver cross-check");
    verify->add_option("--tol-override", ver_slack,
                       "testing only: override the eigenvalue-order slack");
    verify->add_option("--format", ver_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timing", ver_timing, "include elapsed times in JSON output");
    verify->add_option("--out", ver_out, "write to file instead of stdout");
    verify->add_flag("--inject-fake-cover", ver_fake)->group("");  // hidden negative control

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (trees->parsed()) {
            Sink sink(trees_out);
            std::vector<qlap::TreeCode> codes =
                trees_oracle ? qlap::prufer_oracle(trees_n) : qlap::enumerate_trees(trees_n);
            if (trees_format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : codes) j.push_back(c.to_string());
                sink.stream() << j.dump(2) << "\n";
            } else {
                for (const auto& c : codes) sink.stream() << c.to_string() << "\n";
            }
            return 0;
        }

        if (poset->parsed()) {
            Sink sink(poset_out);
            qlap::HasseDiagram h = qlap::build_hasse(poset_n);
            if (poset_format == "json")
                sink.stream() << qlap::hasse_to_json(h).dump(2) << "\n";
            else
                sink.stream() << qlap::hasse_to_dot(h);
            return 0;
        }

        if (spectrum->parsed()) {
            Sink sink(spec_out);
            qlap::LabelledTree t = qlap::decode(qlap::TreeCode::from_string(spec_code));
            bool complex_kind = spec_matrix == "qtlap" || spec_matrix == "edqt";
            if (complex_kind && spec_qts.empty())
                throw std::invalid_argument("--matrix " + spec_matrix +
                                            " needs at least one --qt re,im");
            if (!complex_kind && spec_qs.empty())
                throw std::invalid_argument("--matrix " + spec_matrix +
                                            " needs at least one --q");

            auto emit = [&](const std::string& label, const std::vector<double>& vals) {
                std::ostream& os = sink.stream();
                if (spec_format == "text") {
                    os << "q=" << label << ":";
                    for (double v : vals) os << " " << fmt_ev(v);
                    os << "\n";
                } else {
                    for (std::size_t i = 0; i < vals.size(); ++i)
                        os << (i ? "," : "") << fmt_ev(vals[i]);
                    os << "\n";
                }
            };

            if (complex_kind) {
                qlap::Orientation orient = qlap::default_orientation(t);
                for (const std::string& s : spec_qts) {
                    std::complex<double> q = parse_complex(s);
                    qlap::ComplexMatrix m =
                        spec_matrix == "qtlap"
                            ? qlap::qt_laplacian<std::complex<double>>(t, q, std::conj(q),
                                                                      orient)
                            : qlap::exp_distance_qt<std::complex<double>>(t, q, std::conj(q),
                                                                          orient);
                    emit(s, qlap::spectrum_of_herm(m).values);
                }
            } else {
                for (const std::string& s : spec_qs) {
                    double q = qlap::rational_from_decimal(s).get_d();
                    qlap::RealMatrix m = spec_matrix == "qlap"
                                             ? qlap::q_laplacian<double>(t, q)
                                             : qlap::exp_distance<double>(t, q);
                    emit(s, qlap::spectrum_of_sym(m).values);
                }
            }
            return 0;
        }

        if (cp->parsed()) {
            Sink sink(cp_out);
            qlap::LabelledTree t = qlap::decode(qlap::TreeCode::from_string(cp_code));
            std::set<int> deleted(cp_deleted.begin(), cp_deleted.end());
            sink.stream() << qlap::charpoly(t, deleted).to_string() << "\n";
            return 0;
        }

        if (verify->parsed()) {
            Sink sink(ver_out);
            qlap::VerifyOptions o;
            o.jobs = ver_jobs;  // 0 = all cores (parallel_for interprets)
            o.seed = ver_seed;
            o.slack = ver_slack;
            o.inject_fake_cover = ver_fake;
            if (ver_n > 0) o.clamp_to(ver_n);
            if (!ver_qs.empty()) {
                o.grid.clear();
                for (const std::string& s : ver_qs) {
                    qlap::QGridPoint g = qlap::q_point(s);
                    if (g.exact == 0)
                        throw std::invalid_argument(
                            "deformation value 0 is excluded from verification (every "
                            "operator is the identity there)");
                    o.grid.push_back(g);
                }
            }

            if (ver_selector == "table1") {
                qlap::Table1Result t1 = qlap::locate_table1(o);
                std::ostream& os = sink.stream();
                if (t1.lower_index >= 0) {
                    os << "recovered cover pair: " << t1.lower.to_string() << "  ->  "
                       << t1.upper.to_string() << "\n";
                    os << "q        largest(lo)    largest(hi)    smallest(lo)   "
                          "smallest(hi)   second(lo)     second(hi)\n";
                    static const char* kQs[5] = {"0.1", "0.5", "1.0", "1.5", "10.0"};
                    for (int r = 0; r < 5; ++r) {
                        char line[200];
                        std::snprintf(line, sizeof line,
                                      "%-8s %-14.10g %-14.10g %-14.10g %-14.10g %-14.10g "
                                      "%-14.10g",
                                      kQs[r], t1.values[r][0], t1.values[r][1],
                                      t1.values[r][2], t1.values[r][3], t1.values[r][4],
                                      t1.values[r][5]);
                        os << line << "\n";
                    }
                }
                print_reports(os, {t1.report});
                return t1.report.ok() ? 0 : 1;
            }

            std::vector<qlap::CheckReport> reports = qlap::run_checks_for(o, ver_selector);
            std::ostream& os = sink.stream();
            if (ver_format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : reports) j.push_back(qlap::report_to_json(r, ver_timing));
                os << j.dump(2) << "\n";
            } else {
                print_reports(os, reports);
                if (!qlap::all_ok(reports)) {
                    nlohmann::json j = nlohmann::json::array();
                    for (const auto& r : reports)
                        if (!r.ok()) j.push_back(qlap::report_to_json(r, false));
                    os << "failure dump:\n" << j.dump(2) << "\n";
                }
            }
            return qlap::all_ok(reports) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
