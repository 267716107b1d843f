#pragma once
// Claim verification suite.
//
// Each check_* function sweeps one family of spectral or polynomial claims
// about trees ordered by the shift relation (gts.hpp) and reports structured
// results.  Claims that are polynomial identities are checked exactly over
// Z[q,x] or Q; claims about eigenvalue positions are checked numerically at a
// grid of deformation parameters with pinned tolerances.  Every claim has a
// stable string id listed in claim_registry(); the CLI and the acceptance
// binary select checks by those ids or by group names.

#include <qlap/bipoly.hpp>
#include <qlap/charpoly.hpp>
#include <qlap/eigensolve.hpp>
#include <qlap/gts.hpp>
#include <qlap/matrix.hpp>
#include <qlap/roots.hpp>
#include <qlap/tree.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace qlap {

// ---------------------------------------------------------------------------
// Deformation grids
// ---------------------------------------------------------------------------

// Parse a plain decimal literal ("-1.5", "0.1", "10") into an exact rational.
inline mpq_class rational_from_decimal(const std::string& s) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("not a decimal literal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("not a decimal literal: " + s);
        }
    }
    if (!seen_digit) throw std::invalid_argument("not a decimal literal: " + s);
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (int i = 0; i < frac_digits; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

// A real deformation value carried both as a double (for eigensolves) and as
// an exact rational (for polynomial specialization and sign tests).
struct QGridPoint {
    std::string label;
    double value = 0.0;
    mpq_class exact;
};

inline QGridPoint q_point(const std::string& literal) {
    mpq_class e = rational_from_decimal(literal);
    return {literal, e.get_d(), e};
}

// Default grid: both signs, both regimes (|q| < 1 and |q| > 1) plus the
// degenerate |q| = 1.  Zero is excluded: every matrix is the identity there.
inline std::vector<QGridPoint> default_q_grid() {
    std::vector<QGridPoint> g;
    for (const char* s : {"0.1", "-0.1", "0.5", "-0.5", "0.9", "-0.9", "1.0", "-1.0", "1.5",
                          "-1.5", "10.0", "-10.0"})
        g.push_back(q_point(s));
    return g;
}

// A complex deformation value for the two-parameter operator with the second
// parameter fixed to the conjugate (the Hermitian slice).  Exact Gaussian
// rational coordinates back the exact matrix identities.
struct QtGridPoint {
    std::string label;
    std::complex<double> q;
    GaussRat exact_q;
    GaussRat exact_t;  // conjugate of exact_q
};

inline QtGridPoint qt_point(const std::string& label, const mpq_class& re, const mpq_class& im) {
    GaussRat q(re, im);
    return {label, {re.get_d(), im.get_d()}, q, q.conj()};
}

inline std::vector<QtGridPoint> default_qt_grid() {
    return {
        qt_point("i", 0, 1),
        qt_point("0.6+0.8i", mpq_class(3, 5), mpq_class(4, 5)),
        qt_point("0.5i", 0, mpq_class(1, 2)),
        qt_point("2i", 0, 2),
    };
}

// ---------------------------------------------------------------------------
// Options and reports
// ---------------------------------------------------------------------------

struct VerifyOptions {
    int jobs = 1;                  // worker threads for embarrassingly parallel sweeps
    bool inject_fake_cover = false;  // negative control: adds a known-false cover

    std::vector<QGridPoint> grid = default_q_grid();
    std::vector<QtGridPoint> qt_grid = default_qt_grid();

    // Per-check size caps (number of vertices).
    int mono_n_lo = 4, mono_n_hi = 9;  // cover monotonicity + extremality
    int structural_n = 8;              // determinant product / inertia, simple minimum
    int interlacing_n = 8;             // leaf-deletion interlacing chains
    int aux_n = 8;                     // auxiliary polynomial and difference signs
    int star_n_lo = 3, star_n_hi = 12;  // star closed form
    int bounds_n = 9;                  // global eigenvalue bounds
    int qt_mono_n = 7;                 // two-parameter cover monotonicity
    int qt_psd_n = 8;                  // unit-modulus Hermitian positive semidefiniteness
    int qt_recip_n = 6;                // reciprocal-pair characteristic polynomial collapse
    int qt_orient_n = 6;               // orientation independence of the Hermitian spectrum
    int ed_n = 8;                      // exponential distance matrix claims
    int ident_n = 8;                   // exact polynomial identities (join, factorization)
    int enum_n = 9;                    // enumeration cross-check against the sequence oracle

    int cross_count = 500;             // random instances for solver cross-validation
    unsigned long long seed = 20260823ULL;
    double slack = 1e-8;               // tolerance for eigenvalue order comparisons

    // Cap every size-limited sweep at n vertices (never raises a cap).
    void clamp_to(int n) {
        n = std::max(2, n);
        auto cap = [&](int& v) { v = std::min(v, n); };
        cap(mono_n_hi);
        mono_n_lo = std::min(mono_n_lo, mono_n_hi);
        cap(structural_n);
        cap(interlacing_n);
        cap(aux_n);
        cap(star_n_hi);
        star_n_lo = std::min(star_n_lo, star_n_hi);
        cap(bounds_n);
        cap(qt_mono_n);
        cap(qt_psd_n);
        cap(qt_recip_n);
        cap(qt_orient_n);
        cap(ed_n);
        cap(ident_n);
        cap(enum_n);
    }
};

struct CheckReport {
    std::string claim;
    long instances = 0;              // elementary assertions evaluated
    std::vector<std::string> failures;  // capped; summary line appended when truncated
    std::vector<std::string> notes;  // observations reported without failing the check
    double max_violation = 0.0;      // largest margin by which a failed bound was exceeded
    long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

inline nlohmann::json report_to_json(const CheckReport& r, bool include_timing) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["instances"] = r.instances;
    j["ok"] = r.ok();
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    j["max_violation"] = r.max_violation;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

class ReportBuilder {
  public:
    explicit ReportBuilder(std::string claim) : start_(std::chrono::steady_clock::now()) {
        r_.claim = std::move(claim);
    }

    void expect(bool ok, double excess, const std::string& msg) {
        ++r_.instances;
        if (!ok) {
            fail(msg);
            r_.max_violation = std::max(r_.max_violation, excess);
        }
    }
    void expect(bool ok, const std::string& msg) { expect(ok, 0.0, msg); }

    void fail(const std::string& msg) {
        ++dropped_;
        if (static_cast<int>(r_.failures.size()) < kMaxFailures)
            r_.failures.push_back(msg);
    }
    void note(const std::string& msg) { r_.notes.push_back(msg); }
    void count(long k) { r_.instances += k; }

    CheckReport finish() {
        long shown = static_cast<long>(r_.failures.size());
        if (dropped_ > shown)
            r_.failures.push_back("... and " + std::to_string(dropped_ - shown) +
                                  " more failures");
        r_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        return r_;
    }

  private:
    static constexpr int kMaxFailures = 25;
    CheckReport r_;
    long dropped_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Claim registry
// ---------------------------------------------------------------------------

namespace claims {
inline constexpr const char* kTreeEnumerationOracle = "tree-enumeration-oracle";
inline constexpr const char* kJoinCharpolyIdentity = "join-charpoly-identity";
inline constexpr const char* kCoverDifferenceFactorization = "cover-difference-factorization";
inline constexpr const char* kCoverPartsParity = "cover-parts-parity";
inline constexpr const char* kCharpolyDetIdentity = "charpoly-det-identity";
inline constexpr const char* kSpectrumSignSymmetric = "spectrum-sign-symmetric";
inline constexpr const char* kCoverMonotoneMax = "cover-monotone-max";
inline constexpr const char* kCoverMonotoneMin = "cover-monotone-min";
inline constexpr const char* kCoverMonotoneSecond = "cover-monotone-second";
inline constexpr const char* kPathStarExtremal = "path-star-extremal";
inline constexpr const char* kCoverMinVsSecond = "cover-min-vs-second";
inline constexpr const char* kDetProductInertia = "det-product-inertia";
inline constexpr const char* kMinEigenvalueSimple = "min-eigenvalue-simple";
inline constexpr const char* kLeafInterlacingInner = "leaf-interlacing-inner";
inline constexpr const char* kLeafInterlacingOuter = "leaf-interlacing-outer";
inline constexpr const char* kSubtreeMaxMonotone = "subtree-max-monotone";
inline constexpr const char* kPartsSecondEvBound = "parts-second-ev-bound";
inline constexpr const char* kAuxPolyShape = "aux-poly-shape";
inline constexpr const char* kAuxPolyRootWindow = "aux-poly-root-window";
inline constexpr const char* kAuxPolySignParity = "aux-poly-sign-parity";
inline constexpr const char* kDifferenceSignLow = "difference-sign-low";
inline constexpr const char* kDifferencePositiveHigh = "difference-positive-high";
inline constexpr const char* kStarSpectrumClosedForm = "star-spectrum-closed-form";
inline constexpr const char* kMaxEigenvalueBound = "max-eigenvalue-bound";
inline constexpr const char* kSecondEigenvalueBound = "second-eigenvalue-bound";
inline constexpr const char* kQtCoverMonotone = "qt-cover-monotone";
inline constexpr const char* kQtEigenvalueBounds = "qt-eigenvalue-bounds";
inline constexpr const char* kQtReciprocalLaplacian = "qt-reciprocal-laplacian";
inline constexpr const char* kQtUnitHermitianPsd = "qt-unit-hermitian-psd";
inline constexpr const char* kQtOrientationInvariance = "qt-orientation-invariance";
inline constexpr const char* kEdInverseRelation = "ed-inverse-relation";
inline constexpr const char* kEdCoverMonotone = "ed-cover-monotone";
inline constexpr const char* kEdUnitQDegenerate = "ed-unit-q-degenerate";
inline constexpr const char* kEdqtInverseRelation = "edqt-inverse-relation";
inline constexpr const char* kTableOnePair = "table-one-pair";
inline constexpr const char* kSolverCrossValidation = "solver-cross-validation";
}  // namespace claims

// Group name -> claim ids covered by that group's checker, in execution order.
inline const std::vector<std::pair<std::string, std::vector<std::string>>>& check_groups() {
    using namespace claims;
    static const std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
        {"enumeration", {kTreeEnumerationOracle}},
        {"identities", {kJoinCharpolyIdentity, kCoverDifferenceFactorization, kCoverPartsParity}},
        {"exactpoly", {kCharpolyDetIdentity, kSpectrumSignSymmetric}},
        {"monotonicity",
         {kCoverMonotoneMax, kCoverMonotoneMin, kCoverMonotoneSecond, kPathStarExtremal,
          kCoverMinVsSecond}},
        {"structural", {kDetProductInertia, kMinEigenvalueSimple}},
        {"interlacing",
         {kLeafInterlacingInner, kLeafInterlacingOuter, kSubtreeMaxMonotone, kPartsSecondEvBound}},
        {"aux",
         {kAuxPolyShape, kAuxPolyRootWindow, kAuxPolySignParity, kDifferenceSignLow,
          kDifferencePositiveHigh}},
        {"star", {kStarSpectrumClosedForm}},
        {"bounds", {kMaxEigenvalueBound, kSecondEigenvalueBound}},
        {"qt",
         {kQtCoverMonotone, kQtEigenvalueBounds, kQtReciprocalLaplacian, kQtUnitHermitianPsd,
          kQtOrientationInvariance}},
        {"ed", {kEdInverseRelation, kEdCoverMonotone, kEdUnitQDegenerate, kEdqtInverseRelation}},
        {"table1", {kTableOnePair}},
        {"solvers", {kSolverCrossValidation}},
    };
    return groups;
}

inline const std::vector<std::string>& claim_registry() {
    static const std::vector<std::string> all = [] {
        std::vector<std::string> v;
        for (const auto& [group, ids] : check_groups())
            for (const auto& id : ids) v.push_back(id);
        return v;
    }();
    return all;
}

// ---------------------------------------------------------------------------
// Small shared helpers
// ---------------------------------------------------------------------------

namespace vdetail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Run fn(0..count-1); with jobs > 1 the items are distributed over a thread
// pool.  Each item must write only to its own output slot so that results are
// independent of scheduling.
template <typename Fn>
void parallel_for(long count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    long workers = std::min<long>(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

// Decoded representatives of every node of a Hasse diagram.
inline std::vector<LabelledTree> node_reps(const HasseDiagram& h) {
    std::vector<LabelledTree> reps;
    reps.reserve(h.nodes.size());
    for (const auto& c : h.nodes) reps.push_back(decode(c));
    return reps;
}

// Symmetric-deformation spectra of every node at every grid point;
// out[node][grid_index].
inline std::vector<std::vector<Spectrum>> grid_spectra(const std::vector<LabelledTree>& reps,
                                                       const std::vector<QGridPoint>& grid,
                                                       int jobs) {
    std::vector<std::vector<Spectrum>> out(reps.size());
    parallel_for(static_cast<long>(reps.size()), jobs, [&](long i) {
        std::vector<Spectrum> row;
        row.reserve(grid.size());
        for (const auto& g : grid)
            row.push_back(spectrum_of_sym(q_laplacian<double>(reps[i], g.value)));
        out[i] = std::move(row);
    });
    return out;
}

// Exact characteristic polynomials of every node (shared by several sweeps).
inline std::vector<BiPoly> node_charpolys(const std::vector<LabelledTree>& reps, int jobs) {
    std::vector<BiPoly> out(reps.size());
    parallel_for(static_cast<long>(reps.size()), jobs, [&](long i) { out[i] = charpoly(reps[i]); });
    return out;
}

// Largest-eigenvalue upper bound attained by the star: with u the squared
// deformation value, (2 + (n-2)u + sqrt(u((n-2)^2 u + 4(n-1)))) / 2.
inline double star_upper_bound(int n, double u) {
    double radicand = u * ((n - 2.0) * (n - 2.0) * u + 4.0 * (n - 1.0));
    return (2.0 + (n - 2.0) * u + std::sqrt(std::max(0.0, radicand))) / 2.0;
}

inline int sign_of(const mpq_class& v) { return (v > 0) - (v < 0); }

// Whether the second-smallest-eigenvalue cover ordering is asserted at a
// deformation value with the given squared magnitude.  The ordering genuinely
// reverses for weak deformations once n >= 8: sweeping every cover for
// n <= 12 over a dense grid of values shows violations whose largest |q|
// grows with size (0.38 at n=8, 0.56 at n=9, 0.68 at n=10, 0.76 at n=11,
// 0.80 at n=12) while |q| >= 0.82 stays clean throughout the supported size
// range.  Asserting only at squared magnitude >= 81/100 keeps a safety margin
// and still covers the default grid points 0.9, 1, 1.5 and 10; below the
// threshold violations are tallied into a report note instead.  The same
// threshold governs the mirrored second-largest direction of the exponential
// distance matrix and the Hermitian variant (isospectral with the real
// operator at the magnitude of its deformation value).
inline bool second_order_asserted(const mpq_class& q_squared) {
    return q_squared >= mpq_class(81, 100);
}

// Vertex of maximum degree (the hub of a star).
inline int hub_vertex(const LabelledTree& t) {
    int best = 0;
    for (int v = 1; v < t.n; ++v)
        if (t.degree(v) > t.degree(best)) best = v;
    return best;
}

}  // namespace vdetail

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

// Shape enumeration matches the independent sequence-decoding oracle, and the
// class counts match the frozen reference sequence.
inline std::vector<CheckReport> check_enumeration(const VerifyOptions& o) {
    ReportBuilder rb(claims::kTreeEnumerationOracle);
    static const long kCounts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 2; n <= std::min(o.enum_n, 9); ++n) {
        std::vector<TreeCode> fast = enumerate_trees(n);
        std::vector<TreeCode> slow = prufer_oracle(n);
        rb.expect(fast == slow, "n=" + std::to_string(n) +
                                    ": enumeration disagrees with the sequence-decoding oracle (" +
                                    std::to_string(fast.size()) + " vs " +
                                    std::to_string(slow.size()) + " classes)");
        rb.expect(static_cast<long>(fast.size()) == kCounts[n],
                  "n=" + std::to_string(n) + ": expected " + std::to_string(kCounts[n]) +
                      " classes, enumerated " + std::to_string(fast.size()));
    }
    for (int n = 10; n <= std::min(o.enum_n, 12); ++n) {
        std::vector<TreeCode> fast = enumerate_trees(n);
        rb.expect(static_cast<long>(fast.size()) == kCounts[n],
                  "n=" + std::to_string(n) + ": expected " + std::to_string(kCounts[n]) +
                      " classes, enumerated " + std::to_string(fast.size()));
    }
    return {rb.finish()};
}

// Exact polynomial identities: the two-piece join formula for characteristic
// polynomials, the three-factor factorization of the difference across a
// cover, and the parity pattern of the three part sizes.
inline std::vector<CheckReport> check_identities(const VerifyOptions& o) {
    std::vector<CheckReport> out;

    {  // join identity over all ways to connect two rooted shapes by an edge
        ReportBuilder rb(claims::kJoinCharpolyIdentity);
        struct Job {
            LabelledTree a, b;
            int va, vb;
            std::string desc;
        };
        std::vector<Job> items;
        for (int n1 = 1; n1 + 1 <= o.ident_n; ++n1) {
            std::vector<TreeCode> as = enumerate_trees(n1);
            for (int n2 = n1; n1 + n2 <= o.ident_n; ++n2) {
                std::vector<TreeCode> bs = enumerate_trees(n2);
                for (std::size_t i = 0; i < as.size(); ++i) {
                    LabelledTree ta = decode(as[i]);
                    for (std::size_t j = (n1 == n2 ? i : 0); j < bs.size(); ++j) {
                        LabelledTree tb = decode(bs[j]);
                        for (int va = 0; va < n1; ++va)
                            for (int vb = 0; vb < n2; ++vb)
                                items.push_back({ta, tb, va, vb,
                                                 as[i].to_string() + "@" + std::to_string(va) +
                                                     " + " + bs[j].to_string() + "@" +
                                                     std::to_string(vb)});
                    }
                }
            }
        }
        std::vector<std::string> errs(items.size());
        vdetail::parallel_for(static_cast<long>(items.size()), o.jobs, [&](long k) {
            try {
                BiPoly r = join_identity_residual(items[k].a, items[k].va, items[k].b,
                                                  items[k].vb);
                if (!r.is_zero()) errs[k] = "join residual nonzero for " + items[k].desc;
            } catch (const std::exception& e) {
                errs[k] = std::string("exception for ") + items[k].desc + ": " + e.what();
            }
        });
        for (const auto& e : errs) rb.expect(e.empty(), e);
        out.push_back(rb.finish());
    }

    {  // per-cover difference factorization, double root at zero, part parity
        ReportBuilder rf(claims::kCoverDifferenceFactorization);
        ReportBuilder rp(claims::kCoverPartsParity);
        for (int n = 4; n <= o.ident_n; ++n) {
            HasseDiagram h = build_hasse(n);
            std::vector<LabelledTree> reps = vdetail::node_reps(h);
            std::vector<BiPoly> fs = vdetail::node_charpolys(reps, o.jobs);
            long m = static_cast<long>(h.covers.size());
            std::vector<std::string> ferr(m), derr(m), perr(m);
            vdetail::parallel_for(m, o.jobs, [&](long k) {
                auto [lo, hi] = h.covers[k];
                const ShiftSite& site = h.witnesses[k];
                std::string where = "n=" + std::to_string(n) + " cover " +
                                    h.nodes[lo].to_string() + " -> " + h.nodes[hi].to_string();
                try {
                    if (!difference_factorization_residual(reps[lo], site).is_zero())
                        ferr[k] = "factorization residual nonzero at " + where;
                    BiPoly d = fs[lo] - fs[hi];
                    if (!d.coeff_of_x(0).is_zero() || !d.coeff_of_x(1).is_zero())
                        derr[k] = "difference lacks a double root at x=0 at " + where;
                    CoverDecomposition dec = decompose_cover(reps[lo], site);
                    int p = dec.path_part.n, b1 = dec.branch_u.n, b2 = dec.branch_v.n;
                    int odd = (p % 2) + (b1 % 2) + (b2 % 2);
                    bool parity_ok = (p + b1 + b2 == n + 2) &&
                                     (n % 2 == 0 ? (odd == 0 || odd == 2) : (odd == 1 || odd == 3));
                    if (!parity_ok)
                        perr[k] = "part sizes " + std::to_string(p) + "," + std::to_string(b1) +
                                  "," + std::to_string(b2) + " break the parity pattern at " +
                                  where;
                } catch (const std::exception& e) {
                    ferr[k] = "exception at " + where + ": " + e.what();
                }
            });
            for (long k = 0; k < m; ++k) {
                rf.expect(ferr[k].empty(), ferr[k]);
                rf.expect(derr[k].empty(), derr[k]);
                rp.expect(perr[k].empty(), perr[k]);
            }
        }
        out.push_back(rf.finish());
        out.push_back(rp.finish());
    }
    return out;
}

// Exact constant term (the signed determinant value 1 - q^2) and evenness in
// q of every characteristic polynomial; numerically, the spectrum is
// invariant under negating the deformation value.
inline std::vector<CheckReport> check_exact_charpoly(const VerifyOptions& o) {
    ReportBuilder rdet(claims::kCharpolyDetIdentity);
    ReportBuilder rsym(claims::kSpectrumSignSymmetric);
    BiPoly qq = bp_q() * bp_q();
    for (int n = 1; n <= o.structural_n; ++n) {
        BiPoly expected_const = bp_const(1) - qq;  // determinant of the operator itself
        if (n % 2 != 0) expected_const = -expected_const;  // sign from det(-M) = (-1)^n det M
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            BiPoly f = charpoly(t);
            rdet.expect(f.at_x_zero() == expected_const,
                        "constant term of the characteristic polynomial is not the signed "
                        "determinant for " +
                            c.to_string());
            rsym.expect(f.has_only_even_q_powers(),
                        "characteristic polynomial has an odd power of q for " + c.to_string());
            if (n >= 2) {
                for (const QGridPoint& g : o.grid) {
                    if (g.value <= 0) continue;  // pair each positive value with its negative
                    RealMatrix mp = q_laplacian<double>(t, g.value);
                    Spectrum sp = spectrum_of_sym(mp);
                    Spectrum sm = spectrum_of_sym(q_laplacian<double>(t, -g.value));
                    double tol = 1e-9 * std::max(1.0, inf_norm(mp));
                    double worst = 0.0;
                    for (std::size_t i = 0; i < sp.values.size(); ++i)
                        worst = std::max(worst, std::abs(sp.values[i] - sm.values[i]));
                    rsym.expect(worst <= tol, worst - tol,
                                "spectrum changed under q -> -q for " + c.to_string() + " at q=" +
                                    g.label + " (max diff " + vdetail::fmt(worst) + ")");
                }
            }
        }
    }
    return {rdet.finish(), rsym.finish()};
}

// Eigenvalue monotonicity along covers (largest up, smallest down, second
// smallest up), the cross bound min(lower) <= second-min(upper), and global
// extremality of the path (unique minimum) and star (unique maximum).
//
// The largest/smallest directions hold at every deformation value.  The
// second-smallest direction (and with it the path lower envelope) fails for
// weak deformations once n >= 8, so it is asserted only above the squared
// magnitude threshold of vdetail::second_order_asserted; below it the
// violations are tallied and reported in a note.  Smallest counterexample,
// confirmed by exact rational root counting: at deformation value 1/10 the
// eight-vertex shapes 0,1,2,3,1,2,2,2 -> 0,1,2,2,2,1,2,2 form a cover whose
// second-smallest eigenvalue drops from above 0.858 to below it.
inline std::vector<CheckReport> check_monotonicity(const VerifyOptions& o) {
    ReportBuilder rmax(claims::kCoverMonotoneMax);
    ReportBuilder rmin(claims::kCoverMonotoneMin);
    ReportBuilder rsec(claims::kCoverMonotoneSecond);
    ReportBuilder rext(claims::kPathStarExtremal);
    ReportBuilder rcms(claims::kCoverMinVsSecond);
    if (o.mono_n_hi < o.mono_n_lo)
        rmax.note("size range empty; nothing checked");
    long long sec_unasserted = 0, sec_reversals = 0;
    long long env_unasserted = 0, env_reversals = 0;
    double sec_worst = 0.0, env_worst = 0.0;
    for (int n = o.mono_n_lo; n <= o.mono_n_hi; ++n) {
        HasseDiagram h = build_hasse(n);
        std::vector<LabelledTree> reps = vdetail::node_reps(h);
        std::vector<std::vector<Spectrum>> spectra = vdetail::grid_spectra(reps, o.grid, o.jobs);
        int ipath = h.index_of(canonical_code(path_tree(n)));
        int istar = h.index_of(canonical_code(star_tree(n)));

        std::vector<std::pair<int, int>> covers = h.covers;
        if (o.inject_fake_cover && n == o.mono_n_lo && ipath != istar)
            covers.emplace_back(istar, ipath);  // deliberately false relation

        for (auto [lo, hi] : covers) {
            for (std::size_t gi = 0; gi < o.grid.size(); ++gi) {
                const Spectrum& a = spectra[lo][gi];
                const Spectrum& b = spectra[hi][gi];
                std::string where = "n=" + std::to_string(n) + " cover " +
                                    h.nodes[lo].to_string() + " -> " + h.nodes[hi].to_string() +
                                    " at q=" + o.grid[gi].label;
                rmax.expect(b.max() >= a.max() - o.slack, a.max() - b.max(),
                            "largest eigenvalue fell along a cover (" + vdetail::fmt(a.max()) +
                                " -> " + vdetail::fmt(b.max()) + ") at " + where);
                rmin.expect(b.min() <= a.min() + o.slack, b.min() - a.min(),
                            "smallest eigenvalue rose along a cover (" + vdetail::fmt(a.min()) +
                                " -> " + vdetail::fmt(b.min()) + ") at " + where);
                if (vdetail::second_order_asserted(o.grid[gi].exact * o.grid[gi].exact)) {
                    rsec.expect(b.second_min() >= a.second_min() - o.slack,
                                a.second_min() - b.second_min(),
                                "second-smallest eigenvalue fell along a cover (" +
                                    vdetail::fmt(a.second_min()) + " -> " +
                                    vdetail::fmt(b.second_min()) + ") at " + where);
                } else {
                    ++sec_unasserted;
                    if (b.second_min() < a.second_min() - o.slack) {
                        ++sec_reversals;
                        sec_worst = std::max(sec_worst, a.second_min() - b.second_min());
                    }
                }
                rcms.expect(a.min() <= b.second_min() + o.slack, a.min() - b.second_min(),
                            "smallest eigenvalue of the lower shape exceeds the second-smallest "
                            "of the upper (" +
                                vdetail::fmt(a.min()) + " vs " + vdetail::fmt(b.second_min()) +
                                ") at " + where);
            }
        }

        std::vector<int> sources = hasse_sources(h), sinks = hasse_sinks(h);
        rext.expect(sources.size() == 1 && sources[0] == ipath,
                    "n=" + std::to_string(n) + ": path is not the unique minimal shape");
        rext.expect(sinks.size() == 1 && sinks[0] == istar,
                    "n=" + std::to_string(n) + ": star is not the unique maximal shape");
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t gi = 0; gi < o.grid.size(); ++gi) {
                const Spectrum& s = spectra[i][gi];
                const Spectrum& p = spectra[static_cast<std::size_t>(ipath)][gi];
                const Spectrum& st = spectra[static_cast<std::size_t>(istar)][gi];
                std::string where =
                    h.nodes[i].to_string() + " at q=" + o.grid[gi].label;
                rext.expect(s.max() >= p.max() - o.slack && s.max() <= st.max() + o.slack,
                            "largest eigenvalue outside the path/star envelope for " + where);
                rext.expect(s.min() <= p.min() + o.slack && s.min() >= st.min() - o.slack,
                            "smallest eigenvalue outside the path/star envelope for " + where);
                rext.expect(s.second_min() <= st.second_min() + o.slack,
                            "second-smallest eigenvalue above the star's for " + where);
                if (vdetail::second_order_asserted(o.grid[gi].exact * o.grid[gi].exact)) {
                    rext.expect(s.second_min() >= p.second_min() - o.slack,
                                "second-smallest eigenvalue below the path's for " + where);
                } else {
                    ++env_unasserted;
                    if (s.second_min() < p.second_min() - o.slack) {
                        ++env_reversals;
                        env_worst = std::max(env_worst, p.second_min() - s.second_min());
                    }
                }
            }
        }
    }
    if (sec_unasserted > 0)
        rsec.note("below the squared-magnitude threshold 0.81 the ordering is tallied, not "
                  "asserted: " +
                  std::to_string(sec_reversals) + " of " + std::to_string(sec_unasserted) +
                  " cover comparisons reversed (worst drop " + vdetail::fmt(sec_worst) + ")");
    if (env_unasserted > 0)
        rext.note("below the squared-magnitude threshold 0.81 the path lower envelope for the "
                  "second-smallest eigenvalue is tallied, not asserted: " +
                  std::to_string(env_reversals) + " of " + std::to_string(env_unasserted) +
                  " comparisons fell below (worst gap " + vdetail::fmt(env_worst) + ")");
    return {rmax.finish(), rmin.finish(), rsec.finish(), rext.finish(), rcms.finish()};
}

// Determinant value and inertia of the deformed operator at every grid point
// (extended precision), and simplicity of the smallest eigenvalue.
inline std::vector<CheckReport> check_structural(const VerifyOptions& o) {
    ReportBuilder rdet(claims::kDetProductInertia);
    ReportBuilder rsimple(claims::kMinEigenvalueSimple);
    for (int n = 1; n <= o.structural_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            for (const QGridPoint& g : o.grid) {
                std::string where = c.to_string() + " at q=" + g.label;
                long double q = static_cast<long double>(g.value);
                std::vector<long double> vals =
                    jacobi_eigenvalues(q_laplacian<long double>(t, q));
                long double prod = 1;
                for (long double v : vals) prod *= v;
                long double target = 1 - q * q;
                long double err = fabsl(prod - target);
                long double tol = 1e-8L * std::max<long double>(1, fabsl(target));
                rdet.expect(err <= tol, static_cast<double>(err - tol),
                            "eigenvalue product " + vdetail::fmt(static_cast<double>(prod)) +
                                " misses the determinant value " +
                                vdetail::fmt(static_cast<double>(target)) + " for " + where);
                int negatives = 0, zeros = 0;
                for (long double v : vals) {
                    if (v < -1e-10L) ++negatives;
                    else if (v <= 1e-9L) ++zeros;
                }
                int regime = cmp(abs(g.exact), 1);  // -1, 0, +1 for |q| <>= 1
                bool inertia_ok = regime < 0   ? (negatives == 0 && zeros == 0)
                                  : regime == 0 ? (negatives == 0 && zeros == 1)
                                                : (negatives == 1 && zeros == 0);
                rdet.expect(inertia_ok, "inertia (" + std::to_string(negatives) + " negative, " +
                                            std::to_string(zeros) + " near-zero of " +
                                            std::to_string(n) + ") is wrong for " + where);
                if (n >= 2) {
                    Spectrum s = spectrum_of_sym(q_laplacian<double>(t, g.value));
                    rsimple.expect(s.min_multiplicity() == 1,
                                   "smallest eigenvalue is clustered (multiplicity " +
                                       std::to_string(s.min_multiplicity()) + ") for " + where);
                }
            }
        }
    }
    return {rdet.finish(), rsimple.finish()};
}

// Leaf-deletion interlacing: inside the unit regime the deleted spectrum
// interlaces the full one and the spectrum stays nonnegative; outside it the
// chain shifts by one, the second-smallest full eigenvalue stays positive and
// the smallest drops below the whole deleted spectrum.  Also: deleting a leaf
// never raises the largest eigenvalue nor lowers the second-smallest, and
// across a cover both endpoint second-smallest eigenvalues are bounded by
// every part's second-smallest.
inline std::vector<CheckReport> check_interlacing(const VerifyOptions& o) {
    ReportBuilder rin(claims::kLeafInterlacingInner);
    ReportBuilder rout(claims::kLeafInterlacingOuter);
    ReportBuilder rsub(claims::kSubtreeMaxMonotone);
    ReportBuilder rparts(claims::kPartsSecondEvBound);
    for (int n = 2; n <= o.interlacing_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            for (int leaf = 0; leaf < n; ++leaf) {
                if (t.degree(leaf) != 1) continue;
                LabelledTree tp = delete_leaf(t, leaf).tree;
                for (const QGridPoint& g : o.grid) {
                    std::string where = c.to_string() + " minus leaf " + std::to_string(leaf) +
                                        " at q=" + g.label;
                    const std::vector<double> lam =
                        sym_eigen(q_laplacian<double>(t, g.value)).values;  // descending
                    const std::vector<double> mu =
                        sym_eigen(q_laplacian<double>(tp, g.value)).values;
                    bool inner = cmp(abs(g.exact), 1) <= 0;
                    ReportBuilder& rb = inner ? rin : rout;
                    int chain = inner ? n - 1 : n - 2;  // pairs lam[i] >= mu[i] >= lam[i+1]
                    double worst = 0.0;
                    bool ok = true;
                    for (int i = 0; i < chain; ++i) {
                        worst = std::max({worst, mu[i] - lam[i], lam[i + 1] - mu[i]});
                        if (lam[i] < mu[i] - o.slack || mu[i] < lam[i + 1] - o.slack) ok = false;
                    }
                    rb.expect(ok, worst, "interlacing chain broken for " + where);
                    if (inner) {
                        rb.expect(lam[n - 1] >= -o.slack, -lam[n - 1],
                                  "negative eigenvalue inside the unit regime for " + where);
                    } else {
                        rb.expect(lam[n - 2] > 1e-10, -lam[n - 2],
                                  "second-smallest eigenvalue not positive for " + where);
                        rb.expect(lam[n - 1] < -1e-10, lam[n - 1],
                                  "smallest eigenvalue not negative outside the unit regime for " +
                                      where);
                        rb.expect(lam[n - 1] >= mu[n - 2] - o.slack, mu[n - 2] - lam[n - 1],
                                  "smallest eigenvalue fails to sit below the deleted spectrum "
                                  "for " +
                                      where);
                    }
                    rsub.expect(lam[0] >= mu[0] - o.slack, mu[0] - lam[0],
                                "largest eigenvalue rose after deleting a leaf for " + where);
                    if (n >= 3)
                        rsub.expect(mu[n - 3] >= lam[n - 2] - o.slack, lam[n - 2] - mu[n - 3],
                                    "second-smallest eigenvalue fell after deleting a leaf for " +
                                        where);
                }
            }
        }
    }
    for (int n = 4; n <= o.interlacing_n; ++n) {
        HasseDiagram h = build_hasse(n);
        std::vector<LabelledTree> reps = vdetail::node_reps(h);
        for (std::size_t k = 0; k < h.covers.size(); ++k) {
            auto [lo, hi] = h.covers[k];
            CoverDecomposition dec = decompose_cover(reps[lo], h.witnesses[k]);
            for (const QGridPoint& g : o.grid) {
                std::string where = "n=" + std::to_string(n) + " cover " +
                                    h.nodes[lo].to_string() + " -> " + h.nodes[hi].to_string() +
                                    " at q=" + g.label;
                double worst_pair = std::max(
                    spectrum_of_sym(q_laplacian<double>(reps[lo], g.value)).second_min(),
                    spectrum_of_sym(q_laplacian<double>(reps[hi], g.value)).second_min());
                double best_part = std::numeric_limits<double>::infinity();
                for (const LabelledTree* part : {&dec.path_part, &dec.branch_u, &dec.branch_v})
                    best_part = std::min(
                        best_part,
                        spectrum_of_sym(q_laplacian<double>(*part, g.value)).second_min());
                rparts.expect(worst_pair <= best_part + o.slack, worst_pair - best_part,
                              "a part's second-smallest eigenvalue (" + vdetail::fmt(best_part) +
                                  ") undercuts an endpoint's (" + vdetail::fmt(worst_pair) +
                                  ") at " + where);
            }
        }
    }
    return {rin.finish(), rout.finish(), rsub.finish(), rparts.finish()};
}

// The vertex auxiliary polynomial: exact degree and leading/constant
// structure, star closed form, root localization, and the two sign-pattern
// rules (auxiliary polynomial and cover difference), with the high-end
// positivity of the difference.
//
// Root localization asserts the window
//     [smallest eigenvalue of the vertex-deleted matrix,
//      largest eigenvalue of the full matrix].
// The tighter low end "second-smallest eigenvalue of the full matrix" fails
// whenever the full and vertex-deleted matrices share an eigenvalue: the
// shared value absorbs one root and another root may then slide below.
// Smallest exact counterexample: the five-vertex spider 0,1,2,1,1 with the
// degree-3 vertex deleted at q=1/10 has a root near 0.9232 while the full
// matrix's second-smallest eigenvalue is near 0.9273 (both matrices have
// eigenvalue 1 exactly).  Roots that dip below the second-smallest full
// eigenvalue are tallied in a report note so the looser behaviour stays
// visible.
inline std::vector<CheckReport> check_aux(const VerifyOptions& o) {
    ReportBuilder rshape(claims::kAuxPolyShape);
    ReportBuilder rwin(claims::kAuxPolyRootWindow);
    ReportBuilder rsign(claims::kAuxPolySignParity);
    ReportBuilder rdlow(claims::kDifferenceSignLow);
    ReportBuilder rdhigh(claims::kDifferencePositiveHigh);

    long long roots_below_second_min = 0;
    double worst_dip = 0.0;
    for (int n = 2; n <= o.aux_n; ++n) {
        int parity_sign = (n % 2 == 0) ? 1 : -1;  // expected sign below zero
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            for (int v = 0; v < n; ++v) {
                BiPoly F = aux_poly(t, v);
                std::string who = c.to_string() + " vertex " + std::to_string(v);
                rshape.expect(F.deg_x() == n - 1,
                              "auxiliary polynomial degree " + std::to_string(F.deg_x()) +
                                  " != " + std::to_string(n - 1) + " for " + who);
                rshape.expect(F.coeff_of_x(n - 1) ==
                                  BiPoly::monomial(2, 0, mpz_class(-t.degree(v))),
                              "auxiliary polynomial leading coefficient is not -deg*q^2 for " +
                                  who);
                rshape.expect(F.at_x_zero().is_zero(),
                              "auxiliary polynomial does not vanish at x=0 for " + who);

                for (const QGridPoint& g : o.grid) {
                    std::string where = who + " at q=" + g.label;
                    Spectrum s = spectrum_of_sym(q_laplacian<double>(t, g.value));
                    double la = s.second_min(), lmax = s.max();
                    double sub_min =
                        sym_eigen(delete_principal(q_laplacian<double>(t, g.value), {v}))
                            .values.back();

                    QPoly Fq = F.specialize_q(g.exact);
                    for (const std::complex<double>& z : distinct_roots(Fq)) {
                        if (std::abs(z) <= 1e-7) continue;  // the structural root at zero
                        if (std::abs(z.imag()) > 1e-7)
                            rwin.note("root with imaginary part " + vdetail::fmt(z.imag()) +
                                      " for " + where);
                        double lo_ex = (sub_min - 1e-6) - z.real();
                        double hi_ex = z.real() - (lmax + 1e-6);
                        rwin.expect(lo_ex <= 0 && hi_ex <= 0, std::max(lo_ex, hi_ex),
                                    "nonzero root " + vdetail::fmt(z.real()) +
                                        " escapes the eigenvalue window [" +
                                        vdetail::fmt(sub_min) + ", " + vdetail::fmt(lmax) +
                                        "] for " + where);
                        if (z.real() < la - 1e-6) {
                            ++roots_below_second_min;
                            worst_dip = std::max(worst_dip, la - z.real());
                        }
                    }

                    mpq_class below = F.eval<mpq_class>(g.exact, mpq_class(-1));
                    rsign.expect(vdetail::sign_of(below) == parity_sign,
                                 "sign below zero is " + std::to_string(vdetail::sign_of(below)) +
                                     ", expected " + std::to_string(parity_sign) + " for " +
                                     where);
                    double mid = F.eval<double>(g.value, la / 2.0);
                    rsign.expect(mid * parity_sign < 0,
                                 "sign on (0, second-smallest) is not flipped (value " +
                                     vdetail::fmt(mid) + ") for " + where);
                }
            }
        }
        if (n >= 3) {  // star hub closed form -(n-1) q^2 x (x-1)^(n-2)
            LabelledTree st = star_tree(n);
            int hub = vdetail::hub_vertex(st);
            BiPoly expected = bp_const(-(n - 1)) * bp_q() * bp_q() * bp_x() *
                              (bp_x() - bp_const(1)).pow(n - 2);
            rshape.expect(aux_poly(st, hub) == expected,
                          "star hub auxiliary polynomial misses its closed form at n=" +
                              std::to_string(n));
        }
    }

    for (int n = 4; n <= o.aux_n; ++n) {
        int parity_sign = (n % 2 == 0) ? 1 : -1;
        HasseDiagram h = build_hasse(n);
        std::vector<LabelledTree> reps = vdetail::node_reps(h);
        std::vector<BiPoly> fs = vdetail::node_charpolys(reps, o.jobs);
        std::vector<std::vector<Spectrum>> spectra = vdetail::grid_spectra(reps, o.grid, o.jobs);
        for (std::size_t k = 0; k < h.covers.size(); ++k) {
            auto [lo, hi] = h.covers[k];
            BiPoly D = fs[lo] - fs[hi];
            for (std::size_t gi = 0; gi < o.grid.size(); ++gi) {
                const QGridPoint& g = o.grid[gi];
                std::string where = "n=" + std::to_string(n) + " cover " +
                                    h.nodes[lo].to_string() + " -> " + h.nodes[hi].to_string() +
                                    " at q=" + g.label;
                mpq_class below = D.eval<mpq_class>(g.exact, mpq_class(-1));
                rdlow.expect(vdetail::sign_of(below) == parity_sign,
                             "difference sign below zero is " +
                                 std::to_string(vdetail::sign_of(below)) + ", expected " +
                                 std::to_string(parity_sign) + " at " + where);
                double la = std::min(spectra[lo][gi].second_min(), spectra[hi][gi].second_min());
                double dmid = D.eval<double>(g.value, la / 2.0);
                rdlow.expect(dmid * parity_sign > 0,
                             "difference sign on (0, second-smallest) is wrong (value " +
                                 vdetail::fmt(dmid) + ") at " + where);
                double lmax = std::max(spectra[lo][gi].max(), spectra[hi][gi].max());
                double dhigh = D.eval<double>(g.value, 1.1 * lmax);
                rdhigh.expect(dhigh > 0, -dhigh,
                              "difference not positive beyond the largest eigenvalue (value " +
                                  vdetail::fmt(dhigh) + ") at " + where);
            }
        }
    }
    if (roots_below_second_min > 0)
        rwin.note(std::to_string(roots_below_second_min) +
                  " nonzero roots sit below the full matrix's second-smallest eigenvalue "
                  "(worst dip " +
                  vdetail::fmt(worst_dip) +
                  "); all stay above the vertex-deleted matrix's smallest eigenvalue");
    return {rshape.finish(), rwin.finish(), rsign.finish(), rdlow.finish(), rdhigh.finish()};
}

// Star spectra: exact characteristic polynomial closed form, and the
// numerically computed spectrum equals {quadratic roots, 1 repeated}.
inline std::vector<CheckReport> check_star(const VerifyOptions& o) {
    ReportBuilder rb(claims::kStarSpectrumClosedForm);
    for (int n = std::max(2, o.star_n_lo); n <= o.star_n_hi; ++n) {
        LabelledTree st = star_tree(n);
        rb.expect(charpoly(st) == star_charpoly_closed_form(n),
                  "star characteristic polynomial misses its closed form at n=" +
                      std::to_string(n));
        if (n < 3) continue;
        for (const QGridPoint& g : o.grid) {
            double u = g.value * g.value;
            double b = 2.0 + (n - 2.0) * u;
            double disc = std::sqrt(u * ((n - 2.0) * (n - 2.0) * u + 4.0 * (n - 1.0)));
            std::vector<double> expected{(b + disc) / 2.0};
            expected.insert(expected.end(), static_cast<std::size_t>(n - 2), 1.0);
            expected.push_back((b - disc) / 2.0);
            std::sort(expected.rbegin(), expected.rend());
            std::vector<double> got = sym_eigen(q_laplacian<double>(st, g.value)).values;
            double worst = 0.0;
            for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(got[i] - expected[i]));
            rb.expect(worst <= 1e-9, worst - 1e-9,
                      "star spectrum misses the closed form by " + vdetail::fmt(worst) +
                          " at n=" + std::to_string(n) + ", q=" + g.label);
        }
    }
    return {rb.finish()};
}

// Global bounds over all shapes of each size: the largest eigenvalue is at
// most the star value (with equality for the star), and the second-smallest
// is at most 1 (with equality for the star) once n > 2.
inline std::vector<CheckReport> check_bounds(const VerifyOptions& o) {
    ReportBuilder rmaxb(claims::kMaxEigenvalueBound);
    ReportBuilder rsecb(claims::kSecondEigenvalueBound);
    for (int n = 2; n <= o.bounds_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            for (const QGridPoint& g : o.grid) {
                std::string where = c.to_string() + " at q=" + g.label;
                Spectrum s = spectrum_of_sym(q_laplacian<double>(t, g.value));
                double bound = vdetail::star_upper_bound(n, g.value * g.value);
                rmaxb.expect(s.max() <= bound + o.slack, s.max() - bound,
                             "largest eigenvalue " + vdetail::fmt(s.max()) +
                                 " exceeds the star bound " + vdetail::fmt(bound) + " for " +
                                 where);
                if (n > 2)
                    rsecb.expect(s.second_min() <= 1.0 + o.slack, s.second_min() - 1.0,
                                 "second-smallest eigenvalue " + vdetail::fmt(s.second_min()) +
                                     " exceeds 1 for " + where);
            }
        }
        LabelledTree st = star_tree(n);
        for (const QGridPoint& g : o.grid) {
            Spectrum s = spectrum_of_sym(q_laplacian<double>(st, g.value));
            double bound = vdetail::star_upper_bound(n, g.value * g.value);
            double tol = 1e-9 * std::max(1.0, bound);
            rmaxb.expect(std::abs(s.max() - bound) <= tol, std::abs(s.max() - bound) - tol,
                         "star fails to attain the largest-eigenvalue bound at n=" +
                             std::to_string(n) + ", q=" + g.label);
            if (n > 2)
                rsecb.expect(std::abs(s.second_min() - 1.0) <= 1e-9,
                             std::abs(s.second_min() - 1.0) - 1e-9,
                             "star second-smallest eigenvalue is not 1 at n=" +
                                 std::to_string(n) + ", q=" + g.label);
        }
    }
    return {rmaxb.finish(), rsecb.finish()};
}

// Two-parameter operator on the Hermitian slice (second parameter = conjugate
// of the first): cover monotonicity, the same global bounds with u = |q|^2,
// positive semidefiniteness at unit modulus, exact collapse to the plain
// Laplacian characteristic polynomial for reciprocal real pairs, and
// orientation independence of the spectrum.
//
// On the Hermitian slice the operator is isospectral with the real operator
// at deformation value |q|, so the second-smallest cover direction inherits
// the weak-deformation failures of the real case and is asserted only above
// the squared-magnitude threshold of vdetail::second_order_asserted.
inline std::vector<CheckReport> check_qt(const VerifyOptions& o) {
    ReportBuilder rmono(claims::kQtCoverMonotone);
    ReportBuilder rbound(claims::kQtEigenvalueBounds);
    ReportBuilder rrecip(claims::kQtReciprocalLaplacian);
    ReportBuilder rpsd(claims::kQtUnitHermitianPsd);
    ReportBuilder rorient(claims::kQtOrientationInvariance);
    long long sec_unasserted = 0, sec_reversals = 0;
    double sec_worst = 0.0;

    auto herm_spectrum = [](const LabelledTree& t, const std::complex<double>& q,
                            const Orientation& orient) {
        return spectrum_of_herm(
            qt_laplacian<std::complex<double>>(t, q, std::conj(q), orient));
    };

    for (int n = 4; n <= o.qt_mono_n; ++n) {
        HasseDiagram h = build_hasse(n);
        std::vector<LabelledTree> reps = vdetail::node_reps(h);
        std::vector<std::vector<Spectrum>> spectra(reps.size());
        vdetail::parallel_for(static_cast<long>(reps.size()), o.jobs, [&](long i) {
            std::vector<Spectrum> row;
            for (const QtGridPoint& g : o.qt_grid)
                row.push_back(herm_spectrum(reps[i], g.q, default_orientation(reps[i])));
            spectra[i] = std::move(row);
        });
        for (auto [lo, hi] : h.covers) {
            for (std::size_t gi = 0; gi < o.qt_grid.size(); ++gi) {
                const Spectrum& a = spectra[lo][gi];
                const Spectrum& b = spectra[hi][gi];
                std::string where = "n=" + std::to_string(n) + " cover " +
                                    h.nodes[lo].to_string() + " -> " + h.nodes[hi].to_string() +
                                    " at q=" + o.qt_grid[gi].label;
                rmono.expect(b.max() >= a.max() - o.slack, a.max() - b.max(),
                             "largest eigenvalue fell along a cover at " + where);
                rmono.expect(b.min() <= a.min() + o.slack, b.min() - a.min(),
                             "smallest eigenvalue rose along a cover at " + where);
                const QtGridPoint& g = o.qt_grid[gi];
                mpq_class u_exact =
                    g.exact_q.re * g.exact_q.re + g.exact_q.im * g.exact_q.im;
                if (vdetail::second_order_asserted(u_exact)) {
                    rmono.expect(b.second_min() >= a.second_min() - o.slack,
                                 a.second_min() - b.second_min(),
                                 "second-smallest eigenvalue fell along a cover at " + where);
                } else {
                    ++sec_unasserted;
                    if (b.second_min() < a.second_min() - o.slack) {
                        ++sec_reversals;
                        sec_worst = std::max(sec_worst, a.second_min() - b.second_min());
                    }
                }
            }
        }
    }

    for (int n = 3; n <= o.qt_mono_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            Orientation orient = default_orientation(t);
            for (const QtGridPoint& g : o.qt_grid) {
                std::string where = c.to_string() + " at q=" + g.label;
                Spectrum s = herm_spectrum(t, g.q, orient);
                mpq_class u_exact =
                    g.exact_q.re * g.exact_q.re + g.exact_q.im * g.exact_q.im;
                double bound = vdetail::star_upper_bound(n, u_exact.get_d());
                rbound.expect(s.max() <= bound + o.slack, s.max() - bound,
                              "largest eigenvalue " + vdetail::fmt(s.max()) +
                                  " exceeds the star bound " + vdetail::fmt(bound) + " for " +
                                  where);
                rbound.expect(s.second_min() <= 1.0 + o.slack, s.second_min() - 1.0,
                              "second-smallest eigenvalue " + vdetail::fmt(s.second_min()) +
                                  " exceeds 1 for " + where);
            }
        }
    }

    for (int n = 2; n <= o.qt_psd_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            Spectrum s = herm_spectrum(t, {0.0, 1.0}, default_orientation(t));
            rpsd.expect(s.min() >= -1e-9, -s.min(),
                        "unit-modulus Hermitian operator has eigenvalue " +
                            vdetail::fmt(s.min()) + " < 0 for " + c.to_string());
        }
    }

    // Reciprocal real pairs (q, t) with q t = 1: the characteristic polynomial
    // equals the plain Laplacian one.  Verified exactly by comparing the two
    // determinants at n + 1 integer points, enough for monic degree-n
    // polynomials.
    const std::vector<std::pair<mpq_class, mpq_class>> recip_pairs = {
        {mpq_class(1, 2), mpq_class(2)}, {mpq_class(2), mpq_class(1, 2)}};
    for (int n = 2; n <= o.qt_recip_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            std::vector<Orientation> orients{default_orientation(t)};
            if (n <= 4)
                for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
                    orients.push_back(orientation_from_mask(t, mask));
            Matrix<mpq_class> plain = q_laplacian<mpq_class>(t, mpq_class(1));
            for (const auto& [qv, tv] : recip_pairs) {
                for (const Orientation& orient : orients) {
                    Matrix<mpq_class> m = qt_laplacian<mpq_class>(t, qv, tv, orient);
                    bool ok = true;
                    for (int x0 = 0; x0 <= n && ok; ++x0) {
                        Matrix<mpq_class> a = Matrix<mpq_class>::identity(n);
                        Matrix<mpq_class> b = Matrix<mpq_class>::identity(n);
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j) {
                                a.at(i, j) = (i == j ? mpq_class(x0) : mpq_class(0)) - m.at(i, j);
                                b.at(i, j) =
                                    (i == j ? mpq_class(x0) : mpq_class(0)) - plain.at(i, j);
                            }
                        if (field_det(a) != field_det(b)) ok = false;
                    }
                    rrecip.expect(
                        ok, "reciprocal-pair characteristic polynomial differs from the plain "
                            "Laplacian one for " +
                                c.to_string() + " at q=" + qv.get_str() + ", t=" + tv.get_str());
                }
            }
        }
    }

    for (int n = 2; n <= o.qt_orient_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            for (const QtGridPoint& g : o.qt_grid) {
                Spectrum base = herm_spectrum(t, g.q, default_orientation(t));
                long m = 1L << (n - 1);
                std::vector<double> worst(static_cast<std::size_t>(m), 0.0);
                vdetail::parallel_for(m, o.jobs, [&](long mask) {
                    Spectrum s = herm_spectrum(
                        t, g.q, orientation_from_mask(t, static_cast<std::uint32_t>(mask)));
                    double w = 0.0;
                    for (std::size_t i = 0; i < s.values.size(); ++i)
                        w = std::max(w, std::abs(s.values[i] - base.values[i]));
                    worst[static_cast<std::size_t>(mask)] = w;
                });
                for (long mask = 0; mask < m; ++mask)
                    rorient.expect(worst[static_cast<std::size_t>(mask)] <= 1e-9,
                                   worst[static_cast<std::size_t>(mask)] - 1e-9,
                                   "spectrum depends on the orientation (mask " +
                                       std::to_string(mask) + ", max diff " +
                                       vdetail::fmt(worst[static_cast<std::size_t>(mask)]) +
                                       ") for " + c.to_string() + " at q=" + g.label);
            }
        }
    }

    if (sec_unasserted > 0)
        rmono.note("below the squared-magnitude threshold 0.81 the second-smallest direction "
                   "is tallied, not asserted: " +
                   std::to_string(sec_reversals) + " of " + std::to_string(sec_unasserted) +
                   " cover comparisons reversed (worst drop " + vdetail::fmt(sec_worst) + ")");
    return {rmono.finish(), rbound.finish(), rrecip.finish(), rpsd.finish(), rorient.finish()};
}

// Exponential distance matrix: exact product identity with the deformed
// Laplacian, the reciprocal spectral bijection, cover monotonicity in both
// regimes (largest up / second-largest down / smallest down inside the unit
// disc; all three reversed outside), rank-one degeneration at |q| = 1, and
// the exact two-parameter product identity over Gaussian rationals.
//
// Inside the unit disc the second-largest direction is the reciprocal image
// of the operator's second-smallest eigenvalue, so it inherits the weak-
// deformation failures of that ordering and is asserted only above the
// squared-magnitude threshold of vdetail::second_order_asserted (outside the
// unit disc the second-largest tracks the operator's largest eigenvalue and
// is always asserted).
inline std::vector<CheckReport> check_ed(const VerifyOptions& o) {
    ReportBuilder rinv(claims::kEdInverseRelation);
    ReportBuilder rmono(claims::kEdCoverMonotone);
    ReportBuilder runit(claims::kEdUnitQDegenerate);
    ReportBuilder rqt(claims::kEdqtInverseRelation);
    long long sec_unasserted = 0, sec_reversals = 0;
    double sec_worst = 0.0;

    for (int n = 1; n <= o.ed_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            for (const QGridPoint& g : o.grid) {
                std::string where = c.to_string() + " at q=" + g.label;
                Matrix<mpq_class> E = exp_distance<mpq_class>(t, g.exact);
                Matrix<mpq_class> L = q_laplacian<mpq_class>(t, g.exact);
                mpq_class scale = 1 - g.exact * g.exact;
                Matrix<mpq_class> expected(n);
                for (int i = 0; i < n; ++i) expected.at(i, i) = scale;
                rinv.expect(matmul(E, L) == expected,
                            "distance-matrix product with the operator is not (1-q^2) I for " +
                                where);

                if (cmp(abs(g.exact), 1) != 0) {
                    long double q = static_cast<long double>(g.value);
                    std::vector<long double> lvals =
                        jacobi_eigenvalues(q_laplacian<long double>(t, q));
                    std::vector<long double> evals =
                        jacobi_eigenvalues(exp_distance<long double>(t, q));
                    std::vector<long double> mapped;
                    for (long double v : lvals) mapped.push_back((1 - q * q) / v);
                    std::sort(mapped.rbegin(), mapped.rend());
                    double worst = 0.0;
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        double a = static_cast<double>(mapped[i]);
                        double b = static_cast<double>(evals[i]);
                        double tol = 1e-7 * (1.0 + std::max(std::abs(a), std::abs(b)));
                        worst = std::max(worst, std::abs(a - b));
                        if (std::abs(a - b) > tol) ok = false;
                    }
                    rinv.expect(ok, worst,
                                "reciprocal spectral map misses the distance spectrum (max diff " +
                                    vdetail::fmt(worst) + ") for " + where);
                } else {
                    // Rank-one degeneration: entries are +-1 by distance parity
                    // and the spectrum collapses to {n, 0, ..., 0}.
                    std::vector<int> dist = bfs_distances(t, 0);
                    bool entries_ok = true;
                    for (int i = 0; i < n && entries_ok; ++i)
                        for (int j = 0; j < n && entries_ok; ++j) {
                            int par = (dist[i] + dist[j]) % 2;
                            mpq_class want = g.exact > 0 ? mpq_class(1)
                                                         : (par == 0 ? mpq_class(1)
                                                                     : mpq_class(-1));
                            if (E.at(i, j) != want) entries_ok = false;
                        }
                    runit.expect(entries_ok,
                                 "unit-modulus distance matrix is not the parity rank-one "
                                 "pattern for " +
                                     where);
                    std::vector<long double> evals = jacobi_eigenvalues(
                        exp_distance<long double>(t, static_cast<long double>(g.value)));
                    bool spec_ok = fabsl(evals.front() - n) <= 1e-9L;
                    double worst = static_cast<double>(fabsl(evals.front() - n));
                    for (std::size_t i = 1; i < evals.size(); ++i) {
                        worst = std::max(worst, static_cast<double>(fabsl(evals[i])));
                        if (fabsl(evals[i]) > 1e-9L) spec_ok = false;
                    }
                    runit.expect(spec_ok, worst,
                                 "unit-modulus distance spectrum is not {n, 0...} for " + where);
                }
            }
        }
    }

    for (int n = 4; n <= o.ed_n; ++n) {
        HasseDiagram h = build_hasse(n);
        std::vector<LabelledTree> reps = vdetail::node_reps(h);
        std::vector<std::vector<std::vector<long double>>> spectra(reps.size());
        vdetail::parallel_for(static_cast<long>(reps.size()), o.jobs, [&](long i) {
            std::vector<std::vector<long double>> row;
            for (const QGridPoint& g : o.grid)
                row.push_back(jacobi_eigenvalues(
                    exp_distance<long double>(reps[i], static_cast<long double>(g.value))));
            spectra[i] = std::move(row);
        });
        for (auto [lo, hi] : h.covers) {
            for (std::size_t gi = 0; gi < o.grid.size(); ++gi) {
                const QGridPoint& g = o.grid[gi];
                int regime = cmp(abs(g.exact), 1);
                if (regime == 0) continue;  // degenerate case handled above
                const std::vector<long double>& a = spectra[lo][gi];  // lower shape, descending
                const std::vector<long double>& b = spectra[hi][gi];
                std::string where = "n=" + std::to_string(n) + " cover " +
                                    h.nodes[lo].to_string() + " -> " + h.nodes[hi].to_string() +
                                    " at q=" + g.label;
                auto cmp_pair = [&](long double x, long double y, bool want_x_le_y,
                                    const std::string& what, ReportBuilder& rb) {
                    double tol = o.slack * std::max<double>(
                                              1.0, std::max(static_cast<double>(fabsl(x)),
                                                            static_cast<double>(fabsl(y))));
                    long double diff = want_x_le_y ? x - y : y - x;
                    rb.expect(static_cast<double>(diff) <= tol,
                              static_cast<double>(diff) - tol,
                              what + " violates cover monotonicity (" +
                                  vdetail::fmt(static_cast<double>(x)) + " vs " +
                                  vdetail::fmt(static_cast<double>(y)) + ") at " + where);
                };
                bool inside = regime < 0;
                // Inside the unit disc the largest eigenvalue grows along a
                // cover while the second-largest and smallest shrink; outside
                // all three directions flip.
                cmp_pair(a.front(), b.front(), inside, "largest distance eigenvalue", rmono);
                if (!inside || vdetail::second_order_asserted(g.exact * g.exact)) {
                    cmp_pair(b[1], a[1], inside, "second-largest distance eigenvalue", rmono);
                } else {
                    ++sec_unasserted;
                    double diff = static_cast<double>(b[1] - a[1]);
                    double tol = o.slack *
                                 std::max(1.0, static_cast<double>(std::max(fabsl(a[1]),
                                                                            fabsl(b[1]))));
                    if (diff > tol) {
                        ++sec_reversals;
                        sec_worst = std::max(sec_worst, diff);
                    }
                }
                cmp_pair(b.back(), a.back(), inside, "smallest distance eigenvalue", rmono);
            }
        }
    }

    // Exact two-parameter product identity over Gaussian rationals, on the
    // Hermitian grid (where q t = |q|^2, including the singular value 1) and
    // on real non-Hermitian pairs; all orientations for small sizes.
    std::vector<std::tuple<std::string, GaussRat, GaussRat>> qt_pairs;
    for (const QtGridPoint& g : o.qt_grid)
        qt_pairs.emplace_back("q=" + g.label + ", t=conj", g.exact_q, g.exact_t);
    qt_pairs.emplace_back("q=1/2, t=2", GaussRat(mpq_class(1, 2), 0), GaussRat(mpq_class(2), 0));
    qt_pairs.emplace_back("q=2, t=1/2", GaussRat(mpq_class(2), 0), GaussRat(mpq_class(1, 2), 0));
    qt_pairs.emplace_back("q=1/2, t=3", GaussRat(mpq_class(1, 2), 0), GaussRat(mpq_class(3), 0));
    qt_pairs.emplace_back("q=-2, t=1/3", GaussRat(mpq_class(-2), 0),
                          GaussRat(mpq_class(1, 3), 0));
    for (int n = 1; n <= o.ed_n; ++n) {
        for (const TreeCode& c : enumerate_trees(n)) {
            LabelledTree t = decode(c);
            std::vector<Orientation> orients{default_orientation(t)};
            if (n >= 2 && n <= 5)
                for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
                    orients.push_back(orientation_from_mask(t, mask));
            for (const auto& [label, qv, tv] : qt_pairs) {
                GaussRat scale = GaussRat(1) - qv * tv;
                for (const Orientation& orient : orients) {
                    Matrix<GaussRat> E = exp_distance_qt<GaussRat>(t, qv, tv, orient);
                    Matrix<GaussRat> L = qt_laplacian<GaussRat>(t, qv, tv, orient);
                    Matrix<GaussRat> expected(n);
                    for (int i = 0; i < n; ++i) expected.at(i, i) = scale;
                    rqt.expect(matmul(E, L) == expected,
                               "two-parameter distance-matrix product is not (1-qt) I for " +
                                   c.to_string() + " at " + label);
                }
            }
        }
    }

    if (sec_unasserted > 0)
        rmono.note("inside the unit disc below the squared-magnitude threshold 0.81 the "
                   "second-largest direction is tallied, not asserted: " +
                   std::to_string(sec_reversals) + " of " + std::to_string(sec_unasserted) +
                   " cover comparisons reversed (worst rise " + vdetail::fmt(sec_worst) + ")");
    return {rinv.finish(), rmono.finish(), runit.finish(), rqt.finish()};
}

// Cross-validation of the two independent eigensolvers on random instances,
// with explicit residual bounds for the vector-producing solver.
inline std::vector<CheckReport> check_solver_cross(const VerifyOptions& o) {
    ReportBuilder rb(claims::kSolverCrossValidation);
    long m = o.cross_count;
    std::vector<std::string> errs(static_cast<std::size_t>(m));
    std::vector<double> devs(static_cast<std::size_t>(m), 0.0);
    vdetail::parallel_for(m, o.jobs, [&](long k) {
        std::mt19937_64 rng(o.seed * 1000003ULL + static_cast<unsigned long long>(k));
        int n = 2 + static_cast<int>(rng() % 9);  // 2..10
        LabelledTree t = random_tree(n, rng);
        double q = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
        RealMatrix M = q_laplacian<double>(t, q);
        std::string where = "instance " + std::to_string(k) + " (n=" + std::to_string(n) +
                            ", q=" + vdetail::fmt(q) + ")";
        try {
            EigenDecomposition dec = sym_eigen(M);
            std::vector<double> jac = jacobi_eigenvalues(M);
            double tol = 1e-9 * std::max(1.0, inf_norm(M));
            double worst = 0.0;
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(dec.values[i] - jac[i]));
            if (worst > tol) {
                errs[k] = "solvers disagree by " + vdetail::fmt(worst) + " on " + where;
                devs[k] = worst - tol;
                return;
            }
            double res_tol = 1e-10 * std::max(1.0, inf_norm(M));
            for (int j = 0; j < n; ++j) {
                double r2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    double acc = 0.0;
                    for (int l = 0; l < n; ++l) acc += M.at(i, l) * dec.vectors.at(l, j);
                    acc -= dec.values[j] * dec.vectors.at(i, j);
                    r2 += acc * acc;
                }
                if (std::sqrt(r2) > res_tol) {
                    errs[k] = "residual " + vdetail::fmt(std::sqrt(r2)) + " too large on " + where;
                    devs[k] = std::sqrt(r2) - res_tol;
                    return;
                }
            }
        } catch (const std::exception& e) {
            errs[k] = "exception on " + where + ": " + e.what();
        }
    });
    for (long k = 0; k < m; ++k) rb.expect(errs[k].empty(), devs[k], errs[k]);
    return {rb.finish()};
}

// ---------------------------------------------------------------------------
// Reference table recovery
// ---------------------------------------------------------------------------

// The canonical worked example: a single cover pair on six vertices whose six
// spectral statistics at five deformation values match a frozen reference
// table to half a unit in the fourth decimal.  The pair must be unique in the
// whole order, and the lower shape must have 1 as an exact eigenvalue (of the
// full operator and of a vertex-deleted one) at q = 1/2 and q = 3/2.
struct Table1Result {
    int lower_index = -1, upper_index = -1;
    TreeCode lower, upper;
    std::array<std::array<double, 6>, 5> values{};  // rows: q; cols: max/max/min/min/second/second
    CheckReport report;
};

inline Table1Result locate_table1([[maybe_unused]] const VerifyOptions& o) {
    // The reference table is pinned to six-vertex shapes at five specific
    // deformation values, so the options' size caps do not apply here.
    ReportBuilder rb(claims::kTableOnePair);
    Table1Result out;
    static const double kTargets[5][6] = {
        {1.2017, 1.2136, 0.8208, 0.8130, 0.8890, 0.9064},
        {2.2566, 2.3660, 0.3032, 0.2929, 0.5586, 0.6340},
        {4.2143, 4.5616, 0.0000, 0.0000, 0.3249, 0.4384},
        {6.9857, 7.6742, -0.0864, -0.0981, 0.2014, 0.3258},
        {202.9803, 211.9481, -0.0069, -0.0469, 0.0070, 0.0519},
    };
    static const double kQs[5] = {0.1, 0.5, 1.0, 1.5, 10.0};

    HasseDiagram h = build_hasse(6);
    std::vector<LabelledTree> reps = vdetail::node_reps(h);
    std::vector<std::array<Spectrum, 5>> spectra(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (int r = 0; r < 5; ++r)
            spectra[i][r] = spectrum_of_sym(q_laplacian<double>(reps[i], kQs[r]));

    std::vector<std::size_t> matches;
    std::array<std::array<double, 6>, 5> match_vals{};
    for (std::size_t k = 0; k < h.covers.size(); ++k) {
        auto [lo, hi] = h.covers[k];
        std::array<std::array<double, 6>, 5> vals{};
        bool all_ok = true;
        for (int r = 0; r < 5; ++r) {
            const Spectrum& a = spectra[lo][r];
            const Spectrum& b = spectra[hi][r];
            vals[r] = {a.max(), b.max(), a.min(), b.min(), a.second_min(), b.second_min()};
            for (int cidx = 0; cidx < 6; ++cidx)
                if (std::abs(vals[r][cidx] - kTargets[r][cidx]) > 5e-4) all_ok = false;
        }
        if (all_ok) {
            matches.push_back(k);
            match_vals = vals;
        }
    }
    rb.expect(matches.size() == 1,
              "expected exactly one cover pair matching the reference table, found " +
                  std::to_string(matches.size()));
    if (matches.size() == 1) {
        auto [lo, hi] = h.covers[matches.front()];
        out.lower_index = lo;
        out.upper_index = hi;
        out.lower = h.nodes[lo];
        out.upper = h.nodes[hi];
        out.values = match_vals;

        BiPoly f = charpoly(reps[lo]);
        for (const mpq_class& qe : {mpq_class(1, 2), mpq_class(3, 2)}) {
            rb.expect(f.eval<mpq_class>(qe, mpq_class(1)) == 0,
                      "1 is not an exact eigenvalue of the lower shape at q=" + qe.get_str());
            bool some_deleted = false;
            for (int v = 0; v < reps[lo].n; ++v)
                if (charpoly(reps[lo], {v}).eval<mpq_class>(qe, mpq_class(1)) == 0)
                    some_deleted = true;
            rb.expect(some_deleted,
                      "no vertex-deleted operator of the lower shape has exact eigenvalue 1 "
                      "at q=" +
                          qe.get_str());
        }
    }
    out.report = rb.finish();
    return out;
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

inline std::vector<CheckReport> run_all_checks(const VerifyOptions& o) {
    std::vector<CheckReport> out;
    auto add = [&](std::vector<CheckReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    add(check_enumeration(o));
    add(check_identities(o));
    add(check_exact_charpoly(o));
    add(check_monotonicity(o));
    add(check_structural(o));
    add(check_interlacing(o));
    add(check_aux(o));
    add(check_star(o));
    add(check_bounds(o));
    add(check_qt(o));
    add(check_ed(o));
    out.push_back(locate_table1(o).report);
    add(check_solver_cross(o));
    return out;
}

inline bool all_ok(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.ok()) return false;
    return true;
}

// Run the checker group owning `selector`, which may be "all", a group name,
// or a single claim id (the owning group runs and the result is filtered).
inline std::vector<CheckReport> run_checks_for(const VerifyOptions& o,
                                               const std::string& selector) {
    if (selector == "all") return run_all_checks(o);

    auto run_group = [&](const std::string& group) -> std::vector<CheckReport> {
        if (group == "enumeration") return check_enumeration(o);
        if (group == "identities") return check_identities(o);
        if (group == "exactpoly") return check_exact_charpoly(o);
        if (group == "monotonicity") return check_monotonicity(o);
        if (group == "structural") return check_structural(o);
        if (group == "interlacing") return check_interlacing(o);
        if (group == "aux") return check_aux(o);
        if (group == "star") return check_star(o);
        if (group == "bounds") return check_bounds(o);
        if (group == "qt") return check_qt(o);
        if (group == "ed") return check_ed(o);
        if (group == "table1") return {locate_table1(o).report};
        if (group == "solvers") return check_solver_cross(o);
        throw std::invalid_argument("unknown checker group: " + group);
    };

    for (const auto& [group, ids] : check_groups()) {
        if (selector == group) return run_group(group);
        for (const std::string& id : ids)
            if (selector == id) {
                std::vector<CheckReport> all = run_group(group);
                std::vector<CheckReport> filtered;
                for (auto& r : all)
                    if (r.claim == selector) filtered.push_back(std::move(r));
                return filtered;
            }
    }
    throw std::invalid_argument("unknown check selector: " + selector);
}

}  // namespace qlap
