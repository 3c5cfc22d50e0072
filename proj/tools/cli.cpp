#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "flipstiefel/char_classes.hpp"
#include "flipstiefel/cohomology.hpp"
#include "flipstiefel/equivariant.hpp"
#include "flipstiefel/report.hpp"
#include "flipstiefel/spectral.hpp"
#include "flipstiefel/witness.hpp"

namespace {

using flipstiefel::json;
using flipstiefel::Report;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

bool color_allowed() { return ::isatty(1) != 0 && std::getenv("NO_COLOR") == nullptr; }

void emit(const Report& report, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << text;
}

json dims_to_json(const flipstiefel::GradedDims& g) {
    json arr = json::array();
    for (long long d : g.dims) arr.push_back(d);
    return arr;
}

std::string dims_to_text(const flipstiefel::GradedDims& g) {
    std::string out;
    for (std::size_t t = 0; t < g.dims.size(); ++t) {
        if (t) out += " ";
        out += std::to_string(g.dims[t]);
    }
    return out;
}

struct SpanTableText {
    std::string header;
    std::string separator;
    std::vector<std::string> lines;
};

SpanTableText render_span_table(bool markdown) {
    SpanTableText out;
    const char* sep = markdown ? " | " : "  ";
    auto cell = [&](const std::string& s, std::size_t width) {
        std::string c = s;
        while (c.size() < width) c += ' ';
        return c;
    };
    out.header = (markdown ? "| " : "") + cell("k%4", 3) + sep + cell("n%4", 3) + sep +
                 cell("w1", 2) + sep + cell("w2", 2) + sep + cell("dim", 9) + sep +
                 cell("conclusion", 46) + (markdown ? " |" : "");
    if (markdown) out.separator = "| --- | --- | -- | -- | --------- | " + std::string(46, '-') + " |";
    for (const auto& row : flipstiefel::residue_table()) {
        std::string line = (markdown ? "| " : "") + cell(std::to_string(row.k_mod4), 3) + sep +
                           cell(std::to_string(row.n_mod4), 3) + sep +
                           cell(std::to_string(row.w1), 2) + sep + cell(std::to_string(row.w2), 2) +
                           sep +
                           cell(std::to_string(row.dim_residue()) + " mod " +
                                    std::to_string(row.dim_modulus),
                                9) +
                           sep + cell(flipstiefel::to_string(row.conclusion), 46) +
                           (markdown ? " |" : "");
        out.lines.push_back(std::move(line));
    }
    return out;
}

json span_table_json() {
    json rows = json::array();
    for (const auto& row : flipstiefel::residue_table()) {
        json r;
        r["k_mod4"] = row.k_mod4;
        r["n_mod4"] = row.n_mod4;
        r["representative"] = {{"k", row.rep_k}, {"n", row.rep_n}};
        r["w1"] = row.w1;
        r["w2"] = row.w2;
        r["dim_mod2"] = row.dim_mod2;
        r["dim_mod4"] = row.dim_mod4;
        r["dim_mod8"] = row.dim_mod8;
        r["dim_residue"] = row.dim_residue();
        r["dim_modulus"] = row.dim_modulus;
        r["conclusion"] = flipstiefel::to_string(row.conclusion);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topology calculator for flip Stiefel manifolds FV_{n,2k}"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --json / --markdown on either side of the subcommand

    bool as_json = false;
    bool as_markdown = false;
    app.add_flag("--json", as_json, "emit a machine-readable report");
    app.add_flag("--markdown", as_markdown, "emit tables as markdown");

    int n = 0, frame = 0, k = 0, m = 0;
    std::string src_spec, dst_spec;
    std::uint64_t seed = 1;
    int restarts = 32;

    auto* cmd_nf = app.add_subcommand("nf", "truncation exponent N_F(n, 2k)");
    cmd_nf->add_option("n", n)->required();
    cmd_nf->add_option("2k", frame)->required();

    auto* cmd_np = app.add_subcommand("np", "projective truncation exponent N_P(n, k)");
    cmd_np->add_option("n", n)->required();
    cmd_np->add_option("k", k)->required();

    auto* cmd_betti = app.add_subcommand("betti", "graded mod-2 Betti numbers of FV_{n,2k}");
    cmd_betti->add_option("n", n)->required();
    cmd_betti->add_option("2k", frame)->required();

    auto* cmd_spectral =
        app.add_subcommand("spectral-check", "compare the spectral model with the closed form");
    cmd_spectral->add_option("n", n)->required();
    cmd_spectral->add_option("2k", frame)->required();

    auto* cmd_sw = app.add_subcommand("sw", "total Stiefel-Whitney class of TFV_{n,2k}");
    cmd_sw->add_option("n", n)->required();
    cmd_sw->add_option("2k", frame)->required();

    auto* cmd_classify =
        app.add_subcommand("classify", "parallelizability and span report for FV_{n,2k}");
    cmd_classify->add_option("n", n)->required();
    cmd_classify->add_option("2k", frame)->required();

    auto* cmd_table = app.add_subcommand("span-table", "16-row residue classification table");

    auto* cmd_index = app.add_subcommand("index", "index ideal of a free C2-space");
    cmd_index->add_option("space", src_spec, "flip:n,2k | pstiefel:n,k | sphere:n | so:n | o:2k")
        ->required();

    auto* cmd_obstruct = app.add_subcommand("obstruct", "equivariant-map obstruction test");
    cmd_obstruct->add_option("source", src_spec)->required();
    cmd_obstruct->add_option("target", dst_spec)->required();

    auto* cmd_threshold = app.add_subcommand("threshold", "coincidence threshold for FV_{n,2k}");
    cmd_threshold->add_option("n", n)->required();
    cmd_threshold->add_option("2k", frame)->required();

    auto* cmd_witness =
        app.add_subcommand("witness", "search an orthonormal frame with coincident pairs");
    cmd_witness->add_option("n", n)->required();
    cmd_witness->add_option("2k", frame)->required();
    cmd_witness->add_option("m", m, "target dimension of the test map")->required();
    cmd_witness->add_option("--seed", seed, "64-bit seed for the test map and restarts");
    cmd_witness->add_option("--restarts", restarts, "number of descent restarts");

    auto* cmd_verify = app.add_subcommand("verify-paper", "run the full regression battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // any malformed invocation is an input error
    }

    try {
        if (cmd_nf->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            const int value = flipstiefel::nf(mf.n, mf.k);
            Report r{"nf",
                     {{"n", n}, {"frame", frame}},
                     {{"nf", value}},
                     {"truncation exponent of the degree-1 class in H*(FV_{n,2k}; Z/2)"}};
            emit(r, as_json, "nf(" + std::to_string(n) + ", " + std::to_string(frame) + ") = " +
                                 std::to_string(value) + "\n");
        } else if (cmd_np->parsed()) {
            const int value = flipstiefel::np(n, k);
            Report r{"np",
                     {{"k", k}, {"n", n}},
                     {{"np", value}},
                     {"least j in (n-k, n] with C(n, j) odd"}};
            emit(r, as_json, "np(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                                 std::to_string(value) + "\n");
        } else if (cmd_betti->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            const auto pres = flipstiefel::presentation(mf);
            const auto dims = flipstiefel::betti(pres);
            json gens = json::array();
            for (int d : pres.generator_degrees) gens.push_back(d);
            Report r{"betti",
                     {{"n", n}, {"frame", frame}},
                     {{"nf", pres.truncation},
                      {"generator_degrees", gens},
                      {"dims", dims_to_json(dims)},
                      {"total", dims.total()},
                      {"euler_characteristic", flipstiefel::euler_characteristic(dims)}},
                     {"graded dimensions of Z/2[x]/(x^nf) (x) Lambda(y_j)"}};
            std::string text = "FV_{" + std::to_string(n) + "," + std::to_string(frame) + "}\n";
            text += "nf = " + std::to_string(pres.truncation) + "\n";
            text += "generator degrees =";
            for (int d : pres.generator_degrees) text += " " + std::to_string(d);
            text += "\ndims = " + dims_to_text(dims) + "\n";
            text += "total = " + std::to_string(dims.total()) + "\n";
            text += "euler characteristic = " +
                    std::to_string(flipstiefel::euler_characteristic(dims)) + "\n";
            emit(r, as_json, text);
        } else if (cmd_spectral->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            const bool ok = flipstiefel::crosscheck(mf.n, mf.k);
            const auto dims = flipstiefel::e_infinity_dims(mf.n, mf.k);
            Report r{"spectral-check",
                     {{"n", n}, {"frame", frame}},
                     {{"match", ok}, {"dims", dims_to_json(dims)}},
                     {"transgression model d(y_{j-1}) = C(k+j-1, j) x^j"}};
            emit(r, as_json,
                 std::string("spectral model vs closed form: ") + (ok ? "match" : "MISMATCH") +
                     "\ndims = " + dims_to_text(dims) + "\n");
        } else if (cmd_sw->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            const auto w = flipstiefel::sw_total(mf);
            json coeffs = json::array();
            for (std::size_t i = 0; i < w.poly.cap(); ++i) coeffs.push_back(w.poly.coeff(i));
            Report r{"sw",
                     {{"n", n}, {"frame", frame}},
                     {{"exponent", w.exponent},
                      {"cap", static_cast<int>(w.poly.cap())},
                      {"coefficients", coeffs},
                      {"w1", w.w(1)},
                      {"w2", w.w(2)}},
                     {"w(TFV_{n,2k}) = (1+x)^{k(n-k-1)} truncated at x^nf"}};
            emit(r, as_json,
                 "w(TFV_{" + std::to_string(n) + "," + std::to_string(frame) + "}) = " +
                     w.poly.to_string() + "   (exponent " + std::to_string(w.exponent) +
                     ", truncated at x^" + std::to_string(w.poly.cap()) + ")\n");
        } else if (cmd_classify->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            const auto rep = flipstiefel::classify(mf);
            Report r{"classify",
                     {{"n", n}, {"frame", frame}},
                     {{"dim", mf.dimension()},
                      {"dim_mod4", rep.dim_mod4},
                      {"dim_mod8", rep.dim_mod8},
                      {"w1", rep.w1},
                      {"w2", rep.w2},
                      {"parallelizable", flipstiefel::to_string(rep.parallelizable)},
                      {"span_equals_stable_span",
                       flipstiefel::to_string(rep.span_equals_stable_span)},
                      {"special_case", flipstiefel::to_string(rep.special_case)}},
                     {"Whitney obstruction, Lie-quotient special cases, span residue rules"}};
            std::string text = "FV_{" + std::to_string(n) + "," + std::to_string(frame) +
                               "}  (dim " + std::to_string(mf.dimension()) + ")\n";
            text += "w1 = " + std::to_string(rep.w1) + ", w2 = " + std::to_string(rep.w2) + "\n";
            text += "parallelizable: " + flipstiefel::to_string(rep.parallelizable) + "\n";
            text += "span = stable span: " + flipstiefel::to_string(rep.span_equals_stable_span) +
                    "\n";
            if (rep.special_case != flipstiefel::SpecialCase::None)
                text += "special case: " + flipstiefel::to_string(rep.special_case) + "\n";
            emit(r, as_json, text);
        } else if (cmd_table->parsed()) {
            Report r{"span-table",
                     json::object(),
                     {{"rows", span_table_json()}},
                     {"residue classification of (w1, w2, dim) by (k mod 4, n mod 4)"}};
            const auto table = render_span_table(as_markdown);
            std::string text = table.header + "\n";
            if (!table.separator.empty()) text += table.separator + "\n";
            for (const auto& line : table.lines) text += line + "\n";
            emit(r, as_json, text);
        } else if (cmd_index->parsed()) {
            const auto space = flipstiefel::C2Space::parse(src_spec);
            const auto ideal = flipstiefel::index_exponent(space);
            Report r{"index",
                     {{"space", space.to_string()}},
                     {{"exponent", ideal.exponent}, {"ideal", ideal.to_string()}},
                     {"index ideal (x^e), e = nf for flip actions and np for antipodal ones"}};
            emit(r, as_json, "index(" + space.to_string() + ") = " + ideal.to_string() + "\n");
        } else if (cmd_obstruct->parsed()) {
            const auto src = flipstiefel::C2Space::parse(src_spec);
            const auto dst = flipstiefel::C2Space::parse(dst_spec);
            const auto verdict = flipstiefel::obstruct(src, dst);
            Report r{"obstruct",
                     {{"source", src.to_string()}, {"target", dst.to_string()}},
                     {{"verdict", flipstiefel::to_string(verdict.verdict)},
                      {"source_exponent", verdict.source_exp},
                      {"target_exponent", verdict.target_exp}},
                     {"an equivariant map needs the target index inside the source index"}};
            emit(r, as_json,
                 "obstruct(" + src.to_string() + " -> " + dst.to_string() +
                     "): " + flipstiefel::to_string(verdict.verdict) + "  (source index (x^" +
                     std::to_string(verdict.source_exp) + "), target index (x^" +
                     std::to_string(verdict.target_exp) + "))\n");
        } else if (cmd_threshold->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            const int value = flipstiefel::coincidence_threshold(mf.n, mf.k);
            Report r{"threshold",
                     {{"n", n}, {"frame", frame}},
                     {{"threshold", value}},
                     {"largest m with k*m < nf(n,2k): k coincident orthogonal pairs exist"}};
            emit(r, as_json, "threshold(" + std::to_string(n) + ", " + std::to_string(frame) +
                                 ") = " + std::to_string(value) + "\n");
        } else if (cmd_witness->parsed()) {
            const auto mf = flipstiefel::FlipManifold::from_frame(n, frame);
            if (m < 1) throw std::invalid_argument("witness: requires m >= 1");
            const auto map = flipstiefel::SmoothMap::random(mf.n, m, seed);
            const auto problem = flipstiefel::WitnessProblem::make(mf.n, mf.k, m, map);
            flipstiefel::SolveBudget budget;
            budget.max_restarts = restarts;
            const auto result = flipstiefel::solve(problem, budget, seed);

            json frame_rows = json::array();
            for (int r_ = 0; r_ < result.frame.matrix.rows(); ++r_) {
                json row = json::array();
                for (int c_ = 0; c_ < result.frame.matrix.cols(); ++c_)
                    row.push_back(result.frame.matrix(r_, c_));
                frame_rows.push_back(std::move(row));
            }
            Report r{"witness",
                     {{"frame", frame}, {"m", m}, {"n", n}, {"restarts", restarts}, {"seed", seed}},
                     {{"converged", result.converged},
                      {"residual", result.residual},
                      {"iterations", result.iterations},
                      {"orthonormality_error", result.frame.orthonormality_error()},
                      {"frame", frame_rows}},
                     {"zero of the pair-difference map on orthonormal 2k-frames"}};
            std::string text = "witness FV_{" + std::to_string(n) + "," + std::to_string(frame) +
                               "} -> R^" + std::to_string(m) + ", seed " + std::to_string(seed) +
                               ", restarts " + std::to_string(restarts) + "\n";
            text += std::string("converged: ") + (result.converged ? "yes" : "no") + "\n";
            text += "residual = " + fmt_double(result.residual) + "\n";
            text += "orthonormality error = " + fmt_double(result.frame.orthonormality_error()) +
                    "\n";
            text += "iterations = " + std::to_string(result.iterations) + "\n";
            text += "frame (rows of the n x 2k matrix):\n";
            for (int r_ = 0; r_ < result.frame.matrix.rows(); ++r_) {
                for (int c_ = 0; c_ < result.frame.matrix.cols(); ++c_) {
                    if (c_) text += ",";
                    text += fmt_double(result.frame.matrix(r_, c_));
                }
                text += "\n";
            }
            emit(r, as_json, text);
        } else if (cmd_verify->parsed()) {
            const auto checks = flipstiefel::regression_checks();
            const auto summary = flipstiefel::run_checks(checks, std::cout, color_allowed());
            if (as_json) {
                Report r{"verify-paper",
                         json::object(),
                         {{"checks", summary.total},
                          {"passed", summary.passed},
                          {"failures", summary.failed_anchors}},
                         {"aggregate regression battery"}};
                std::cout << r.to_json().dump(2) << "\n";
            }
            return summary.all_passed() ? 0 : 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
