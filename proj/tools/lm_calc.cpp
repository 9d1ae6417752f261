#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lm/hstep.hpp"
#include "lm/realize.hpp"
#include "lm/transducer.hpp"

namespace {

using namespace lm;

Marker marker_from(const std::string& g) {
    if (g == "g0") return Marker::G0;
    if (g == "g") return Marker::G;
    fail(errc::invalid_argument, "--group must be g0 or g");
}

std::string read_map_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(errc::invalid_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string abel_str(const AbelImage& a) {
    return "(" + a[0].str() + "," + a[1].str() + "," + a[2].str() + ")";
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

int run_relcheck(int max_depth, std::ostream& os) {
    std::vector<FinWord> words{""};
    for (int len = 1; len <= max_depth; ++len) {
        size_t start = words.size() - (static_cast<size_t>(1) << (len - 1));
        size_t end = words.size();
        for (size_t i = start; i < end; ++i) {
            words.push_back(words[i] + "0");
            words.push_back(words[i] + "1");
        }
    }
    size_t checked = 0, failures = 0;
    auto check = [&](int id, const FinWord& s, const FinWord& t) {
        auto inst = relation_instance(id, s, t);
        if (!inst) return;
        ++checked;
        if (!equal_words(inst->first, inst->second)) {
            ++failures;
            os << "FAIL relation (" << id << ") s=" << (s.empty() ? "e" : s)
               << " t=" << (t.empty() ? "e" : t) << "\n";
        }
    };
    for (const auto& s : words) {
        check(1, s, "");
        check(5, s, "");
        for (const auto& t : words) {
            check(2, s, t);
            check(3, s, t);
            check(4, s, t);
        }
    }
    os << checked << " relation instances with subscripts up to length " << max_depth << ": ";
    if (failures == 0) {
        os << "all instances pass\n";
        return 0;
    }
    os << failures << " failures\n";
    return 1;
}

void write_plot(const PiecewisePP& f, const Rat& lo, const Rat& hi, int samples,
                const std::string& format, std::ostream& os) {
    if (!(lo < hi)) fail(errc::invalid_argument, "--range needs LO < HI");
    if (samples < 1) fail(errc::invalid_argument, "--samples must be positive");
    std::vector<std::pair<Rat, Rat>> pts;
    for (int i = 0; i <= samples; ++i) {
        Rat t = lo + (hi - lo) * Rat(i, samples);
        QuadExt ft = f(QuadExt(t));
        if (ft.q != 0) fail(errc::invalid_argument, "irrational sample value; widen the grid");
        pts.emplace_back(t, ft.p);
    }
    if (format == "csv") {
        os << "t_exact,t_decimal,f_exact,f_decimal\n";
        for (auto& [t, v] : pts)
            os << rat_to_string(t) << "," << to_double(t) << "," << rat_to_string(v) << ","
               << to_double(v) << "\n";
        return;
    }
    if (format != "svg") fail(errc::invalid_argument, "--format must be csv or svg");
    double xmin = to_double(lo), xmax = to_double(hi);
    double ymin = to_double(pts.front().second), ymax = ymin;
    for (auto& [t, v] : pts) {
        ymin = std::min(ymin, to_double(v));
        ymax = std::max(ymax, to_double(v));
    }
    if (ymax == ymin) {
        ymax += 1;
        ymin -= 1;
    }
    const double W = 640, H = 480, pad = 40;
    auto X = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto Y = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (ymin <= 0 && 0 <= ymax)
        os << "  <line x1=\"" << X(xmin) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax)
           << "\" y2=\"" << Y(0) << "\" stroke=\"#999\"/>\n";
    if (xmin <= 0 && 0 <= xmax)
        os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(ymin) << "\" x2=\"" << X(0) << "\" y2=\""
           << Y(ymax) << "\" stroke=\"#999\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\" points=\"";
    for (auto& [t, v] : pts) os << X(to_double(t)) << "," << Y(to_double(v)) << " ";
    os << "\"/>\n</svg>\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the Lodha-Moore groups and piecewise projective maps"};
    app.require_subcommand(1);

    std::string word_text, seq_text, point_text, group = "g", subgroup_name;
    std::string map_path, format = "csv", range_lo = "0", range_hi = "1";
    std::string step_dir, amount_text, pivot_text = "0", file_f, file_g;
    int max_depth = 3, samples = 32;
    std::size_t budget = 1000000;
    bool word_input = false;

    auto* normalize = app.add_subcommand("normalize", "rewrite a word in standard form");
    normalize->add_option("word", word_text)->required();
    normalize->add_option("--group", group)->check(CLI::IsMember({"g0", "g"}));
    normalize->add_option("--budget", budget);

    auto* evalseq = app.add_subcommand("eval-seq", "apply a word to a binary sequence");
    evalseq->add_option("word", word_text)->required();
    evalseq->add_option("seq", seq_text)->required();
    evalseq->add_option("--group", group)->check(CLI::IsMember({"g0", "g"}));

    auto* evalreal = app.add_subcommand("eval-real", "apply the realized map to a point");
    evalreal->add_option("word", word_text)->required();
    evalreal->add_option("point", point_text)->required();
    evalreal->add_option("--group", group)->check(CLI::IsMember({"g0", "g"}));

    auto* realize_cmd = app.add_subcommand("realize", "print the piecewise projective form");
    realize_cmd->add_option("word", word_text)->required();
    realize_cmd->add_option("--group", group)->check(CLI::IsMember({"g0", "g"}));

    auto* abel = app.add_subcommand("abelianize", "image in Z^3");
    abel->add_option("word", word_text)->required();
    abel->add_option("--group", group)->required()->check(CLI::IsMember({"g0", "g"}));

    auto* memb = app.add_subcommand("member", "derived subgroup membership");
    memb->add_option("word", word_text)->required();
    memb->add_option("subgroup", subgroup_name)
        ->required()
        ->check(CLI::IsMember({"f", "fprime", "g0", "g0prime", "gprime", "gsecond"}));
    memb->add_option("--group", group)->check(CLI::IsMember({"g0", "g"}));

    auto* relcheck = app.add_subcommand("relcheck", "verify the defining relations semantically");
    relcheck->add_option("--max-depth", max_depth)->check(CLI::Range(0, 6));

    auto* hstep_cmd = app.add_subcommand("hstep", "step map constructions");
    auto* hgamma = hstep_cmd->add_subcommand("gamma", "gamma step map");
    hgamma->add_option("r", amount_text)->required();
    auto* hlambda = hstep_cmd->add_subcommand("lambda", "lambda step map");
    hlambda->add_option("r", amount_text)->required();
    auto* hstep_step = hstep_cmd->add_subcommand("step", "one-sided translation step");
    hstep_step->add_option("dir", step_dir)->required()->check(CLI::IsMember({"left", "right"}));
    hstep_step->add_option("r", amount_text)->required();
    hstep_step->add_option("p", pivot_text)->required();
    auto* hcomp = hstep_cmd->add_subcommand("compactify", "commutator compactification");
    hcomp->add_option("f", file_f)->required();
    hcomp->add_option("g", file_g)->required();
    hstep_cmd->require_subcommand(1);

    auto* plot = app.add_subcommand("plot", "sample a map on an exact rational grid");
    plot->add_option("map", map_path, "piecewise text file, or '-' for stdin")->required();
    plot->add_flag("--word", word_input, "interpret MAP as a word instead of a file");
    plot->add_option("--range", [&range_lo, &range_hi](const std::vector<std::string>& vals) {
            range_lo = vals.at(0);
            range_hi = vals.at(1);
            return true;
        }, "LO HI")->expected(2);
    plot->add_option("--samples", samples);
    plot->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
    plot->add_option("--group", group)->check(CLI::IsMember({"g0", "g"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (normalize->parsed()) {
            GroupWord w = parse_word(word_text, marker_from(group));
            std::cout << standardize(w, budget).str() << "\n";
        } else if (evalseq->parsed()) {
            GroupWord w = parse_word(word_text, marker_from(group));
            std::cout << run_word(w, parse_seq(seq_text)).str() << "\n";
        } else if (evalreal->parsed()) {
            GroupWord w = parse_word(word_text, marker_from(group));
            std::cout << realize(w)(parse_extreal(point_text)).str() << "\n";
        } else if (realize_cmd->parsed()) {
            GroupWord w = parse_word(word_text, marker_from(group));
            std::cout << to_text(realize(w));
        } else if (abel->parsed()) {
            GroupWord w = parse_word(word_text, marker_from(group));
            std::cout << abel_str(abelianize(w)) << "\n";
        } else if (memb->parsed()) {
            GroupWord w = parse_word(word_text, marker_from(group));
            Subgroup sg = subgroup_name == "f"         ? Subgroup::F
                          : subgroup_name == "fprime"  ? Subgroup::Fprime
                          : subgroup_name == "g0"      ? Subgroup::G0
                          : subgroup_name == "g0prime" ? Subgroup::G0prime
                          : subgroup_name == "gprime"  ? Subgroup::Gprime
                                                       : Subgroup::Gsecond;
            std::cout << (member(w, sg) ? "true" : "false") << "\n";
        } else if (relcheck->parsed()) {
            return run_relcheck(max_depth, std::cout);
        } else if (hstep_cmd->parsed()) {
            if (hgamma->parsed()) {
                std::cout << to_text(gamma(parse_rat(amount_text)).map);
            } else if (hlambda->parsed()) {
                std::cout << to_text(lambda_step(parse_rat(amount_text)).map);
            } else if (hstep_step->parsed()) {
                Rat r = parse_rat(amount_text), p = parse_rat(pivot_text);
                std::cout << to_text(step_dir == "right" ? step_right(r, p) : step_left(r, p));
            } else {
                PiecewisePP f = parse_piecewise(read_map_source(file_f));
                PiecewisePP g = parse_piecewise(read_map_source(file_g));
                CompactifyResult res = compactify_commutator(f, g);
                auto block = [&](const char* name, const PiecewisePP& m) {
                    std::cout << "# " << name << "\n" << to_text(m) << "\n";
                };
                block("h1", res.h1);
                block("h2", res.h2);
                block("k1", res.k1);
                block("k2", res.k2);
                block("s1", res.s1);
                block("s2", res.s2);
                block("t1", res.t1);
                block("t2", res.t2);
            }
        } else if (plot->parsed()) {
            PiecewisePP f = word_input
                                ? realize(parse_word(map_path, marker_from(group)))
                                : parse_piecewise(read_map_source(map_path));
            write_plot(f, parse_rat(range_lo), parse_rat(range_hi), samples, format, std::cout);
        }
    } catch (const calc_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
