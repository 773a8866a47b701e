// curvelab: command-line front end.
//
// Everything a verb prints goes through one buffer so the manifest can
// record its digest. Exit codes: 0 ok, 2 invalid input, 3 contradictory
// bounds, 1 anything else.

#include "curvelab/certifier.hpp"
#include "curvelab/curve_complex.hpp"
#include "curvelab/curves.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/io.hpp"
#include "curvelab/mcg.hpp"
#include "curvelab/translation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>

using namespace curvelab;

namespace {

struct Run {
    std::ostringstream out;
    std::map<std::string, std::string> inputs; // path -> digest
    std::map<std::string, std::string> outputs;
    std::string budget;
    std::vector<std::string> seeds;

    std::string load(const std::string& path) {
        std::string text = io::read_file(path);
        inputs[path] = io::hex64(io::fnv1a64(text));
        return text;
    }

    void emit(const std::string& path, const std::string& content) {
        io::write_file_atomic(path, content);
        outputs[path] = io::hex64(io::fnv1a64(content));
    }
};

std::string weights_text(const NormalCurve& c) {
    std::string s;
    for (std::size_t i = 0; i < c.weights.size(); ++i) s += (i ? "," : "") + std::to_string(c.weights[i]);
    return s;
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::string interval(int lo, std::optional<int> hi) {
    return "[" + std::to_string(lo) + "," + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
}

TwistWord pick_word(Run& run, const std::string& file, const std::string& name, const std::string& text, int genus) {
    if (!text.empty()) return parse_twist_word(genus, text);
    if (file.empty()) throw InvalidInput("give a word file and name, or --text");
    const auto words = io::parse_word_file(run.load(file), genus, file);
    if (name.empty()) {
        if (words.size() != 1) throw InvalidInput(file + ": several words; name one");
        return words.front().second;
    }
    for (const auto& [n, w] : words) {
        if (n == name) return w;
    }
    throw InvalidInput(file + ": no word named '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curves, twists and curve-complex bounds on closed surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Run run;
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a run manifest (json)");

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "describe the standard triangulation");
    int s_genus = 2;
    bool s_emit = false;
    std::string s_out;
    surface_cmd->add_option("--genus", s_genus)->required();
    surface_cmd->add_flag("--emit", s_emit, "print the triangulation description file");
    surface_cmd->add_option("--out", s_out, "write the description here instead");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "check every curve of a curve file");
    std::string v_file;
    std::vector<std::string> v_names;
    validate_cmd->add_option("file", v_file)->required();
    validate_cmd->add_option("names", v_names, "restrict to these curves");

    // intersect
    auto* intersect_cmd = app.add_subcommand("intersect", "geometric intersection of two curves");
    std::string i_file, i_a, i_b;
    intersect_cmd->add_option("file", i_file)->required();
    intersect_cmd->add_option("a", i_a)->required();
    intersect_cmd->add_option("b", i_b)->required();

    // distance
    auto* distance_cmd = app.add_subcommand("distance", "curve-complex distance interval");
    std::string d_file, d_a, d_b, d_path_out, budget_text;
    distance_cmd->add_option("file", d_file)->required();
    distance_cmd->add_option("a", d_a)->required();
    distance_cmd->add_option("b", d_b)->required();
    distance_cmd->add_option("--path-out", d_path_out, "write the upper-bound path");
    distance_cmd->add_option("--budget", budget_text, "weight=K,frontier=N[,radius=R]");

    // twist
    auto* twist_cmd = app.add_subcommand("twist", "T_c^n of one curve");
    std::string t_file, t_c, t_gamma, t_out;
    int t_generator = 0;
    Weight t_power = 1;
    twist_cmd->add_option("file", t_file)->required();
    twist_cmd->add_option("gamma", t_gamma)->required();
    twist_cmd->add_option("--c", t_c, "name of the twisting curve");
    twist_cmd->add_option("--generator", t_generator, "twist along chain curve k instead");
    twist_cmd->add_option("--power,-n", t_power);
    twist_cmd->add_option("--out", t_out);

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "apply a twist word to curves");
    std::string a_file, a_words, a_name, a_text, a_out;
    std::vector<std::string> a_curves;
    apply_cmd->add_option("file", a_file)->required();
    apply_cmd->add_option("--words", a_words, "word file");
    apply_cmd->add_option("--word", a_name, "word name in the word file");
    apply_cmd->add_option("--text", a_text, "the word itself, e.g. \"T1^2 T3^-1\"");
    apply_cmd->add_option("--curve", a_curves, "only these curves");
    apply_cmd->add_option("--out", a_out);

    // translation-bound
    auto* tb_cmd = app.add_subcommand("translation-bound", "bounds on translation distance");
    std::string tb_words, tb_name, tb_text, tb_seeds, tb_path, tb_path_out, tb_lower_prov;
    int tb_genus = 0;
    std::optional<int> tb_lower;
    tb_cmd->add_option("words", tb_words, "word file");
    tb_cmd->add_option("name", tb_name, "word name");
    tb_cmd->add_option("--text", tb_text, "the word itself");
    tb_cmd->add_option("--genus", tb_genus);
    tb_cmd->add_option("--seeds", tb_seeds, "curve file of seeds (default: chain curves and short images)");
    tb_cmd->add_option("--path", tb_path, "path certificate to check and use");
    tb_cmd->add_option("--path-out", tb_path_out, "write the upper-bound path");
    tb_cmd->add_option("--lower", tb_lower, "externally known lower bound");
    tb_cmd->add_option("--lower-provenance", tb_lower_prov);
    tb_cmd->add_option("--budget", budget_text, "weight=K,frontier=N[,radius=R]");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "splitting verdicts for a surface bundle");
    std::string c_file, c_report, c_path;
    std::vector<int> c_genera, c_chis;
    bool c_compute = false;
    cert_cmd->add_option("bundle", c_file)->required();
    cert_cmd->add_option("--splitting-genus", c_genera);
    cert_cmd->add_option("--surface-chi", c_chis, "euler characteristic of an incompressible surface");
    cert_cmd->add_option("--report", c_report, "machine-readable report file");
    cert_cmd->add_option("--path", c_path, "path certificate for an upper bound");
    cert_cmd->add_flag("--compute-upper", c_compute, "search for an upper bound first");
    cert_cmd->add_option("--budget", budget_text, "weight=K,frontier=N[,radius=R]");

    if (argc > 1 && argv[1][0] != '-') {
        bool known = false;
        for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == argv[1];
        if (!known) {
            std::cerr << "error: unknown verb '" << argv[1] << "'\n";
            return 2;
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Budget budget = budget_text.empty() ? Budget{} : parse_budget(budget_text);
        if (!budget_text.empty()) run.budget = to_string(budget);

        if (*surface_cmd) {
            const Surface s(s_genus);
            if (s_emit || !s_out.empty()) {
                const std::string text = io::format_triangulation(s);
                if (!s_out.empty()) run.emit(s_out, text);
                else run.out << text;
            } else {
                run.out << "genus=" << s.genus() << " vertices=" << s.vertex_count() << " edges=" << s.num_edges()
                        << " triangles=" << s.num_triangles() << " chi=" << s.euler_characteristic() << '\n';
            }
        } else if (*validate_cmd) {
            const auto f = io::parse_curve_file(run.load(v_file), v_file);
            const Surface s(f.genus);
            for (const auto& [name, c] : f.curves) {
                if (!v_names.empty() && std::find(v_names.begin(), v_names.end(), name) == v_names.end()) continue;
                const auto r = validate_curve(s, c.weights);
                run.out << name << " normal=" << yes(r.normal) << " connected=" << yes(r.connected)
                        << " essential=" << yes(r.essential) << " components=" << r.components;
                if (r.is_curve()) run.out << " canonical=" << yes(is_canonical(s, c));
                if (!r.violation.empty()) run.out << " violation=\"" << r.violation << '"';
                run.out << '\n';
            }
        } else if (*intersect_cmd) {
            const auto f = io::parse_curve_file(run.load(i_file), i_file);
            const Surface s(f.genus);
            const auto& a = f.get(i_a);
            const auto& b = f.get(i_b);
            const Weight i = geometric_intersection(s, a, b);
            run.out << "i=" << i << " disjoint=" << yes(i == 0)
                    << " fills=" << (i == 0 ? "n/a" : yes(fills(s, a, b))) << '\n';
        } else if (*distance_cmd) {
            const auto f = io::parse_curve_file(run.load(d_file), d_file);
            const Surface s(f.genus);
            const auto d = distance(s, f.get(d_a), f.get(d_b), budget);
            run.out << "d in " << interval(d.lo, d.hi) << " lo-cert=" << tag(d.lo_certificate)
                    << " hi-cert=" << tag(d.hi_source) << '\n';
            if (!d_path_out.empty()) {
                if (!d.hi_certificate) throw InvalidInput("no path certificate to write");
                run.emit(d_path_out, io::format_curve_file(io::path_file(f.genus, *d.hi_certificate)));
            }
        } else if (*twist_cmd) {
            const auto f = io::parse_curve_file(run.load(t_file), t_file);
            const Surface s(f.genus);
            NormalCurve c;
            if (t_generator != 0) {
                if (!t_c.empty()) throw InvalidInput("give --c or --generator, not both");
                const auto chain = humphries_curves(s);
                if (t_generator < 1 || t_generator > static_cast<int>(chain.size())) {
                    throw InvalidInput("generator out of range 1.." + std::to_string(chain.size()));
                }
                c = chain[t_generator - 1];
            } else {
                if (t_c.empty()) throw InvalidInput("give --c or --generator");
                c = f.get(t_c);
            }
            io::CurveFile r;
            r.genus = f.genus;
            r.curves.emplace_back(t_gamma, twist(s, c, f.get(t_gamma), t_power));
            const std::string text = io::format_curve_file(r);
            if (!t_out.empty()) run.emit(t_out, text);
            else run.out << text;
        } else if (*apply_cmd) {
            const auto f = io::parse_curve_file(run.load(a_file), a_file);
            const Surface s(f.genus);
            const TwistWord w = pick_word(run, a_words, a_name, a_text, f.genus);
            io::CurveFile r;
            r.genus = f.genus;
            for (const auto& [name, c] : f.curves) {
                if (!a_curves.empty() && std::find(a_curves.begin(), a_curves.end(), name) == a_curves.end()) continue;
                r.curves.emplace_back(name, apply_word(s, w, c));
            }
            const std::string text = io::format_curve_file(r);
            if (!a_out.empty()) run.emit(a_out, text);
            else run.out << text;
        } else if (*tb_cmd) {
            std::optional<io::CurveFile> seeds_file, path_file;
            int genus = tb_genus;
            auto agree = [&](int g, const std::string& what) {
                if (genus != 0 && genus != g) throw InvalidInput(what + " has genus " + std::to_string(g));
                genus = g;
            };
            if (!tb_seeds.empty()) {
                seeds_file = io::parse_curve_file(run.load(tb_seeds), tb_seeds);
                agree(seeds_file->genus, tb_seeds);
            }
            if (!tb_path.empty()) {
                path_file = io::parse_curve_file(run.load(tb_path), tb_path);
                if (!path_file->is_path) throw InvalidInput(tb_path + ": not a path file");
                agree(path_file->genus, tb_path);
            }
            if (genus == 0) genus = 2;
            const Surface s(genus);
            const TwistWord w = pick_word(run, tb_words, tb_name, tb_text, genus);
            std::vector<NormalCurve> seeds;
            if (seeds_file) {
                for (const auto& [name, c] : seeds_file->curves) {
                    seeds.push_back(c);
                    run.seeds.push_back(name);
                }
            } else if (!path_file) {
                seeds = default_seeds(s, w);
                run.seeds.push_back("default");
            }
            TranslationResult r;
            r.word = w;
            if (!seeds.empty()) r = translation_upper(s, w, seeds, budget);
            if (path_file) {
                const auto check = attach_path(s, r, path_file->path());
                if (!check.ok) {
                    throw InvalidInput(tb_path + ": rejected path certificate at vertex " +
                                       std::to_string(check.index) + ": " + check.reason);
                }
            }
            if (tb_lower) r = attach_external_lower(r, *tb_lower, tb_lower_prov);
            const auto best = r.best_upper();
            if (best && r.lower > *best) {
                throw ContradictoryBounds("lower bound " + std::to_string(r.lower) + " exceeds upper bound " +
                                          std::to_string(*best));
            }
            run.out << "d_C(phi) in " << interval(r.lower, best) << " lower=" << tag(r.lower_source);
            if (!r.lower_provenance.empty()) run.out << " lower-provenance=\"" << r.lower_provenance << '"';
            run.out << " hi-cert=" << (r.upper && (!r.log_upper || *r.upper <= *r.log_upper) ? "path"
                                       : r.log_upper                                         ? "log"
                                                                                             : "none");
            run.out << " seeds-tried=" << r.seeds_tried.size() << '\n';
            if (r.seed) run.out << "seed " << weights_text(*r.seed) << '\n';
            if (!tb_path_out.empty()) {
                if (!r.certificate) throw InvalidInput("no path certificate to write");
                run.emit(tb_path_out, io::format_curve_file(io::path_file(genus, *r.certificate)));
            }
        } else if (*cert_cmd) {
            BundleDescriptor b = io::parse_bundle_file(run.load(c_file), c_file);
            const Surface s(b.genus);
            if (c_compute) {
                auto r = translation_upper(s, b.monodromy, default_seeds(s, b.monodromy), budget);
                r.lower = b.bounds.lower;
                r.lower_source = b.bounds.lower_source;
                r.lower_provenance = b.bounds.lower_provenance;
                b.bounds = r;
                run.seeds.push_back("default");
            }
            if (!c_path.empty()) {
                const auto p = io::parse_curve_file(run.load(c_path), c_path);
                if (!p.is_path || p.genus != b.genus) throw InvalidInput(c_path + ": not a path file of this genus");
                const auto check = attach_path(s, b.bounds, p.path());
                if (!check.ok) {
                    throw InvalidInput(c_path + ": rejected path certificate at vertex " +
                                       std::to_string(check.index) + ": " + check.reason);
                }
            }
            std::vector<SplittingVerdict> verdicts;
            verdicts.push_back(minimal_genus_uniqueness_rule(b));
            for (int h : c_genera) verdicts.push_back(strongly_irreducible_rule(b, h));
            for (int chi : c_chis) verdicts.push_back(incompressible_rule(b, chi, chi == 0));
            if (!b.power_schedule.empty()) verdicts.push_back(high_power_rule(b));

            const auto st = standard_splitting_stats(b.genus);
            run.out << "bundle genus=" << b.genus << " monodromy=" << b.monodromy.to_string() << '\n';
            run.out << "standard splitting: genus " << st.genus << ", -chi " << st.minus_chi << ", weakly reducible\n";
            run.out << "translation distance in " << interval(b.bounds.lower, b.bounds.best_upper()) << " (lower "
                    << tag(b.bounds.lower_source) << ")\n";
            std::string report;
            for (const auto& v : verdicts) {
                run.out << "  " << tag(v.verdict) << ": " << v.detail << " [" << v.rule
                        << (v.external() ? ", rests on an external assumption" : "") << "]\n";
                report += v.to_line() + "\n";
            }
            if (!c_report.empty()) run.emit(c_report, report);
            else run.out << report;
        }
    } catch (const InvalidInput& e) {
        std::cout << run.out.str();
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ContradictoryBounds& e) {
        std::cout << run.out.str();
        std::cerr << "contradictory bounds: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cout << run.out.str();
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }

    const std::string text = run.out.str();
    std::cout << text;
    if (!manifest_path.empty()) {
        nlohmann::ordered_json m;
        std::vector<std::string> args(argv + 1, argv + argc);
        m["command"] = args;
        m["inputs"] = run.inputs;
        m["budget"] = run.budget.empty() ? to_string(Budget{}) : run.budget;
        m["seeds"] = run.seeds;
        m["version"] = io::kToolVersion;
        std::string all = text;
        for (const auto& [p, d] : run.outputs) all += p + ":" + d + "\n";
        m["output_digest"] = io::hex64(io::fnv1a64(all));
        m["outputs"] = run.outputs;
        try {
            io::write_file_atomic(manifest_path, m.dump(2) + "\n");
        } catch (const InvalidInput& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    return 0;
}
