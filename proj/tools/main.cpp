// Command-line surface.  Machine-readable JSON goes to stdout, diagnostics to
// stderr.  Exit codes: 0 success, 1 domain error, 2 resource limit, 3 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlinks/braid.hpp"
#include "tlinks/errors.hpp"
#include "tlinks/io.hpp"
#include "tlinks/lorenz.hpp"
#include "tlinks/oracle.hpp"
#include "tlinks/pd.hpp"
#include "tlinks/tlink.hpp"
#include "tlinks/volume.hpp"

namespace {

using nlohmann::json;
using namespace tlinks;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_braid(const BraidWord& b, const std::string& out_path, bool as_json) {
    if (!out_path.empty()) {
        write_braid_file(out_path, b);
        emit(json{{"written", out_path}, {"strands", b.strands()},
                  {"crossings", b.size()}});
    } else if (as_json) {
        emit(braid_to_json(b));
    } else {
        std::cout << braid_to_text(b);
    }
}

json tn_result_json(const TnLinkParams& t) {
    json j = tn_link_to_json(t);
    j["notation"] = tn_link_to_text(t);
    return j;
}

json gen_result_json(const std::variant<GenTLinkParams, TrivialDescriptor>& v) {
    if (std::holds_alternative<TrivialDescriptor>(v)) {
        return json{{"kind", "trivial"},
                    {"components", std::get<TrivialDescriptor>(v).components}};
    }
    const GenTLinkParams& g = std::get<GenTLinkParams>(v);
    json j = gen_tlink_to_json(g);
    j["kind"] = "gen";
    j["notation"] = gen_tlink_to_text(g);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Lorenz-like template links, T-links and their twisted "
                 "generalizations: braid builders, rewritings, volume bounds, "
                 "and a Kauffman-bracket verification oracle"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a braid word from parameters");
    std::string b_tlink, b_tn, b_gen, b_vector, b_out;
    bool b_json = false;
    build->add_option("--tlink", b_tlink, "T-link notation, e.g. T((2,3))");
    build->add_option("--tn", b_tn, "twisted notation, e.g. T^-2((2,5),(2;0))");
    build->add_option("--gen", b_gen, "generalised notation, e.g. T((2,3),(4,-4);d=0)");
    build->add_option("--vector", b_vector, "vector notation, e.g. <2^3,4^2>");
    build->add_option("--out", b_out, "write braid text to this file");
    build->add_flag("--json", b_json, "emit the braid as JSON instead of text");

    // export
    auto* exp = app.add_subcommand("export", "PD code of a braid closure as JSON");
    std::string e_braid;
    exp->add_option("--braid", e_braid, "braid text file")->required();

    // bunch
    auto* bunch = app.add_subcommand(
        "bunch", "code words -> template permutation, vector and trip number");
    std::string w_words, w_file;
    bunch->add_option("--words", w_words, "code words, e.g. \"x^2 y x y\"");
    bunch->add_option("--file", w_file, "read code words from a file");

    // trip
    auto* trip = app.add_subcommand("trip", "trip number of code words or a vector");
    std::string t_words, t_vector;
    trip->add_option("--words", t_words, "code words");
    trip->add_option("--vector", t_vector, "vector notation");

    // normalize
    auto* norm = app.add_subcommand(
        "normalize", "rewrite a template braid (vector + optional beta) to T-link form");
    std::string n_vector, n_beta, n_out;
    bool n_json = false;
    norm->add_option("--vector", n_vector, "vector notation")->required();
    norm->add_option("--beta", n_beta, "braid file appended after the template braid");
    norm->add_option("--out", n_out, "write the result to this file");
    norm->add_flag("--json", n_json, "emit the braid as JSON instead of text");

    // convert
    auto* conv = app.add_subcommand("convert", "parameter-level conversions");
    std::string c_mode, c_gen, c_tn, c_tlink, c_vector;
    long long c_n = 0, c_d = 0, c_dprime = 0;
    int c_rprime = 0;
    conv->add_option("--mode", c_mode,
                     "gen-to-tn | tn-to-gen | vector-to-tn | associated | alt-family")
        ->required();
    conv->add_option("--gen", c_gen, "generalised notation");
    conv->add_option("--tn", c_tn, "twisted notation");
    conv->add_option("--tlink", c_tlink, "T-link notation");
    conv->add_option("--vector", c_vector, "vector notation");
    conv->add_option("--n", c_n, "twist parameter n");
    conv->add_option("--d", c_d, "extra loops inside the twisted strip");
    conv->add_option("--d-prime", c_dprime, "loops parallel to the left boundary");
    conv->add_option("--r-prime", c_rprime, "target trip number (alt-family)");

    // bound
    auto* bound = app.add_subcommand("bound", "volume bound from trip number or parameters");
    std::optional<long long> bd_trip;
    std::string bd_gen;
    std::optional<long long> bd_n;
    long long bd_window = 2;
    bound->add_option("--trip", bd_trip, "trip number");
    bound->add_option("--gen", bd_gen, "generalised notation");
    bound->add_option("--n", bd_n, "twist count (omit to search the residual window)");
    bound->add_option("--window", bd_window,
                      "residue classes searched when --n is omitted (default 2)");

    // verify
    auto* verify = app.add_subcommand("verify", "oracle comparison of two braid closures");
    std::string v_a, v_b;
    int v_max = 24;
    verify->add_option("--braid-a", v_a, "first braid file")->required();
    verify->add_option("--braid-b", v_b, "second braid file")->required();
    verify->add_option("--max-crossings", v_max, "state-sum crossing limit (default 24)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 3;
    }

    if (build->parsed()) {
        const int sources = (!b_tlink.empty()) + (!b_tn.empty()) + (!b_gen.empty()) +
                            (!b_vector.empty());
        if (sources != 1)
            throw CLI::ValidationError("build", "give exactly one of --tlink/--tn/--gen/--vector");
        BraidWord b;
        if (!b_tlink.empty()) b = tlink_braid(parse_tlink(b_tlink));
        if (!b_tn.empty()) b = tn_link_braid(parse_tn_link(b_tn));
        if (!b_gen.empty()) b = gen_tlink_braid(parse_gen_tlink(b_gen));
        if (!b_vector.empty()) b = lorenz_braid(parse_vector(b_vector));
        emit_braid(b, b_out, b_json);
    } else if (exp->parsed()) {
        emit(pd_to_json(closure_pd(read_braid_file(e_braid))));
    } else if (bunch->parsed()) {
        if (w_words.empty() == w_file.empty())
            throw CLI::ValidationError("bunch", "give exactly one of --words/--file");
        std::string text = w_words;
        if (!w_file.empty()) {
            std::ifstream in(w_file);
            if (!in) throw std::invalid_argument("cannot open " + w_file);
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        const CodeWordSet cw = parse_code_words(text);
        const LorenzPermutation lp = permutation_from_code_words(cw);
        const LorenzVector vec = vector_from_permutation(lp);
        emit(json{{"permutation", lp.image()},
                  {"p", lp.p()},
                  {"vector", vector_to_json(vec)},
                  {"vector_notation", vector_to_text(vec)},
                  {"trip", trip_number(cw)}});
    } else if (trip->parsed()) {
        if (t_words.empty() == t_vector.empty())
            throw CLI::ValidationError("trip", "give exactly one of --words/--vector");
        long long n = t_words.empty() ? trip_number_of_vector(parse_vector(t_vector))
                                      : trip_number(parse_code_words(t_words));
        emit(json{{"trip", n}});
    } else if (norm->parsed()) {
        const LorenzVector v = parse_vector(n_vector);
        BraidWord result = n_beta.empty() ? tlink_normal_form(v)
                                          : tlink_normal_form(v, read_braid_file(n_beta));
        emit_braid(result, n_out, n_json);
    } else if (conv->parsed()) {
        if (c_mode == "gen-to-tn") {
            emit(tn_result_json(gen_to_tn(parse_gen_tlink(c_gen), c_n)));
        } else if (c_mode == "tn-to-gen") {
            emit(gen_result_json(tn_to_gen(parse_tn_link(c_tn))));
        } else if (c_mode == "vector-to-tn") {
            emit(tn_result_json(lorenz_like_to_tn(parse_vector(c_vector), c_n, c_d, c_dprime)));
        } else if (c_mode == "associated") {
            auto assoc = associated_lorenz(parse_tn_link(c_tn));
            if (assoc)
                emit(json{{"kind", "tlink"}, {"notation", tlink_to_text(*assoc)}});
            else
                emit(json{{"kind", "empty"}});
        } else if (c_mode == "alt-family") {
            emit(tn_result_json(alt_trip_representation(parse_tlink(c_tlink), c_n, c_rprime)));
        } else {
            throw CLI::ValidationError("convert", "unknown --mode " + c_mode);
        }
    } else if (bound->parsed()) {
        if (bd_trip.has_value() == !bd_gen.empty())
            throw CLI::ValidationError("bound", "give exactly one of --trip/--gen");
        if (bd_trip) {
            const VolumeBound vb = bound_from_trip(*bd_trip);
            json j{{"trip", vb.trip_or_index},
                   {"multiplier", vb.multiplier},
                   {"bound", vb.bound}};
            if (vb.breakdown) {
                // the accounting values are exact integers for every trip number
                j["breakdown"] = {{"parent_self", vb.breakdown->parent_self.num},
                                  {"untwist", vb.breakdown->untwist.num},
                                  {"side_loops", vb.breakdown->side_loops.num},
                                  {"total", vb.breakdown->total.num}};
            }
            emit(j);
        } else {
            const GenBoundResult r = bound_gen_tlink(parse_gen_tlink(bd_gen), bd_n, bd_window);
            emit(json{{"beta", r.beta},
                      {"multiplier", r.multiplier},
                      {"bound", r.bound},
                      {"n_used", r.n_used}});
        }
    } else if (verify->parsed()) {
        OracleOptions opts;
        opts.max_crossings = v_max;
        const EquivalenceVerdict verdict =
            equivalence_evidence(read_braid_file(v_a), read_braid_file(v_b), opts);
        emit(json{{"verdict", verdict.consistent ? "consistent" : "distinct"},
                  {"components", {verdict.components_a, verdict.components_b}},
                  {"jones_a", verdict.jones_a.to_string()},
                  {"jones_b", verdict.jones_b.to_string()}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tlinks::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
