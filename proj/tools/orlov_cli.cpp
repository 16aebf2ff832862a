#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "orlov/checks.hpp"
#include "orlov/coghost.hpp"
#include "orlov/extension_closure.hpp"
#include "orlov/f2_oracle.hpp"
#include "orlov/homext.hpp"
#include "orlov/layers.hpp"

using json = nlohmann::json;
using namespace orlov;

namespace {

constexpr int kExitUsage = 2, kExitInput = 3, kExitRefusal = 4, kExitVerify = 5;
constexpr const char* kSchema = "orlov-kit/1";

AlgebraDescriptor parse_descriptor(const json& j) {
    if (!j.is_object()) throw InputError("descriptor must be a JSON object");
    AlgebraDescriptor d;
    const std::string shape = j.at("shape").get<std::string>();
    if (shape == "linear") d.shape = Shape::Linear;
    else if (shape == "cyclic") d.shape = Shape::Cyclic;
    else throw InputError("shape must be \"linear\" or \"cyclic\"");
    d.n = j.at("n").get<int>();
    if (j.contains("relation") && !j.at("relation").is_null()) {
        const auto& r = j.at("relation");
        d.relation = Relation{r.at("start").get<int>(), r.at("length").get<int>()};
    }
    return d;
}

Algebra load_algebra(const std::string& path) {
    if (path.empty()) throw InputError("--algebra is required");
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Algebra::build(parse_descriptor(json::parse(in)));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

json descriptor_json(const Algebra& A) {
    json j;
    j["shape"] = A.is_linear() ? "linear" : "cyclic";
    j["n"] = A.n();
    const auto& d = A.descriptor();
    if (d && d->relation) j["relation"] = {{"start", d->relation->start}, {"length", d->relation->length}};
    else j["relation"] = nullptr;
    return j;
}

json dim_json(const HomDim& d) { return d ? json(*d) : json("inf"); }

json time_json(const Time& t) { return t ? json(*t) : json(nullptr); }

IndecSet parse_generator(const Algebra& A, const std::string& text) {
    const ModuleSum M = parse_module(text);
    A.check(M);
    return IndecSet::of(A, M);
}

void emit(json j) {
    j["schema"] = kSchema;
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in module categories of Nakayama algebras"};
    app.require_subcommand(1);

    std::string algebra_path;
    std::uint64_t seed = CheckOptions{}.seed;
    int jobs = 0;
    bool force = false;
    app.add_option("--algebra", algebra_path, "Algebra descriptor (JSON)");
    app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_option("--jobs", jobs, "Worker threads (0: default)");
    app.add_flag("--force", force, "Lift size limits");

    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", algebra_path, "Algebra descriptor (JSON)");
        sub->add_option("--jobs", jobs, "Worker threads (0: default)");
        sub->add_option("--seed", seed, "Seed for randomized checks");
        sub->add_flag("--force", force, "Lift size limits");
    };

    auto* c_algebra = app.add_subcommand("algebra", "Kupisch series and basic invariants");
    auto* c_indec = app.add_subcommand("indec", "List the indecomposable modules");

    std::string gen;
    int level = 1;
    auto* c_closure = app.add_subcommand("closure", "Members of [T]_k");
    c_closure->add_option("--gen", gen, "Generator, e.g. 1-1+2-1")->required();
    c_closure->add_option("--level", level, "Level k >= 1")->required();
    auto* c_gentime = app.add_subcommand("gentime", "Generation time of T");
    c_gentime->add_option("--gen", gen, "Generator")->required();

    auto* c_ospec = app.add_subcommand("ospec", "Exhaustive spectrum of a linear algebra");

    std::string simples_text, module_text;
    auto* c_llts = app.add_subcommand("llts", "Radical layer length for the torsion theory of a set of simples");
    c_llts->add_option("--simples", simples_text, "Vertices, e.g. 1,3");
    c_llts->add_option("--module", module_text, "Module literal; default is the regular module");
    auto* c_thm2 = app.add_subcommand("thm2", "Lower bound for the spectrum from the layer length");
    c_thm2->add_option("--simples", simples_text, "Vertices, e.g. 1,3");
    auto* c_pd = app.add_subcommand("pd", "Projective and injective dimensions");
    c_pd->add_option("--module", module_text, "Module literal; default is every simple");

    int m = 1;
    bool list_irreducible = false;
    auto* c_coghost = app.add_subcommand("coghost", "Coghosts for T_m = {M[1,j] : j <= m} + simples");
    c_coghost->add_option("--m", m, "1 <= m < n")->required();
    c_coghost->add_flag("--list-irreducible", list_irreducible, "List the irreducible T_m-coghosts");

    int nmax = 4;
    auto* c_lemma = app.add_subcommand("coghost-lemma", "Check the coghost and ghost lemmas for every T");
    c_lemma->add_option("--nmax", nmax, "Largest chain length");

    bool dot = false;
    auto* c_ar = app.add_subcommand("arquiver", "Auslander-Reiten quiver of a linear hereditary algebra");
    c_ar->add_flag("--dot", dot, "Graphviz output");

    int cap = 12;
    auto* c_oracle = app.add_subcommand("oracle", "Brute force over GF(2)");
    c_oracle->require_subcommand(1);
    auto* c_oracle_verify = c_oracle->add_subcommand("verify", "Compare the fast paths with the oracle");
    c_oracle_verify->add_option("--cap", cap, "Largest total dimension");

    std::vector<int> only;
    bool a6 = false;
    auto* c_paper = app.add_subcommand("paper", "Reference values");
    c_paper->require_subcommand(1);
    auto* c_paper_verify = c_paper->add_subcommand("verify", "Run every reference check");
    c_paper_verify->add_option("--only", only, "Run only these check ids");
    c_paper_verify->add_flag("--a6", a6, "Include the exhaustive spectrum of A_6");

    for (auto* sub : {c_algebra, c_indec, c_closure, c_gentime, c_ospec, c_llts, c_thm2, c_pd, c_coghost, c_lemma,
                      c_ar, c_oracle_verify, c_paper_verify})
        with_algebra(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_paper_verify->parsed()) {
            CheckOptions opt;
            opt.jobs = jobs;
            opt.seed = seed;
            opt.include_a6 = a6;
            std::vector<int> ids = only;
            if (ids.empty())
                for (int id = 1; id <= kNumChecks; ++id) ids.push_back(id);
            json checks = json::array();
            bool all = true;
            for (int id : ids) {
                const CheckOutcome c = run_check(id, opt);
                all = all && c.pass;
                checks.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"details", c.details}});
                std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << std::endl;
            }
            emit({{"command", "paper verify"}, {"seed", seed}, {"pass", all}, {"checks", checks}});
            return all ? 0 : kExitVerify;
        }

        const Algebra A = load_algebra(algebra_path);

        if (c_algebra->parsed()) {
            emit({{"command", "algebra"},
                  {"descriptor", descriptor_json(A)},
                  {"kupisch", A.kupisch()},
                  {"loewy_length", A.loewy_length()},
                  {"dimension", A.dimension()},
                  {"indecomposables", A.num_indecomposables()},
                  {"hereditary", A.is_hereditary()},
                  {"spi", to_string(spi_classify(A))}});
        } else if (c_indec->parsed()) {
            json list = json::array();
            for (auto& u : A.indecomposables()) {
                json e = {{"module", format(u)},
                          {"top", u.top},
                          {"length", u.length},
                          {"socle", A.socle_vertex(u)},
                          {"projective", A.is_projective(u)},
                          {"injective", A.is_injective(u)}};
                if (A.is_linear()) e["interval"] = format_interval(u);
                list.push_back(e);
            }
            emit({{"command", "indec"}, {"count", list.size()}, {"indecomposables", list}});
        } else if (c_closure->parsed()) {
            if (level < 1) throw InputError("--level must be at least 1");
            const ExtensionTable tab(A);
            const IndecSet T = parse_generator(A, gen);
            const IndecSet C = tab.bracket(T, level);
            std::vector<std::string> members;
            for (auto& u : C.members(A)) members.push_back(format(u));
            emit({{"command", "closure"},
                  {"generator", gen},
                  {"level", level},
                  {"count", C.count()},
                  {"everything", C == tab.all()},
                  {"members", members}});
        } else if (c_gentime->parsed()) {
            const IndecSet T = parse_generator(A, gen);
            const Time t = generation_time(A, T);
            emit({{"command", "gentime"}, {"generator", gen}, {"generation_time", time_json(t)}, {"strong", t.has_value()}});
        } else if (c_ospec->parsed()) {
            const auto r = orlov_spectrum(A, {.jobs = jobs, .force = force});
            json witnesses = json::object();
            for (auto& [t, T] : r.witnesses) witnesses[std::to_string(t)] = format_module(T.as_module(A));
            emit({{"command", "ospec"},
                  {"spectrum", r.spectrum},
                  {"ext_dim", time_json(r.ext_dim())},
                  {"u_dim", time_json(r.u_dim())},
                  {"witnesses", witnesses},
                  {"candidates", r.candidates},
                  {"pruned", r.pruned},
                  {"strong_generators", r.strong}});
        } else if (c_llts->parsed()) {
            const TorsionSpec S = parse_simples(simples_text);
            for (int v : S.S) A.check_vertex(v);
            json out = {{"command", "llts"}, {"simples", S.S}};
            if (module_text.empty()) {
                out["module"] = "regular";
                out["llts"] = algebra_llts(A, S);
            } else {
                const ModuleSum M = parse_module(module_text);
                A.check(M);
                out["module"] = format_module(M);
                out["llts"] = radical_layer_length(A, S, M);
                out["torsion_part"] = format_module(torsion_radical(A, S, M));
            }
            emit(out);
        } else if (c_thm2->parsed()) {
            const TorsionSpec S = parse_simples(simples_text);
            for (int v : S.S) A.check_vertex(v);
            const int L = algebra_llts(A, S);
            std::set<int> sub = ceiling_spectrum(L);
            sub.insert(0);  // every representation-finite algebra has 0 in its spectrum
            emit({{"command", "thm2"},
                  {"simples", S.S},
                  {"llts", L},
                  {"ceiling", ceiling_spectrum(L)},
                  {"spectrum_subset", sub}});
        } else if (c_pd->parsed()) {
            json out = {{"command", "pd"}};
            if (!module_text.empty()) {
                const ModuleSum M = parse_module(module_text);
                A.check(M);
                out["module"] = format_module(M);
                out["pd"] = dim_json(projective_dimension(A, M));
                out["id"] = dim_json(injective_dimension(A, M));
            } else {
                json rows = json::array();
                for (int i = 1; i <= A.n(); ++i)
                    rows.push_back({{"vertex", i},
                                    {"pd", dim_json(projective_dimension(A, A.simple(i)))},
                                    {"id", dim_json(injective_dimension(A, A.simple(i)))}});
                out["simples"] = rows;
                out["global_dimension"] = dim_json(global_dimension(A));
                out["finite_pd_simples"] = finite_pd_simples(A).S;
            }
            emit(out);
        } else if (c_coghost->parsed()) {
            const IndecSet T = tm_generator(A, m);
            json out = {{"command", "coghost"}, {"m", m}, {"generator", format_module(T.as_module(A))}};
            if (list_irreducible) {
                std::vector<std::string> labels;
                for (auto& a : irreducible_coghosts(A, T)) labels.push_back(a.label());
                out["irreducible"] = labels;
                out["count"] = labels.size();
            }
            emit(out);
        } else if (c_lemma->parsed()) {
            if (nmax < 1) throw InputError("--nmax must be at least 1");
            if (A.num_indecomposables() > 12 && !force)
                throw RefusalError("more than 12 indecomposables; pass --force");
            if (A.num_indecomposables() > 63) throw RefusalError("too many indecomposables");
            Report total{"coghost-lemma", 0, {}};
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << A.num_indecomposables()); ++mask)
                total.merge(coghost_lemma_check(A, IndecSet::from_mask(mask), nmax));
            emit({{"command", "coghost-lemma"},
                  {"nmax", nmax},
                  {"checked", total.checked},
                  {"pass", total.ok()},
                  {"violations", total.violations}});
            if (!total.ok()) return kExitVerify;
        } else if (c_ar->parsed()) {
            const ArQuiver Q = ar_quiver(A);
            if (dot) {
                std::cout << Q.to_dot();
            } else {
                std::vector<std::string> nodes;
                for (auto& u : Q.nodes) nodes.push_back(format_interval(u));
                json arrows = json::array();
                for (auto& a : Q.arrows)
                    arrows.push_back({{"label", a.label()},
                                      {"source", format_interval(a.source())},
                                      {"target", format_interval(a.target())}});
                emit({{"command", "arquiver"}, {"nodes", nodes}, {"arrows", arrows}});
            }
        } else if (c_oracle_verify->parsed()) {
            if (cap < 1) throw InputError("--cap must be positive");
            if (cap > 14 && !force) throw RefusalError("cap above 14; pass --force");
            json reports = json::array();
            bool all = true;
            auto add = [&](const Report& r) {
                all = all && r.ok();
                reports.push_back(
                    {{"name", r.name}, {"checked", r.checked}, {"pass", r.ok()}, {"violations", r.violations}});
            };
            add(f2::check_hom_dims(A));
            if (A.is_linear()) {
                add(f2::check_ext_rule(A));
                add(f2::check_roundtrip(A, cap));
                add(f2::check_star_completeness(A, cap, 2));
            }
            emit({{"command", "oracle verify"}, {"cap", cap}, {"pass", all}, {"reports", reports}});
            if (!all) return kExitVerify;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
