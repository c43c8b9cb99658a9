#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "strtop/conf_model.hpp"
#include "strtop/homology.hpp"
#include "strtop/lens.hpp"
#include "strtop/spec_io.hpp"

namespace strtop::cli {

namespace {

struct Options {
    std::string spec, field, output, format = "json";
    int L = 4, k_min = -4, k_max = 8;
    bool reduced = false, products = false, compare = false, degree_one = false;
    std::string a, b, element;
    std::uint64_t seed = 20240611;
    int samples = 20;
    int p = 7, q = 1, l = 1, m = 0, q1 = 1, q2 = 1, p_max = 7;
    unsigned threads = 0;
};

// a check ran and failed
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned env_threads() {
    if (const char* s = std::getenv("ST_THREADS")) {
        try {
            int v = std::stoi(s);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

template <class K>
json vec_json(const Vec<K>& v) {
    json arr = json::array();
    for (const auto& [i, c] : v) arr.push_back({{"index", i}, {"coeff", coeff_to_json(c)}});
    return arr;
}

json lens_json(const LensH1Class& x) {
    json arr = json::array();
    for (const auto& [k, v] : x.terms()) arr.push_back({{"k", k.first}, {"kp", k.second}, {"coeff", v}});
    return arr;
}

json witness_json(const LensWitness& w) { return {{"degree", w.degree}, {"l", w.l}, {"a", w.a}}; }

json entry_json(const LensScanEntry& e) {
    json j = {{"p", e.p}, {"q1", e.q1}, {"q2", e.q2}, {"homeomorphic", e.homeomorphic}};
    j["witness"] = e.witness ? witness_json(*e.witness) : json(nullptr);
    return j;
}

template <class Key, class K, class RepFn>
json homology_json(const std::string& field, const HomologyClassTable<Key, K>& t, const std::string& name, RepFn rep) {
    json j;
    j["complex"] = name;
    j["field"] = field;
    j["window"] = {{"L", t.window.L}, {"k_min", t.window.k_min}, {"k_max", t.window.k_max}};
    j["degrees"] = json::array();
    for (const auto& [k, h] : t.degrees) {
        json reps = json::array();
        for (const auto& r : h.representatives) reps.push_back(rep(r));
        j["degrees"].push_back({{"degree", k}, {"dim", h.dim()}, {"representatives", reps}});
    }
    return j;
}

template <class K>
json product_table_json(const std::map<std::tuple<int, int, int, int>, Vec<K>>& t) {
    json arr = json::array();
    for (const auto& [key, v] : t) {
        auto [k1, i, k2, jdx] = key;
        arr.push_back({{"left", {k1, i}}, {"right", {k2, jdx}}, {"result", vec_json(v)}});
    }
    return arr;
}

template <class Key, class K>
std::string dims_csv(const HomologyClassTable<Key, K>& t) {
    std::ostringstream s;
    s << "degree,dim\n";
    for (const auto& [k, h] : t.degrees) s << k << "," << h.dim() << "\n";
    return s.str();
}

template <class Fn>
auto with_model(const Options& o, Fn&& fn) {
    json spec = read_json_file(o.spec);
    return with_spec_field(spec, o.field, [&](const auto& field) { return fn(frobenius_from_spec(spec, field)); });
}

template <class Fn>
auto with_algebra(const Options& o, Fn&& fn) {
    json spec = read_json_file(o.spec);
    return with_spec_field(spec, o.field, [&](const auto& field) { return fn(dga_from_spec(spec, field)); });
}

std::string cmd_validate(const Options& o) {
    json spec = read_json_file(o.spec);
    return with_spec_field(spec, o.field, [&](const auto& field) {
        std::ostringstream s;
        auto alg = dga_from_spec(spec, field);
        Report rep = validate_dga(alg);
        bool ok = rep.empty();
        for (const auto& v : rep) s << "dga: " << v.axiom << " fails at " << v.detail << "\n";
        if (ok) s << "dga: ok\n";
        if (spec.contains("pairing")) {
            auto F = frobenius_from_spec(spec, field);
            Report fr = validate_frobenius(F);
            for (const auto& v : fr) s << "frobenius: " << v.axiom << " fails: " << v.detail << "\n";
            if (fr.empty()) s << "frobenius: ok\n";
            ok = ok && fr.empty();
        }
        if (!ok) throw CheckFailed(s.str());
        return s.str();
    });
}

std::string cmd_hh(const Options& o) {
    return with_model(o, [&](const auto& F) {
        const auto& A = F.algebra();
        using K = typename std::decay_t<decltype(A)>::K;
        auto C = hochschild_chain_complex(A, o.L, o.reduced);
        auto t = homology(C, WindowInfo{o.L, o.k_min, o.k_max});
        if (o.format == "csv") return dims_csv(t);
        json j = homology_json(A.field().name(), t, C.name, [&](const auto& r) { return chain_to_json(A, r); });
        if (o.products) {
            if (!o.reduced) throw PreconditionError("--products needs --reduced (the star product is a chain map there)");
            std::function<HochschildElement<K>(const HochschildElement<K>&, const HochschildElement<K>&)> op =
                [&](const auto& x, const auto& y) { return gh_star(F, x, y); };
            j["product_table"] = product_table_json(induced_product(t, op, F.dimension() - 1));
        }
        return j.dump(2) + "\n";
    });
}

std::string cmd_cohh(const Options& o) {
    return with_algebra(o, [&](const auto& A) {
        using K = typename std::decay_t<decltype(A)>::K;
        auto C = hochschild_cochain_complex(A, o.L);
        auto t = homology(C, WindowInfo{o.L, o.k_min, o.k_max});
        if (o.format == "csv") return dims_csv(t);
        json j = homology_json(A.field().name(), t, C.name, [&](const auto& r) { return cochain_to_json(A, r); });
        if (o.products) {
            std::function<CochainTensor<K>(const CochainTensor<K>&, const CochainTensor<K>&)> op =
                [&](const auto& f, const auto& g) { return cup(A, f, g, INT_MAX); };
            j["product_table"] = product_table_json(induced_product(t, op, 0));
        }
        return j.dump(2) + "\n";
    });
}

std::string cmd_tate(const Options& o) {
    return with_model(o, [&](const auto& F) {
        const auto& A = F.algebra();
        auto C = tate_complex(F, o.L);
        auto t = homology(C, WindowInfo{o.L, o.k_min, o.k_max});
        if (o.format == "csv") return dims_csv(t);
        json j = homology_json(A.field().name(), t, C.name, [&](const auto& r) {
            auto e = to_tate(r);
            return json{{"cochain", cochain_to_json(A, e.cochain)}, {"chain", chain_to_json(A, e.chain)}};
        });
        if (o.products) {
            auto rep = tate_commutativity(F, o.L, o.k_min, o.k_max);
            j["commutativity"] = {{"pairs_checked", rep.pairs_checked}, {"failures", rep.failures}};
            if (!rep.failures.empty()) throw CheckFailed(j.dump(2) + "\n");
        }
        return j.dump(2) + "\n";
    });
}

std::string cmd_cup(const Options& o) {
    return with_algebra(o, [&](const auto& A) {
        auto f = cochain_from_json(A, read_json_file(o.a));
        auto g = cochain_from_json(A, read_json_file(o.b));
        return cochain_to_json(A, cup(A, f, g)).dump(2) + "\n";
    });
}

std::string cmd_star(const Options& o) {
    return with_model(o, [&](const auto& F) {
        const auto& A = F.algebra();
        auto x = chain_from_json(A, read_json_file(o.a));
        auto y = chain_from_json(A, read_json_file(o.b));
        return chain_to_json(A, gh_star(F, x, y)).dump(2) + "\n";
    });
}

std::string cmd_gamma(const Options& o) {
    return with_model(o, [&](const auto& F) {
        const auto& A = F.algebra();
        auto a = o.element.empty() ? A.unit_elem() : element_from_json(A, read_json_file(o.element));
        json j;
        j["gamma"] = element_to_json(A, gamma(F, a));
        j["euler_class"] = element_to_json(A, euler_class(F));
        j["euler_characteristic"] = coeff_to_json(euler_characteristic(F));
        return j.dump(2) + "\n";
    });
}

std::string cmd_pipeline(const Options& o) {
    return with_model(o, [&](const auto& F) {
        using Fd = std::decay_t<decltype(F.field())>;
        const auto& A = F.algebra();
        ConfModels<Fd> M(F);
        auto x = chain_from_json(A, read_json_file(o.a));
        auto y = chain_from_json(A, read_json_file(o.b));
        auto P = geometric_coproduct_pipeline(M, x, y);
        if (!o.compare) return chain_to_json(A, P).dump(2) + "\n";
        auto S = gh_star(F, y, x);
        bool up_to_sign = P.size() == S.size();
        for (const auto& [w, c] : P) {
            auto s = S.coeff(w);
            if (!(s == c || s == -c)) up_to_sign = false;
        }
        json j;
        j["pipeline"] = chain_to_json(A, P);
        j["star"] = chain_to_json(A, S);
        j["exact"] = P == S;
        j["up_to_sign"] = up_to_sign;
        return j.dump(2) + "\n";
    });
}

// random samples of the complex identities; the seed is echoed in the report
std::string cmd_check(const Options& o) {
    return with_model(o, [&](const auto& F) {
        const auto& A = F.algebra();
        using K = typename std::decay_t<decltype(A)>::K;
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> deg(o.k_min, o.k_max), coeff(-3, 3);
        auto chain = [&](int k) {
            HochschildElement<K> x;
            auto basis = chain_basis(A, k, o.L);
            for (int i = 0; i < 3 && !basis.empty(); ++i)
                x.add(basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)],
                      A.field().from_int(coeff(rng)));
            return x;
        };
        auto cochain = [&](int k) {
            CochainTensor<K> f;
            auto basis = cochain_basis(A, k, o.L);
            for (int i = 0; i < 3 && !basis.empty(); ++i)
                f.add(basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)],
                      A.field().from_int(coeff(rng)));
            return f;
        };
        std::map<std::string, std::pair<int, int>> tally;
        auto record = [&](const std::string& name, bool ok) {
            auto& t = tally[name];
            ++t.first;
            if (!ok) ++t.second;
        };
        for (int s = 0; s < o.samples; ++s) {
            auto x = chain(deg(rng));
            record("chain d^2", chain_differential(A, chain_differential(A, x)).empty());
            record("B^2", connes_B(A, connes_B(A, x)).empty());
            record("B d + d B", (connes_B(A, chain_differential(A, x)) + chain_differential(A, connes_B(A, x))).empty());
            auto f = cochain(deg(rng));
            record("cochain delta^2", cochain_differential(A, cochain_differential(A, f)).empty());
            if (A.connected() && F.dimension() > 0) {
                int k = deg(rng);
                auto a = reduced(A, chain(k)), b = reduced(A, chain(deg(rng)));
                HochschildElement<K> defect;
                for (const auto& [w, c] : a) defect += leibniz_defect(F, HochschildElement<K>(w, c), b);
                record("star Leibniz (reduced)", defect.empty());
            }
        }
        json j;
        j["seed"] = o.seed;
        j["samples"] = o.samples;
        j["checks"] = json::array();
        bool ok = true;
        for (const auto& [name, t] : tally) {
            j["checks"].push_back({{"name", name}, {"checked", t.first}, {"failed", t.second}});
            ok = ok && t.second == 0;
        }
        if (!ok) throw CheckFailed(j.dump(2) + "\n");
        return j.dump(2) + "\n";
    });
}

std::string cmd_lens_coproduct(const Options& o) {
    LensSpace L(o.p, o.q);
    json j = {{"p", L.p}, {"q", L.q}, {"l", o.l}, {"m", o.m}};
    j["beta"] = lens_json(rho_coproduct(L, o.l, o.m));
    return j.dump(2) + "\n";
}

std::string cmd_lens_invariance(const Options& o) {
    auto r = coproduct_invariance_search(o.p, o.q1, o.q2, o.degree_one ? Degrees::One : Degrees::Both);
    json j = {{"p", o.p}, {"q1", o.q1}, {"q2", o.q2}};
    j["preserved"] = r.witness.has_value();
    j["vacuous"] = r.vacuous;
    j["degrees_tried"] = r.degrees_tried;
    j["witnesses"] = json::array();
    if (r.witness) j["witnesses"].push_back(witness_json(*r.witness));
    j["homeomorphic"] = homeomorphic(o.p, o.q1, o.q2);
    return j.dump(2) + "\n";
}

std::string cmd_lens_scan(const Options& o) {
    auto r = thm_lens_scan(o.p_max, o.threads ? o.threads : env_threads());
    json j;
    j["p_max"] = r.p_max;
    j["pairs"] = r.pairs;
    j["witnesses"] = r.witnesses;
    j["vacuous"] = r.vacuous;
    j["non_preserving"] = r.non_preserving.size();
    j["counterexamples"] = json::array();
    for (const auto& e : r.counterexamples) j["counterexamples"].push_back(entry_json(e));
    j["degree_one"] = {{"counterexamples", r.degree_one_counterexamples},
                       {"orientation_reversal_only", r.orientation_reversal_only}};
    // (7,1,2) is the paper's example of a homotopy equivalence that does not preserve the coproduct
    bool flagged = false;
    for (const auto& e : r.non_preserving)
        if (e.p == 7 && e.q1 == 1 && e.q2 == 2) flagged = true;
    if (o.p_max >= 7) j["flagged_7_1_2"] = flagged;
    if (!r.counterexamples.empty()) throw CheckFailed(j.dump(2) + "\n");
    return j.dump(2) + "\n";
}

void add_model_options(CLI::App* c, Options& o, bool window) {
    c->add_option("spec", o.spec, "algebra spec file (JSON)")->required();
    c->add_option("--field", o.field, "override the spec's field: Q or Fp:<p>");
    if (window) {
        c->add_option("--L", o.L, "maximum word length")->check(CLI::NonNegativeNumber);
        c->add_option("--kmin", o.k_min, "lowest degree");
        c->add_option("--kmax", o.k_max, "highest degree");
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"strtop: Hochschild, Tate and string-topology computations on finite models"};
    app.name("strtop");
    app.require_subcommand(1);
    app.add_option("-o,--output", o.output, "write the report to this file");

    auto* validate = app.add_subcommand("validate", "check the dga and Frobenius axioms of a spec");
    add_model_options(validate, o, false);

    auto* hh = app.add_subcommand("hh", "Hochschild homology in a degree window");
    add_model_options(hh, o, true);
    hh->add_flag("--reduced", o.reduced, "use the reduced complex");
    hh->add_flag("--products", o.products, "induced star product on the computed classes");

    auto* cohh = app.add_subcommand("cohh", "Hochschild cohomology in a degree window");
    add_model_options(cohh, o, true);
    cohh->add_flag("--products", o.products, "induced cup product on the computed classes");

    auto* tate = app.add_subcommand("tate", "Tate-Hochschild cohomology in a degree window");
    add_model_options(tate, o, true);
    tate->add_flag("--products", o.products, "check graded commutativity on pure-sector classes");

    auto* cupc = app.add_subcommand("cup", "cup product of two cochains");
    add_model_options(cupc, o, false);
    cupc->add_option("--f", o.a, "cochain JSON")->required();
    cupc->add_option("--g", o.b, "cochain JSON")->required();

    auto* star = app.add_subcommand("star", "Goresky-Hingston product of two chains");
    add_model_options(star, o, false);
    star->add_option("--a", o.a, "chain JSON")->required();
    star->add_option("--b", o.b, "chain JSON")->required();

    auto* gam = app.add_subcommand("gamma", "gamma(a) and the Euler class");
    add_model_options(gam, o, false);
    gam->add_option("--element", o.element, "element JSON [{label, coeff}], default the unit");

    auto* pipe = app.add_subcommand("pipeline", "geometric coproduct pipeline on relative chains");
    add_model_options(pipe, o, false);
    pipe->add_option("--a", o.a, "chain JSON")->required();
    pipe->add_option("--b", o.b, "chain JSON")->required();
    pipe->add_flag("--compare", o.compare, "also report gh_star(b, a) and the agreement");

    auto* check = app.add_subcommand("check", "random samples of the complex identities");
    add_model_options(check, o, true);
    check->add_option("--seed", o.seed, "random seed");
    check->add_option("--samples", o.samples, "number of samples")->check(CLI::PositiveNumber);

    auto* lens = app.add_subcommand("lens", "lens space coproduct computations");
    lens->require_subcommand(1);
    auto* lc = lens->add_subcommand("coproduct", "coproduct of rho_{l,m} on L(p,q)");
    lc->add_option("--p", o.p)->required();
    lc->add_option("--q", o.q)->required();
    lc->add_option("--l", o.l)->required()->check(CLI::NonNegativeNumber);
    lc->add_option("--m", o.m)->required()->check(CLI::NonNegativeNumber);
    auto* li = lens->add_subcommand("invariance", "search for a coproduct-preserving homotopy equivalence");
    li->add_option("--p", o.p)->required();
    li->add_option("--q1", o.q1)->required();
    li->add_option("--q2", o.q2)->required();
    li->add_flag("--degree-one", o.degree_one, "only degree-1 equivalences");
    auto* ls = lens->add_subcommand("scan", "compare the search with the homeomorphism classification");
    ls->add_option("--pmax", o.p_max)->required()->check(CLI::Range(2, 100000));
    ls->add_option("--threads", o.threads, "worker threads (default ST_THREADS or 1)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string report;
    int code = 0;
    try {
        if (*validate) report = cmd_validate(o);
        else if (*hh) report = cmd_hh(o);
        else if (*cohh) report = cmd_cohh(o);
        else if (*tate) report = cmd_tate(o);
        else if (*cupc) report = cmd_cup(o);
        else if (*star) report = cmd_star(o);
        else if (*gam) report = cmd_gamma(o);
        else if (*pipe) report = cmd_pipeline(o);
        else if (*check) report = cmd_check(o);
        else if (*lc) report = cmd_lens_coproduct(o);
        else if (*li) report = cmd_lens_invariance(o);
        else if (*ls) report = cmd_lens_scan(o);
    } catch (const CheckFailed& e) {
        report = e.what();
        code = 1;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const WindowOverflow& e) {
        err << "refused: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.output.empty()) out << report;
    else {
        std::ofstream f(o.output);
        if (!f) {
            err << "error: cannot write " << o.output << "\n";
            return 2;
        }
        f << report;
    }
    return code;
}

}  // namespace strtop::cli
