#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qpcluster/error.hpp"
#include "qpcluster/json_io.hpp"
#include "qpcluster/qp6.hpp"

using namespace qpc;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// All ray/boundary quantities of one dataset, with an optional extra star
// subdivision for fan-invariance experiments.
Json nullroot_report(const ToricData& d, bool extra_subdivision) {
    Fan2D fan = smooth_complete_fan(d);
    if (extra_subdivision) fan = star_subdivide(fan);
    BoundaryData bd = boundary_data(d, fan);
    NullRoot nr = null_root(d, bd);

    Json j;
    Json rays = Json::array();
    for (const Vec2& r : fan.rays) rays.push_back(Json::array({r[0], r[1]}));
    j["rays"] = std::move(rays);
    j["self_int"] = bd.self_int;
    j["mult"] = bd.mult;
    j["h"] = qmat_json(bd.h);
    Json cp = Json::array();
    for (const Int& c : nr.c_prime) cp.push_back(int_json(c));
    j["c_prime"] = std::move(cp);
    Json cs = Json::array();
    for (const Int& c : nr.c) cs.push_back(int_json(c));
    j["c"] = std::move(cs);
    j["delta"] = zvec_json(nr.delta);
    return j;
}

bool all_passed(const std::vector<CheckResult>& rows) {
    for (const auto& r : rows)
        if (!r.passed) return false;
    return true;
}

// Relation verdicts computed by a small worker pool; the merge order is the
// relation order of the entry, independent of completion order.
std::vector<CheckResult> relation_checks(const std::vector<const CatalogEntry*>& entries,
                                         const SimplifyOptions& opts) {
    struct Task {
        const CatalogEntry* entry;
        const CatalogRelation* rel;
        bool ok = false;
    };
    std::vector<Task> tasks;
    for (const CatalogEntry* e : entries)
        for (const auto& r : e->relations) tasks.push_back({e, &r});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            tasks[i].ok = verify_relation(*tasks[i].entry, tasks[i].rel->word, opts);
    };
    unsigned pool = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                       unsigned(tasks.size() ? tasks.size() : 1));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < pool; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    std::vector<CheckResult> rows;
    rows.reserve(tasks.size());
    for (const auto& t : tasks)
        rows.push_back({"relation " + t.rel->name, t.ok,
                        t.ok ? "" : "the word is not a trivial cluster transformation"});
    return rows;
}

// relation_rows: this entry's slice of a relation_checks result
Json label_report(const CatalogEntry& e, std::vector<CheckResult> relation_rows, bool& ok) {
    std::vector<CheckResult> rows = verify_root_basis(e);
    for (auto& r : verify_actions(e)) rows.push_back(std::move(r));
    for (auto& r : relation_rows) rows.push_back(std::move(r));
    ok = all_passed(rows);
    Json j;
    j["label"] = e.label;
    j["checks"] = checks_json(rows);
    j["passed"] = ok;
    return j;
}

std::string float_str(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

int run_qp6_orbit(int steps, const std::string& params_path, const std::string& order,
                  const std::string& out_path) {
    QP6Context ctx = build_qp6_context();
    QP6Params params = qp6_default_params();
    if (!params_path.empty()) {
        Json j = load_json_file(params_path);
        if (!j.is_object() || !j.contains("a")) fail("BadInput", "params need an \"a\" list");
        params.a.clear();
        for (const auto& v : j.at("a")) params.a.push_back(rat_from_json(v));
        if (j.contains("f0")) params.f0 = rat_from_json(j.at("f0"));
        if (j.contains("g0")) params.g0 = rat_from_json(j.at("g0"));
    }
    QP6Trajectory traj = qp6_orbit(ctx, params, steps, order == "c1-first");

    auto state_row = [&](int step) {
        QP6State st = qp6_state(ctx, traj.points[std::size_t(step)].x);
        return st;
    };

    std::string rendered;
    if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json") {
        Json j;
        j["steps"] = steps;
        j["order"] = order;
        j["max_rel_err"] = float_str(traj.max_rel_err);
        Json points = Json::array();
        for (int s = 0; s <= steps; ++s) {
            QP6State st = state_row(s);
            Json p;
            p["step"] = s;
            Json a = Json::array();
            for (const Rat& v : st.a) a.push_back(rat_json(v));
            p["a"] = std::move(a);
            p["f"] = rat_json(st.f);
            p["g"] = rat_json(st.g);
            p["q"] = rat_json(st.q);
            points.push_back(std::move(p));
        }
        j["points"] = std::move(points);
        rendered = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "step,a0,a1,a2,a3,a4,a5,f,g,q\n";
        auto cell = [](const Rat& v) {
            std::string s = v.get_num().get_str();
            if (v.get_den() != 1) s += "/" + v.get_den().get_str();
            return s;
        };
        for (int s = 0; s <= steps; ++s) {
            QP6State st = state_row(s);
            os << s;
            for (const Rat& v : st.a) os << ',' << cell(v);
            os << ',' << cell(st.f) << ',' << cell(st.g) << ',' << cell(st.q) << "\n";
        }
        rendered = os.str();
    }

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) fail("BadInput", "cannot write " + out_path);
        out << rendered;
        Json summary;
        summary["steps"] = steps;
        summary["max_rel_err"] = float_str(traj.max_rel_err);
        summary["out"] = out_path;
        emit(summary);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster machinery for q-Painlevé equations"};
    app.require_subcommand(1);

    std::string input_path;
    bool extra_subdivision = false;
    std::size_t simplify_threshold = SimplifyOptions{}.gcd_threshold;
    std::string fast_path = "on";
    auto add_engine_flags = [&](CLI::App* cmd) {
        cmd->add_option("--simplify-threshold", simplify_threshold,
                        "term count that triggers gcd reduction");
        cmd->add_option("--fast-path", fast_path, "modular rejection fast path")
            ->check(CLI::IsMember({"on", "off"}));
    };

    auto* classify = app.add_subcommand("classify", "type label of a toric dataset");
    classify->add_option("input", input_path, "toric JSON file")->required();

    auto* nullroot = app.add_subcommand("nullroot", "fan, boundary matrix and null root");
    nullroot->add_option("input", input_path, "toric JSON file")->required();
    nullroot->add_flag("--fan-extra-subdivision", extra_subdivision,
                       "star-subdivide the canonical fan once");

    auto* polygon = app.add_subcommand("polygon", "the polygon cut out by the null root");
    polygon->add_option("input", input_path, "toric JSON file")->required();
    polygon->add_flag("--fan-extra-subdivision", extra_subdivision,
                      "star-subdivide the canonical fan once");

    auto* seed_from = app.add_subcommand("seed-from-polygon", "toric data of a polygon");
    seed_from->add_option("input", input_path, "polygon JSON file")->required();

    std::string word_path;
    auto* mutate = app.add_subcommand("mutate", "apply a word to a seed");
    mutate->add_option("seed", input_path, "seed JSON file")->required();
    mutate->add_option("word", word_path, "word JSON file")->required();

    std::string label;
    auto* verify = app.add_subcommand("verify", "verify one reference dataset");
    verify->add_option("label", label, "dataset label, e.g. E5(1)")->required();
    add_engine_flags(verify);

    std::vector<std::string> labels;
    auto* verify_all = app.add_subcommand("verify-all", "verify reference datasets");
    verify_all->add_option("labels", labels, "subset of labels (default: all ten)");
    add_engine_flags(verify_all);

    auto* qp6 = app.add_subcommand("qp6", "the sixth q-Painlevé system");
    qp6->require_subcommand(1);
    auto* identities = qp6->add_subcommand("identities", "verify the printed identities");
    add_engine_flags(identities);
    auto* orbit = qp6->add_subcommand("orbit", "iterate the alternating dynamics");
    int steps = 100;
    std::string params_path, order = "c2-first", out_path;
    orbit->add_option("--steps", steps, "number of single applications")
        ->check(CLI::NonNegativeNumber);
    orbit->add_option("--params", params_path, "parameter JSON file");
    orbit->add_option("--order", order, "which transformation acts first")
        ->check(CLI::IsMember({"c1-first", "c2-first"}));
    orbit->add_option("--out", out_path, "trajectory file (.csv or .json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json err;
        err["error"] = {{"code", "Usage"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }

    SimplifyOptions opts;
    opts.gcd_threshold = simplify_threshold;
    opts.fast_path = fast_path != "off";

    try {
        if (*classify) {
            std::cout << classify_type(toric_from_json(load_json_file(input_path))) << "\n";
            return 0;
        }
        if (*nullroot) {
            emit(nullroot_report(toric_from_json(load_json_file(input_path)), extra_subdivision));
            return 0;
        }
        if (*polygon) {
            ToricData d = toric_from_json(load_json_file(input_path));
            Fan2D fan = smooth_complete_fan(d);
            if (extra_subdivision) fan = star_subdivide(fan);
            BoundaryData bd = boundary_data(d, fan);
            FanoPolygon p = fano_polygon(d, null_root(d, bd));
            Json j = polygon_json(p);
            j["plot"] = render_polygon(p);
            emit(j);
            return 0;
        }
        if (*seed_from) {
            emit(toric_json(seed_from_polygon(polygon_from_json(load_json_file(input_path)))));
            return 0;
        }
        if (*mutate) {
            Seed s = seed_from_json(load_json_file(input_path));
            ClusterWord w = word_from_json(s, load_json_file(word_path));
            emit(seed_json(word_target(w)));
            return 0;
        }
        if (*verify) {
            bool ok = false;
            emit(label_report(label, opts, ok));
            return ok ? 0 : 1;
        }
        if (*verify_all) {
            if (labels.empty()) labels = catalog_labels();
            Json results = Json::array();
            bool ok = true;
            for (const auto& l : labels) {
                bool one = false;
                results.push_back(label_report(l, opts, one));
                ok = ok && one;
            }
            Json j;
            j["results"] = std::move(results);
            j["passed"] = ok;
            emit(j);
            return ok ? 0 : 1;
        }
        if (*identities) {
            auto rows = verify_qp6_identities(build_qp6_context(), opts);
            Json j;
            j["checks"] = checks_json(rows);
            j["passed"] = all_passed(rows);
            emit(j);
            return all_passed(rows) ? 0 : 1;
        }
        if (*orbit) {
            return run_qp6_orbit(steps, params_path, order, out_path);
        }
    } catch (const Error& e) {
        Json err;
        err["error"] = {{"code", e.code()}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
    return 2;
}
