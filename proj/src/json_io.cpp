#include "qpcluster/json_io.hpp"

#include <fstream>
#include <limits>

#include "qpcluster/error.hpp"

namespace qpc {

namespace {

[[noreturn]] void bad(const std::string& message) { fail("BadInput", message); }

bool fits_json_int(const Int& v) {
    static const Int lo(std::numeric_limits<std::int64_t>::min());
    static const Int hi(std::numeric_limits<std::int64_t>::max());
    return v >= lo && v <= hi;
}

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        bad("not an integer: \"" + s + "\"");
    }
}

int small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

long long long_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long long>();
}

Vec2 vec2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("a plane vector must be a pair of integers");
    return {long_int(j[0], "a coordinate"), long_int(j[1], "a coordinate")};
}

Json vec2_json(const Vec2& v) { return Json::array({v[0], v[1]}); }

QMat qmat_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.empty()) bad(std::string(what) + " must be a nonempty matrix");
    int rows = int(j.size());
    int cols = int(j[0].is_array() ? j[0].size() : 0);
    if (cols == 0) bad(std::string(what) + " must be a matrix of rows");
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[size_t(i)].is_array() || int(j[size_t(i)].size()) != cols)
            bad(std::string(what) + " has rows of unequal length");
        for (int k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(j[size_t(i)][size_t(k)]);
    }
    return m;
}

int sign_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "+") return 1;
        if (s == "-") return -1;
    }
    bad("sign must be \"+\" or \"-\"");
}

} // namespace

Json int_json(const Int& v) {
    if (fits_json_int(v)) return Json(std::int64_t(v.get_si()));
    return Json(v.get_str());
}

Json rat_json(const Rat& r) {
    if (r.get_den() == 1) return int_json(Int(r.get_num()));
    return Json(r.get_num().get_str() + "/" + r.get_den().get_str());
}

Json zvec_json(const ZVec& v) {
    Json a = Json::array();
    for (const Int& c : v) a.push_back(int_json(c));
    return a;
}

Json zmat_json(const ZMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json qmat_json(const QMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(int_from_string(s));
        Int num = int_from_string(s.substr(0, slash));
        Int den = int_from_string(s.substr(slash + 1));
        if (den == 0) bad("zero denominator in \"" + s + "\"");
        Rat r(num);
        r /= Rat(den);
        return r;
    }
    bad("expected an integer or a \"p/q\" string");
}

Int int_from_json(const Json& j) {
    Rat r = rat_from_json(j);
    if (r.get_den() != 1) bad("expected an integer, got " + j.dump());
    return Int(r.get_num());
}

Seed seed_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lambda")) bad("a seed needs a \"lambda\" matrix");
    QMat lambda = qmat_from_json(j.at("lambda"), "lambda");

    std::vector<int> labels;
    if (j.contains("labels")) {
        for (const auto& l : j.at("labels")) labels.push_back(small_int(l, "a label"));
    }
    std::optional<QMat> n_basis;
    if (j.contains("n_basis")) n_basis = qmat_from_json(j.at("n_basis"), "n_basis");

    Seed s = initial_seed(new_fixed_data(std::move(lambda), std::move(n_basis), std::move(labels)));
    if (j.contains("basis")) {
        QMat basis = qmat_from_json(j.at("basis"), "basis");
        if (!basis.is_integral()) bad("a seed basis must be integral");
        s.basis = basis.to_z();
        if (!s.basis.is_unimodular()) bad("a seed basis must be unimodular");
    }
    return s;
}

Json seed_json(const Seed& s) {
    Json j;
    j["labels"] = s.fd->labels;
    j["lambda"] = qmat_json(s.fd->lambda);
    if (s.fd->has_finer_lattice) j["n_basis"] = qmat_json(s.fd->n_basis);
    j["basis"] = zmat_json(s.basis);
    j["exchange"] = zmat_json(exchange_matrix(s));
    return j;
}

ClusterWord word_from_json(const Seed& source, const Json& j) {
    if (!j.is_array()) bad("a word must be a list of steps");
    ClusterWord w{source, {}};
    const FixedData& fd = *source.fd;
    for (const auto& step : j) {
        if (!step.is_object() || step.size() != 1)
            bad("each step must be a single-key object: \"mut\" or \"iso\"");
        if (step.contains("mut")) {
            const auto& m = step.at("mut");
            if (!m.contains("k") || !m.contains("sign")) bad("\"mut\" needs \"k\" and \"sign\"");
            int k = position_of(fd, small_int(m.at("k"), "a direction label"));
            w.steps.push_back(MutStep{k, sign_from_json(m.at("sign"))});
        } else if (step.contains("iso")) {
            const auto& iso = step.at("iso");
            if (!iso.contains("perm") || !iso.contains("sign"))
                bad("\"iso\" needs \"perm\" and \"sign\"");
            const auto& pj = iso.at("perm");
            if (!pj.is_array() || pj.size() != fd.labels.size())
                bad("\"perm\" must list the image label of every index");
            std::vector<int> perm;
            perm.reserve(pj.size());
            for (const auto& l : pj)
                perm.push_back(position_of(fd, small_int(l, "a permutation label")));
            std::optional<ZMat> matrix;
            if (iso.contains("matrix")) {
                QMat m = qmat_from_json(iso.at("matrix"), "an isomorphism matrix");
                if (!m.is_integral()) bad("an isomorphism matrix must be integral");
                matrix = m.to_z();
            }
            w.steps.push_back(IsoStep{std::move(perm), sign_from_json(iso.at("sign")), std::move(matrix)});
        } else {
            bad("each step must be a single-key object: \"mut\" or \"iso\"");
        }
    }
    return w;
}

ToricData toric_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vectors")) bad("toric data needs a \"vectors\" list");
    ToricData d;
    for (const auto& v : j.at("vectors")) d.vectors.push_back(vec2_from_json(v));
    if (j.contains("orientation")) {
        d.orientation = small_int(j.at("orientation"), "the orientation");
        if (d.orientation != 1 && d.orientation != -1) bad("orientation must be 1 or -1");
    }
    return d;
}

Json toric_json(const ToricData& d) {
    Json j;
    Json vecs = Json::array();
    for (const Vec2& v : d.vectors) vecs.push_back(vec2_json(v));
    j["vectors"] = std::move(vecs);
    j["orientation"] = d.orientation;
    return j;
}

FanoPolygon polygon_from_json(const Json& j) {
    if (j.is_object() && j.contains("vertices")) {
        std::vector<Vec2> vs;
        for (const auto& v : j.at("vertices")) vs.push_back(vec2_from_json(v));
        return polygon_from_vertices(vs);
    }
    if (j.is_object() && j.contains("facets")) {
        std::vector<std::pair<Vec2, long long>> hp;
        for (const auto& f : j.at("facets")) {
            if (!f.is_object() || !f.contains("w") || !f.contains("c"))
                bad("each facet needs \"w\" and \"c\"");
            hp.emplace_back(vec2_from_json(f.at("w")), long_int(f.at("c"), "a facet height"));
        }
        return polygon_from_facets(hp);
    }
    bad("a polygon needs \"vertices\" or \"facets\"");
}

Json polygon_json(const FanoPolygon& p) {
    Json j;
    Json vs = Json::array();
    for (const Vec2& v : p.vertices) vs.push_back(vec2_json(v));
    j["vertices"] = std::move(vs);
    Json fs = Json::array();
    for (const Facet& f : p.facets) {
        Json fj;
        fj["w"] = vec2_json(f.w);
        fj["c"] = f.c;
        fj["l"] = f.l;
        fs.push_back(std::move(fj));
    }
    j["facets"] = std::move(fs);
    j["no_remainders"] = no_remainders(p);
    return j;
}

Json checks_json(const std::vector<CheckResult>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["check"] = r.check;
        row["status"] = r.passed ? "pass" : "fail";
        if (!r.passed) row["witness"] = r.witness;
        a.push_back(std::move(row));
    }
    return a;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) bad("invalid JSON in " + path);
    return j;
}

} // namespace qpc
