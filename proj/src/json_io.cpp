#include <stdexcept>

#include "cjt/json_io.hpp"

namespace cjt {

Json element_to_json(const Field& f, Elem a) {
    if (f.is_prime()) return a;
    return f.coeffs(a);
}

Elem element_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (!f.is_prime() && (v < 0 || v >= std::int64_t(f.p())))
            throw std::invalid_argument("extension-field entries must be coefficient arrays");
        return f.from_int(v);
    }
    if (j.is_array()) {
        std::vector<std::uint32_t> c;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw std::invalid_argument("field coefficients must be integers");
            std::int64_t v = x.get<std::int64_t>();
            if (v < 0 || v >= std::int64_t(f.p())) throw std::invalid_argument("field coefficient out of range");
            c.push_back(std::uint32_t(v));
        }
        return f.from_coeffs(c);
    }
    throw std::invalid_argument("field element must be an integer or a coefficient array");
}

Json to_json(const Matrix& m) {
    Json entries = Json::array();
    for (auto a : m.data) entries.push_back(element_to_json(m.F(), a));
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

namespace {

// Flat row-major list or list of rows.
Matrix read_entries(const FieldPtr& f, std::size_t rows, std::size_t cols, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix entries must be an array");
    Matrix m(f, rows, cols);
    auto is_element = [&](const Json& x) {
        if (f->is_prime()) return x.is_number_integer();
        return x.is_array() && (x.empty() || x[0].is_number_integer());
    };
    bool flat = j.size() == rows * cols && (j.empty() || is_element(j[0]));
    if (!flat) {
        if (j.size() != rows) throw std::invalid_argument("matrix has the wrong number of rows");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix row has the wrong length");
            for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(*f, j[i][k]);
        }
    } else {
        if (j.size() != rows * cols) throw std::invalid_argument("matrix has the wrong number of entries");
        for (std::size_t k = 0; k < rows * cols; ++k) m.data[k] = element_from_json(*f, j[k]);
    }
    return m;
}

std::size_t get_size(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() < 0)
        throw std::invalid_argument(std::string("missing or invalid '") + key + "'");
    return j[key].get<std::size_t>();
}

}  // namespace

Matrix matrix_from_json(const FieldPtr& f, const Json& j) {
    return read_entries(f, get_size(j, "rows"), get_size(j, "cols"), j.at("entries"));
}

Json to_json(const ModuleRep& m) {
    Json gens = Json::array();
    for (const auto& g : m.gens) {
        Json e = Json::array();
        for (auto a : g.data) e.push_back(element_to_json(m.F(), a));
        gens.push_back(e);
    }
    return {{"p", m.p()},
            {"e", m.F().e()},
            {"modulus", m.F().modulus()},
            {"r", m.r},
            {"dim", m.dim},
            {"convention", to_string(m.convention)},
            {"generators", gens}};
}

ModuleRep module_from_json(const Json& j, bool allow_large) {
    if (!j.is_object()) throw std::invalid_argument("module must be a JSON object");
    std::size_t p = get_size(j, "p");
    std::size_t e = j.contains("e") ? get_size(j, "e") : 1;
    FieldPtr f = make_field(p, std::int64_t(e));
    if (j.contains("modulus")) {
        auto mod = j["modulus"].get<std::vector<std::uint32_t>>();
        if (mod != f->modulus())
            throw std::invalid_argument("modulus does not match the canonical modulus for GF(" + std::to_string(p) + "^" +
                                        std::to_string(e) + ")");
    }
    std::size_t r = get_size(j, "r"), dim = get_size(j, "dim");
    if (dim > kModuleDimSoftCap && !allow_large)
        throw std::invalid_argument("module dimension " + std::to_string(dim) + " exceeds the soft cap " +
                                    std::to_string(kModuleDimSoftCap));
    Convention c = j.contains("convention") ? parse_convention(j["convention"].get<std::string>()) : Convention::PRIMITIVE;
    const Json& gj = j.at("generators");
    if (!gj.is_array() || gj.size() != r) throw std::invalid_argument("expected " + std::to_string(r) + " generators");
    std::vector<Matrix> gens;
    for (const auto& g : gj) gens.push_back(read_entries(f, dim, dim, g));
    ModuleRep m;
    m.field = f;
    m.r = r;
    m.dim = dim;
    m.gens = std::move(gens);
    m.convention = c;
    auto rep = validate(m);
    if (!rep.ok) throw std::invalid_argument("invalid module: " + rep.message);
    return m;
}

Json to_json(const JordanType& t) { return {{"p", t.p}, {"counts", t.counts}, {"pretty", t.pretty()}}; }

JordanType jordan_from_json(const Json& j) {
    if (j.is_string()) throw std::invalid_argument("Jordan type needs a cap p");
    auto p = j.at("p").get<std::uint32_t>();
    auto counts = j.at("counts").get<std::vector<std::uint64_t>>();
    return JordanType(p, counts);
}

Json to_json(const HomPoly& h) {
    Json out = Json::array();
    for (const auto& [key, c] : h.terms) out.push_back({{"exps", h.unpack(key)}, {"coef", c}});
    return out;
}

Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols; ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return {{"p", m.p}, {"nvars", m.nvars}, {"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

namespace {

HomPoly poly_from_json(std::uint32_t p, std::uint32_t nvars, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of terms");
    std::vector<std::pair<std::vector<std::uint32_t>, std::int64_t>> terms;
    for (const auto& t : j) {
        auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
        if (exps.size() != nvars) throw std::invalid_argument("term has the wrong number of exponents");
        terms.emplace_back(exps, t.at("coef").get<std::int64_t>());
    }
    return HomPoly::from_terms(p, nvars, terms);
}

}  // namespace

PolyMatrix polymatrix_from_json(const Json& j) {
    std::uint32_t p = std::uint32_t(get_size(j, "p")), nvars = std::uint32_t(get_size(j, "nvars"));
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (nvars < 1 || nvars > HomPoly::kMaxVars) throw std::invalid_argument("nvars must be between 1 and 4");
    std::size_t rows = get_size(j, "rows"), cols = get_size(j, "cols");
    PolyMatrix m(p, nvars, rows, cols);
    const Json& e = j.at("entries");
    if (!e.is_array()) throw std::invalid_argument("entries must be an array");
    // A grid is a list of rows whose members are term lists (arrays); a flat list has term lists directly.
    bool grid = e.size() == rows && rows > 0 && e[0].is_array() && (e[0].empty() || e[0][0].is_array());
    if (grid) {
        for (std::size_t i = 0; i < rows; ++i) {
            if (!e[i].is_array() || e[i].size() != cols) throw std::invalid_argument("entry row has the wrong length");
            for (std::size_t k = 0; k < cols; ++k) m(i, k) = poly_from_json(p, nvars, e[i][k]);
        }
    } else {
        if (e.size() != rows * cols) throw std::invalid_argument("wrong number of entries");
        for (std::size_t k = 0; k < rows * cols; ++k) m.entries[k] = poly_from_json(p, nvars, e[k]);
    }
    return m;
}

Json to_json(const PiPoint& q) {
    Json lin = Json::array();
    for (auto c : q.linear) lin.push_back(element_to_json(*q.field, c));
    Json tail = Json::array();
    for (const auto& [exps, c] : q.tail) tail.push_back({{"exps", exps}, {"coef", element_to_json(*q.field, c)}});
    Json out = {{"p", q.field->p()}, {"e", q.field->e()}, {"linear", lin}, {"label", q.to_string()}};
    if (!q.tail.empty()) out["tail"] = tail;
    return out;
}

namespace {

Json witnesses_json(const std::vector<Witness>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back({{"point", to_json(w.point)}, {"type", w.type.pretty()}, {"counts", w.type.counts}});
    return out;
}

}  // namespace

Json to_json(const CjtReport& r) {
    Json out = {{"verdict", to_string(r.verdict)},
                {"type", r.type.pretty()},
                {"jordan_type", to_json(r.type)},
                {"witnesses", witnesses_json(r.witnesses)},
                {"method", to_string(r.method)},
                {"extensions", r.extensions}};
    if (!r.ranks.empty()) {
        out["generic_ranks"] = r.ranks;
        Json g = Json::array();
        for (const auto& h : r.gcds) g.push_back(h.to_string());
        out["minor_gcds"] = g;
    }
    return out;
}

Json to_json(const GammaLocus& g) {
    return {{"generic", g.generic.pretty()}, {"jordan_type", to_json(g.generic)}, {"points", witnesses_json(g.points)}};
}

Json to_json(const CocycleClass& c) {
    return {{"degree", c.degree}, {"carrier", to_json(c.carrier)}, {"source_dim", c.source->dim}, {"tag", c.tag}};
}

Json to_json(const HypothesisReport& h) {
    Json pts = Json::array();
    for (const auto& q : h.failing) pts.push_back(to_json(q));
    return {{"holds", h.holds}, {"failing", pts}, {"extensions", h.extensions}};
}

Json to_json(const EndotrivialReport& e) {
    return {{"verdict", e.verdict},          {"global", e.global}, {"local", e.local},
            {"free_rank", e.free_rank},      {"core_dim", e.core_dim},
            {"points", witnesses_json(e.points)}, {"extensions", e.extensions}};
}

}  // namespace cjt
