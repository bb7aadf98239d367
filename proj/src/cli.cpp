#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cjt/carlson.hpp"
#include "cjt/cli.hpp"
#include "cjt/constant.hpp"
#include "cjt/json_io.hpp"
#include "cjt/zoo.hpp"

namespace cjt {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::int64_t to_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InputError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw InputError("expected an integer, got '" + s + "'");
    return v;
}

std::vector<std::int64_t> int_list(const std::string& s) {
    std::string t = s;
    for (auto& c : t)
        if (c == ':' || c == ';' || c == '[' || c == ']') c = ',';
    std::vector<std::int64_t> out;
    for (const auto& x : split(t, ',')) out.push_back(to_int(x));
    return out;
}

// "[1:0]"-style point with integer element codes, plus tails "e1,e2=c".
PiPoint parse_point(const FieldPtr& f, std::size_t r, const std::string& spec, const std::vector<std::string>& tails) {
    auto coords = int_list(spec);
    if (coords.size() != r) throw InputError("point needs " + std::to_string(r) + " coordinates");
    std::vector<Elem> lin;
    for (auto c : coords) {
        if (c < 0 || c >= std::int64_t(f->q())) throw InputError("point coordinate outside the field");
        lin.push_back(Elem(c));
    }
    std::vector<PiPoint::Term> tail;
    for (const auto& t : tails) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw InputError("tail term must look like 'e1,e2=c'");
        std::vector<std::uint32_t> exps;
        for (auto e : int_list(t.substr(0, eq))) {
            if (e < 0) throw InputError("negative tail exponent");
            exps.push_back(std::uint32_t(e));
        }
        std::int64_t c = to_int(t.substr(eq + 1));
        if (c < 0 || c >= std::int64_t(f->q())) throw InputError("tail coefficient outside the field");
        tail.emplace_back(exps, Elem(c));
    }
    try {
        return make_point(f, lin, tail);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

void render(const Json& j, std::ostream& out, int indent) {
    std::string pad(std::size_t(indent) * 2, ' ');
    auto scalar_list = [](const Json& a) {
        for (const auto& x : a)
            if (x.is_structured() && !(x.is_array() && x.size() <= 8)) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !scalar_list(v))) {
                out << pad << k << ":\n";
                render(v, out, indent + 1);
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                out << pad << "-\n";
                render(v, out, indent + 1);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

Json error_object(const char* kind, const std::string& msg) { return {{"error", {{"kind", kind}, {"message", msg}}}}; }

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jordan types of modules over elementary abelian p-groups", "cjt"};
    app.require_subcommand(1);
    bool pretty = false, allow_large = false;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
    app.add_option("--jobs", jobs, "Worker threads for point sweeps (default: CJT_JOBS or 1)");
    app.add_option("--seed", seed, "Seed for randomised steps");
    app.add_flag("--allow-large", allow_large, "Accept modules above the dimension soft cap");

    std::string module_path, point_spec, a_path, b_path, poly_path, name, degrees, classes, convention = "primitive";
    std::vector<std::string> tails, params;
    unsigned ext = 1, max_ext = 2, minor = 0;
    bool exact = false, type_only = false;
    std::int64_t p = 5, rank = 2, n = 1;

    auto* jordan = app.add_subcommand("jordan", "Jordan type at a point");
    jordan->add_option("--module", module_path, "Module JSON")->required();
    jordan->add_option("--point", point_spec, "Coordinates, e.g. 1,0 (element codes)")->required();
    jordan->add_option("--tail", tails, "Higher-order term e1,e2=c (repeatable)");
    jordan->add_option("--ext", ext, "Extension degree of the point field");

    auto* check = app.add_subcommand("check", "Constant Jordan type test");
    check->add_option("--module", module_path, "Module JSON")->required();
    check->add_flag("--exact-rank2", exact, "Decide exactly via minor gcds when r = 2");
    check->add_option("--max-ext", max_ext, "Largest extension degree swept");

    auto* gamma = app.add_subcommand("gamma", "Points of non-maximal Jordan type");
    gamma->add_option("--module", module_path, "Module JSON")->required();
    gamma->add_option("--ext", ext, "Extension degree");

    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of modules or Jordan types");
    tensor_cmd->add_option("--a", a_path, "First module (or type with --type-only)")->required();
    tensor_cmd->add_option("--b", b_path, "Second module (or type with --type-only)")->required();
    tensor_cmd->add_flag("--type-only", type_only, "Inputs are Jordan types");

    auto* omega = app.add_subcommand("omega", "Heller shift of the trivial module");
    omega->add_option("--p", p, "Characteristic")->required();
    omega->add_option("--rank", rank, "Number of generators r")->required();
    omega->add_option("--n", n, "Shift (any integer)")->required();
    omega->add_option("--convention", convention, "primitive or group");

    auto* carlson = app.add_subcommand("carlson", "Kernel of a sum of cocycles");
    carlson->add_option("--p", p, "Characteristic")->required();
    carlson->add_option("--rank", rank, "Number of generators r")->required();
    carlson->add_option("--degrees", degrees, "Class degrees, e.g. 2,2")->required();
    carlson->add_option("--classes", classes, "Class tags coord:i, basis:j or vanishing (default coord)");
    carlson->add_option("--max-ext", max_ext, "Largest extension degree for the hypothesis sweep");

    auto* endo = app.add_subcommand("endotrivial", "Endotriviality test");
    endo->add_option("--module", module_path, "Module JSON")->required();
    endo->add_option("--max-ext", max_ext, "Largest extension degree for the local test");

    auto* ranks = app.add_subcommand("ranks-search", "Common zero of the k x k minors");
    ranks->add_option("--poly", poly_path, "Polynomial matrix JSON")->required();
    ranks->add_option("--minor", minor, "Minor size (default: number of columns)");
    ranks->add_option("--max-ext", max_ext, "Largest extension degree");

    auto* zoo = app.add_subcommand("zoo", "Emit an example module");
    zoo->add_option("--name", name, "TRUNCATED, KE_MOD_I2, W, V, JBLOCK or RANDOM")->required();
    zoo->add_option("--param", params, "key=value (repeatable), e.g. r=2");
    zoo->add_option("--p", p, "Characteristic");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        out << error_object("usage", e.what()).dump() << "\n";
        return kExitError;
    }

    Json result;
    int code = kExitOk;
    try {
        auto load = [&](const std::string& path) { return module_from_json(read_json_file(path), allow_large); };
        if (jordan->parsed()) {
            ModuleRep m = load(module_path);
            FieldPtr f = m.field->is_prime() ? make_field(m.p(), ext) : m.field;
            PiPoint q = parse_point(f, m.r, point_spec, tails);
            JordanType t = jordan_at(m, q);
            result = {{"point", to_json(q)}, {"type", t.pretty()}, {"jordan_type", to_json(t)}};
        } else if (check->parsed()) {
            ModuleRep m = load(module_path);
            CheckOptions opt;
            opt.exact = exact;
            opt.max_e = max_ext;
            opt.jobs = jobs;
            CjtReport rep = check_constant(m, opt);
            result = to_json(rep);
            if (rep.verdict == Verdict::NOT_CONSTANT) code = kExitFinding;
        } else if (gamma->parsed()) {
            GammaLocus g = gamma_locus(load(module_path), ext, jobs);
            result = to_json(g);
            if (!g.points.empty()) code = kExitFinding;
        } else if (tensor_cmd->parsed()) {
            if (type_only) {
                JordanType a = jordan_from_json(read_json_file(a_path)), b = jordan_from_json(read_json_file(b_path));
                result = to_json(tensor_type(a, b));
            } else {
                result = to_json(tensor(load(a_path), load(b_path)));
            }
        } else if (omega->parsed()) {
            if (rank < 1) throw InputError("rank must be at least 1");
            FieldPtr f = make_field(std::uint64_t(p), 1);
            ModulePtr m = omega_k(f, std::size_t(rank), int(n), parse_convention(convention));
            std::uint64_t expect = omega_dim_formula(f->p(), std::size_t(rank), int(n));
            if (m->dim != expect) throw std::logic_error("dimension " + std::to_string(m->dim) + " differs from " + std::to_string(expect));
            result = to_json(*m);
        } else if (carlson->parsed()) {
            if (rank < 1) throw InputError("rank must be at least 1");
            FieldPtr f = make_field(std::uint64_t(p), 1);
            std::size_t r = std::size_t(rank);
            auto degs = int_list(degrees);
            auto tags = split(classes, ',');
            if (!tags.empty() && tags.size() != degs.size()) throw InputError("need one class tag per degree");
            std::vector<CocycleClass> cls;
            for (std::size_t i = 0; i < degs.size(); ++i) {
                int d = int(degs[i]);
                if (d < 1) throw InputError("class degrees must be positive");
                std::string tag = tags.empty() ? "coord:" + std::to_string(i % r + 1) : tags[i];
                if (tag.rfind("coord:", 0) == 0) {
                    std::int64_t k = to_int(tag.substr(6));
                    if (k < 1 || k > rank) throw InputError("coordinate index out of range");
                    cls.push_back(coordinate_class(f, r, d, std::size_t(k - 1)));
                } else if (tag.rfind("basis:", 0) == 0) {
                    auto basis = cohomology_basis(f, r, d);
                    std::int64_t k = to_int(tag.substr(6));
                    if (k < 1 || std::size_t(k) > basis.size()) throw InputError("basis index out of range");
                    cls.push_back(basis[std::size_t(k - 1)]);
                } else if (tag == "vanishing") {
                    cls.push_back(rationally_vanishing_class(f, r, d));
                } else {
                    throw InputError("unknown class tag '" + tag + "'");
                }
            }
            std::vector<Matrix> row;
            std::vector<ModuleRep> sources;
            for (const auto& c : cls) {
                row.push_back(c.carrier);
                sources.push_back(*c.source);
            }
            auto k = kernel_of_hom_matrix({row}, sources, {trivial_module(f, r)}, max_ext);
            Json cj = Json::array();
            for (const auto& c : cls) cj.push_back({{"degree", c.degree}, {"tag", c.tag}, {"source_dim", c.source->dim}});
            result = {{"dim", k.kernel.module.dim},
                      {"classes", cj},
                      {"hypothesis", to_json(k.hypothesis)},
                      {"module", to_json(k.kernel.module)}};
            if (!k.hypothesis.holds) code = kExitFinding;
        } else if (endo->parsed()) {
            EndotrivialReport rep = endotrivial_check(load(module_path), max_ext, jobs);
            if (rep.global != rep.local)
                throw std::logic_error("global and local endotriviality tests disagree");
            result = to_json(rep);
            if (!rep.verdict) code = kExitFinding;
        } else if (ranks->parsed()) {
            PolyMatrix pm;
            try {
                pm = polymatrix_from_json(read_json_file(poly_path));
            } catch (const Json::exception& e) {
                throw InputError(e.what());
            }
            std::size_t k = minor ? minor : pm.cols;
            ZeroSearchResult z = common_zero_search(pm, k, max_ext);
            Json pt = Json::array();
            if (z.found)
                for (auto c : z.point) pt.push_back(element_to_json(*z.field, c));
            result = {{"found", z.found}, {"minor", k}, {"exhausted", z.exhausted}};
            if (z.found) {
                result["point"] = pt;
                result["field"] = {{"p", z.field->p()}, {"e", z.field->e()}};
            } else {
                code = kExitFinding;
            }
        } else if (zoo->parsed()) {
            std::map<std::string, std::int64_t> kv{{"p", p}, {"seed", std::int64_t(seed)}};
            for (const auto& s : params) {
                auto eq = s.find('=');
                if (eq == std::string::npos) throw InputError("parameter must look like key=value");
                kv[s.substr(0, eq)] = to_int(s.substr(eq + 1));
            }
            result = to_json(build_example(name, kv));
        }
    } catch (const InputError& e) {
        out << error_object("input", e.what()).dump() << "\n";
        return kExitError;
    } catch (const std::invalid_argument& e) {
        out << error_object("input", e.what()).dump() << "\n";
        return kExitError;
    } catch (const Json::exception& e) {
        out << error_object("input", e.what()).dump() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        out << error_object("failure", e.what()).dump() << "\n";
        return kExitError;
    }
    if (pretty)
        render(result, out, 0);
    else
        out << result.dump() << "\n";
    return code;
}

}  // namespace cjt
