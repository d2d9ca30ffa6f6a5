#include "rotorsym/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rotorsym/transforms.hpp"

namespace rotorsym::domain {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config error at " + (path.empty() ? "/" : path) + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::vector<double> get_number_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(get_number(j[i], path + "/" + std::to_string(i)));
    return v;
}

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) fail(path + "/" + key, "unknown key");
    }
}

FourierProfile parse_profile(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, path, {"c0", "cos_coeffs", "sin_coeffs"});
    FourierProfile g;
    if (j.contains("c0")) g.c0 = get_number(j["c0"], path + "/c0");
    if (j.contains("cos_coeffs"))
        g.cos_coeffs = get_number_array(j["cos_coeffs"], path + "/cos_coeffs");
    if (j.contains("sin_coeffs"))
        g.sin_coeffs = get_number_array(j["sin_coeffs"], path + "/sin_coeffs");
    return g;
}

int get_exponent(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<int>() < 0)
        fail(path, "expected a nonnegative integer exponent");
    return j.get<int>();
}

// Reads the constant/linear/rate keys; callers reject foreign keys.
DriftCoefficient parse_drift(const json& j, const std::string& path) {
    expect_object(j, path);
    DriftCoefficient c;
    if (j.contains("constant")) c.constant = get_number(j["constant"], path + "/constant");
    if (j.contains("rate")) c.rate = parse_profile(j["rate"], path + "/rate");
    // "linear" adds a plain linear-in-t term, i.e. a constant rate.
    if (j.contains("linear")) c.rate.c0 += get_number(j["linear"], path + "/linear");
    return c;
}

VectorPotentialPtr parse_vector_potential(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, path, {"rotational", "radial_drift", "gradient_drift", "uniform"});
    std::vector<VectorPotentialPtr> parts;
    if (j.contains("rotational"))
        parts.push_back(make_rotational(parse_profile(j["rotational"], path + "/rotational")));
    if (j.contains("radial_drift")) {
        const std::string dpath = path + "/radial_drift";
        expect_object(j["radial_drift"], dpath);
        reject_unknown_keys(j["radial_drift"], dpath, {"constant", "linear", "rate"});
        parts.push_back(make_radial_drift(parse_drift(j["radial_drift"], dpath)));
    }
    if (j.contains("gradient_drift")) {
        const json& arr = j["gradient_drift"];
        const std::string apath = path + "/gradient_drift";
        if (!arr.is_array()) fail(apath, "expected an array of terms");
        std::vector<GradientTerm> terms;
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string tpath = apath + "/" + std::to_string(k);
            expect_object(arr[k], tpath);
            reject_unknown_keys(arr[k], tpath, {"i", "j", "constant", "linear", "rate"});
            GradientTerm g;
            if (!arr[k].contains("i") || !arr[k].contains("j"))
                fail(tpath, "missing exponent i or j");
            g.i = get_exponent(arr[k]["i"], tpath + "/i");
            g.j = get_exponent(arr[k]["j"], tpath + "/j");
            g.c = parse_drift(arr[k], tpath);
            terms.push_back(std::move(g));
        }
        parts.push_back(make_gradient_drift(std::move(terms)));
    }
    if (j.contains("uniform")) {
        const json& u = j["uniform"];
        const std::string upath = path + "/uniform";
        expect_object(u, upath);
        reject_unknown_keys(u, upath, {"direction", "poly"});
        if (!u.contains("direction")) fail(upath, "missing direction");
        auto dir = get_number_array(u["direction"], upath + "/direction");
        if (dir.size() != 2) fail(upath + "/direction", "expected exactly 2 components");
        std::vector<double> poly;
        if (u.contains("poly")) poly = get_number_array(u["poly"], upath + "/poly");
        parts.push_back(make_uniform(Vec2{dir[0], dir[1]}, std::move(poly)));
    }
    if (parts.empty()) return make_zero_potential();
    return make_potential_sum(std::move(parts));
}

ScalarPotentialPtr parse_scalar_potential(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, path, {"quadratic_isotropic", "polynomial"});
    std::vector<Monomial> terms;
    if (j.contains("quadratic_isotropic")) {
        const FourierProfile kappa =
            parse_profile(j["quadratic_isotropic"], path + "/quadratic_isotropic");
        const FourierProfile half = profile_scale(-0.5, kappa);
        terms.push_back({2, 0, half});
        terms.push_back({0, 2, half});
    }
    if (j.contains("polynomial")) {
        const json& arr = j["polynomial"];
        const std::string apath = path + "/polynomial";
        if (!arr.is_array()) fail(apath, "expected an array of monomials");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string tpath = apath + "/" + std::to_string(k);
            expect_object(arr[k], tpath);
            reject_unknown_keys(arr[k], tpath, {"i", "j", "coeff"});
            Monomial m;
            if (!arr[k].contains("i") || !arr[k].contains("j"))
                fail(tpath, "missing exponent i or j");
            m.i = get_exponent(arr[k]["i"], tpath + "/i");
            m.j = get_exponent(arr[k]["j"], tpath + "/j");
            if (arr[k].contains("coeff"))
                m.coeff = parse_profile(arr[k]["coeff"], tpath + "/coeff");
            terms.push_back(std::move(m));
        }
    }
    return make_polynomial_scalar(std::move(terms));
}

std::optional<Box> parse_domain_hint(const json& j, const std::string& path) {
    expect_object(j, path);
    reject_unknown_keys(j, path, {"min", "max"});
    if (!j.contains("min") || !j.contains("max")) fail(path, "needs both min and max");
    auto lo = get_number_array(j["min"], path + "/min");
    auto hi = get_number_array(j["max"], path + "/max");
    if (lo.size() != 2 || hi.size() != 2)
        fail(path, "min and max must have exactly 2 components");
    if (!(lo[0] < hi[0]) || !(lo[1] < hi[1])) fail(path, "min must be below max");
    Box b;
    b.lo = {lo[0], lo[1]};
    b.hi = {hi[0], hi[1]};
    return b;
}

} // namespace

ProblemSpec parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
    }
    expect_object(j, "");
    reject_unknown_keys(j, "",
                        {"preset", "omega", "vector_potential", "scalar_potential", "domain_hint"});

    ProblemSpec spec;
    if (j.contains("preset")) {
        if (j.contains("vector_potential") || j.contains("scalar_potential"))
            fail("", "give either a preset or explicit potentials, not both");
        if (!j["preset"].is_string()) fail("/preset", "expected a string");
        const std::string name = j["preset"].get<std::string>();
        if (name != "merry-go-round")
            fail("/preset", "unknown preset \"" + name + "\"; known presets: merry-go-round");
        FourierProfile omega;
        if (j.contains("omega")) omega = parse_profile(j["omega"], "/omega");
        spec = transforms::make_merry_go_round(omega);
    } else {
        if (j.contains("omega")) fail("/omega", "only valid together with a preset");
        if (!j.contains("vector_potential") && !j.contains("scalar_potential"))
            fail("", "expected a preset or vector_potential/scalar_potential");
        spec.potential = j.contains("vector_potential")
                             ? parse_vector_potential(j["vector_potential"], "/vector_potential")
                             : make_zero_potential();
        spec.scalar = j.contains("scalar_potential")
                          ? parse_scalar_potential(j["scalar_potential"], "/scalar_potential")
                          : make_zero_scalar();
    }
    if (j.contains("domain_hint"))
        spec.domain_hint = parse_domain_hint(j["domain_hint"], "/domain_hint");
    return spec;
}

ProblemSpec load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config error: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace rotorsym::domain
