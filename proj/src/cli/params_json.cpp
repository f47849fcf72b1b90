#include "hopfk/cli.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace hopfk::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("parameter file: " + what); }

long get_long(const json& j, const char* key) {
    if (!j.contains(key)) schema_error(std::string("missing \"") + key + "\"");
    if (!j[key].is_number_integer()) schema_error(std::string("\"") + key + "\" must be an integer");
    return j[key].get<long>();
}

Integer to_integer(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) schema_error("bad integer string " + j.dump());
        return v;
    }
    schema_error("expected an integer, got " + j.dump());
}

json from_integer(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

std::vector<long> long_list(const json& j, const char* key) {
    if (!j.contains(key)) schema_error(std::string("missing \"") + key + "\"");
    const json& v = j[key];
    if (v.is_number_integer()) return {v.get<long>()};
    if (!v.is_array()) schema_error(std::string("\"") + key + "\" must be an array");
    std::vector<long> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) schema_error(std::string("\"") + key + "\" entries must be integers");
        out.push_back(e.get<long>());
    }
    return out;
}

std::vector<CycloScalar> scalar_list(const json& j, const char* key) {
    if (!j.contains(key)) schema_error(std::string("missing \"") + key + "\"");
    const json& v = j[key];
    if (!v.is_array()) return {scalar_from_json(v)};
    std::vector<CycloScalar> out;
    for (const auto& e : v) out.push_back(scalar_from_json(e));
    return out;
}

}  // namespace

CycloScalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return CycloScalar(j.get<long>());
    if (!j.is_object() || !j.contains("L")) schema_error("scalar must be an integer or an object with \"L\"");
    const long L = get_long(j, "L");
    if (L < 1 || L > 100000) schema_error("root order out of range");
    if (j.contains("k")) return make_root(static_cast<int>(L), get_long(j, "k"));
    if (!j.contains("poly") || !j["poly"].is_array()) schema_error("scalar needs \"k\" or \"poly\"");
    CycloScalar out(0);
    long e = 0;
    for (const auto& c : j["poly"]) {
        Rational r;
        if (c.is_array() && c.size() == 2) {
            const Integer den = to_integer(c[1]);
            if (den == 0) schema_error("zero denominator");
            r = Rational(to_integer(c[0]), den);
            r.canonicalize();
        } else {
            r = Rational(to_integer(c));
        }
        if (r != 0) out += CycloScalar(r) * make_root(static_cast<int>(L), e);
        ++e;
    }
    return out;
}

json scalar_to_json(const CycloScalar& a) {
    json poly = json::array();
    for (const auto& c : a.coeffs()) poly.push_back(json::array({from_integer(c.get_num()), from_integer(c.get_den())}));
    return json{{"L", a.conductor()}, {"poly", poly}};
}

KParams ParamsFile::k_params() const {
    if (k) return *k;
    if (b) return b->expand();
    throw std::invalid_argument("family " + family + " has no K parameters");
}

HopfPresentation ParamsFile::presentation() const {
    if (family == "K") return HopfPresentation::k_family(*k);
    if (family == "B") return HopfPresentation::b_family(*b);
    if (family == "A") return HopfPresentation::a_family(n, q);
    return HopfPresentation::c_family(n);
}

ParamsFile params_from_json(const json& j) {
    if (!j.is_object()) schema_error("top level must be an object");
    if (!j.contains("family") || !j["family"].is_string()) schema_error("missing \"family\"");
    ParamsFile f;
    f.family = j["family"].get<std::string>();
    if (f.family == "K") {
        KParams k;
        k.M = get_long(j, "M");
        k.p = long_list(j, "p");
        k.s = j.contains("s") ? static_cast<int>(get_long(j, "s")) : static_cast<int>(k.p.size());
        if (j.contains("n")) k.n = long_list(j, "n");
        else k = KParams::from_p(k.M, k.p, {}, {});
        k.q = scalar_list(j, "q");
        k.alpha = scalar_list(j, "alpha");
        if (j.contains("s")) k.s = static_cast<int>(get_long(j, "s"));
        const std::size_t s = static_cast<std::size_t>(k.s);
        if (k.s < 1 || k.p.size() != s || k.n.size() != s || k.q.size() != s || k.alpha.size() != s)
            schema_error("n, p, q and alpha must all have s entries");
        f.k = std::move(k);
    } else if (f.family == "B") {
        BParams b;
        const auto n = long_list(j, "n");
        if (n.size() != 1) schema_error("B takes a single n");
        b.n = n[0];
        b.p = long_list(j, "p");
        const auto q = scalar_list(j, "q");
        if (q.size() != 1) schema_error("B takes a single q");
        b.q = q[0];
        b.alpha = scalar_list(j, "alpha");
        if (j.contains("s") && get_long(j, "s") != static_cast<long>(b.p.size())) schema_error("s disagrees with p");
        if (b.p.empty() || b.alpha.size() != b.p.size()) schema_error("p and alpha must have the same length");
        for (long pi : b.p)
            if (pi < 1) schema_error("p entries must be positive");
        f.b = std::move(b);
    } else if (f.family == "A" || f.family == "C") {
        const auto n = long_list(j, "n");
        if (n.size() != 1) schema_error(f.family + " takes a single n");
        f.n = n[0];
        if (f.family == "A") {
            const auto q = scalar_list(j, "q");
            if (q.size() != 1) schema_error("A takes a single q");
            f.q = q[0];
        }
    } else {
        schema_error("unknown family \"" + f.family + "\"");
    }
    return f;
}

json params_to_json(const KParams& k) {
    json q = json::array(), alpha = json::array();
    for (const auto& v : k.q) q.push_back(scalar_to_json(v));
    for (const auto& v : k.alpha) alpha.push_back(scalar_to_json(v));
    return json{{"family", "K"}, {"s", k.s}, {"M", k.M}, {"n", k.n}, {"p", k.p}, {"q", q}, {"alpha", alpha}};
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

}  // namespace hopfk::cli
