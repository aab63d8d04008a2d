#include "twchoose/json_io.hpp"

#include <cctype>
#include <cstdio>

#include "json.hpp"

namespace twc {
namespace {

using ordered_json = nlohmann::ordered_json;

bigint parse_bigint(const std::string& s) {
    if (s.empty()) throw parse_error("empty integer");
    size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (i == s.size()) throw parse_error("sign without digits: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("bad integer: '" + s + "'");
    return bigint(s);
}

std::string hash_to_hex(uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

uint64_t hash_from_hex(const std::string& s) {
    if (s.size() != 16) throw parse_error("graph hash must be 16 hex digits");
    uint64_t h = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw parse_error("graph hash must be lowercase hex");
        h = h << 4 | static_cast<uint64_t>(d);
    }
    return h;
}

ordered_json must_parse(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("malformed JSON");
    return j;
}

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw parse_error(std::string("missing field '") + name + "'");
    return *it;
}

int field_int(const ordered_json& j, const char* name) {
    const auto& f = field(j, name);
    if (!f.is_number_integer()) throw parse_error(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

rational json_rational(const ordered_json& v) {
    if (v.is_number_integer()) return rational(bigint(v.get<long long>()));
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    throw parse_error("rational values must be strings or integers");
}

std::vector<std::vector<rational>> json_list_table(const ordered_json& v, const char* name) {
    if (!v.is_array()) throw parse_error(std::string("'") + name + "' must be an array");
    std::vector<std::vector<rational>> out;
    for (const auto& row : v) {
        if (!row.is_array()) throw parse_error(std::string("'") + name + "' entries must be arrays");
        std::vector<rational> one;
        for (const auto& x : row) one.push_back(json_rational(x));
        out.push_back(std::move(one));
    }
    return out;
}

ordered_json rational_row(const std::vector<rational>& xs) {
    ordered_json a = ordered_json::array();
    for (const auto& x : xs) a.push_back(rational_to_string(x));
    return a;
}

}  // namespace

std::string rational_to_string(const rational& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rational(parse_bigint(s));
    bigint num = parse_bigint(s.substr(0, slash));
    bigint den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator: '" + s + "'");
    // boost::rational rejects negative denominators for unbounded integers
    // (its overflow guard compares against numeric_limits<cpp_int>::max(),
    // which is zero), so normalize the sign first.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return rational(num, den);
}

std::string certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["schema"] = 1;
    j["graph"] = {{"n", c.graph.n}, {"m", c.graph.m}, {"hash", hash_to_hex(c.graph.hash)}};
    j["method"] = c.method;
    j["p"] = c.p;
    j["residue"] = c.residue;
    j["eta"] = {{"vertices", c.eta.vertices}, {"edges", c.eta.edges}};
    ordered_json steps = ordered_json::array();
    for (const auto& t : c.trace)
        steps.push_back(ordered_json{{"step", t.step}, {"kind", t.kind}, {"detail", t.detail}});
    j["trace"] = std::move(steps);
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j = must_parse(text);
    if (!j.is_object()) throw parse_error("certificate must be a JSON object");
    if (field_int(j, "schema") != 1) throw parse_error("unsupported schema version");

    Certificate c;
    const auto& gj = field(j, "graph");
    c.graph.n = field_int(gj, "n");
    c.graph.m = field_int(gj, "m");
    const auto& hj = field(gj, "hash");
    if (!hj.is_string()) throw parse_error("graph hash must be a string");
    c.graph.hash = hash_from_hex(hj.get<std::string>());
    if (c.graph.n < 0 || c.graph.m < 0) throw parse_error("graph sizes must be nonnegative");

    const auto& mj = field(j, "method");
    if (!mj.is_string()) throw parse_error("method must be a string");
    c.method = mj.get<std::string>();

    long long p = field_int(j, "p");
    long long residue = field_int(j, "residue");
    if (p < 0 || p > 0x7fffffffLL) throw parse_error("modulus out of range");
    if (residue < 0 || residue > 0x7fffffffLL) throw parse_error("residue out of range");
    c.p = static_cast<uint32_t>(p);
    c.residue = static_cast<uint32_t>(residue);

    const auto& ej = field(j, "eta");
    const auto& vj = field(ej, "vertices");
    const auto& edj = field(ej, "edges");
    if (!vj.is_array() || !edj.is_array()) throw parse_error("eta parts must be arrays");
    for (const auto& x : vj) {
        if (!x.is_number_integer()) throw parse_error("eta entries must be integers");
        c.eta.vertices.push_back(x.get<int>());
    }
    for (const auto& x : edj) {
        if (!x.is_number_integer()) throw parse_error("eta entries must be integers");
        c.eta.edges.push_back(x.get<int>());
    }

    const auto& tj = field(j, "trace");
    if (!tj.is_array()) throw parse_error("trace must be an array");
    for (const auto& t : tj) {
        TraceStep st;
        st.step = field_int(t, "step");
        const auto& kj = field(t, "kind");
        const auto& dj = field(t, "detail");
        if (!kj.is_string() || !dj.is_string())
            throw parse_error("trace steps need string kind and detail");
        st.kind = kj.get<std::string>();
        st.detail = dj.get<std::string>();
        c.trace.push_back(std::move(st));
    }
    return c;
}

std::string lists_to_json(const ListAssignment& lists) {
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (const auto& row : lists.vertices) vs.push_back(rational_row(row));
    ordered_json es = ordered_json::array();
    for (const auto& row : lists.edges) es.push_back(rational_row(row));
    j["vertices"] = std::move(vs);
    j["edges"] = std::move(es);
    return j.dump(2) + "\n";
}

ListAssignment lists_from_json(const Graph& g, const std::string& text) {
    ordered_json j = must_parse(text);
    if (!j.is_object()) throw parse_error("list assignment must be a JSON object");
    auto vs = json_list_table(field(j, "vertices"), "vertices");
    auto es = json_list_table(field(j, "edges"), "edges");
    try {
        return make_lists(g, std::move(vs), std::move(es));
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        // shape and content checks reject the document, not the program state
        throw parse_error(e.what());
    }
}

std::string weighting_to_json(const Weighting& w) {
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (const auto& x : w.vertices) vs.push_back(rational_to_string(x));
    ordered_json es = ordered_json::array();
    for (const auto& x : w.edges) es.push_back(rational_to_string(x));
    j["vertices"] = std::move(vs);
    j["edges"] = std::move(es);
    return j.dump(2) + "\n";
}

Weighting weighting_from_json(const std::string& text) {
    ordered_json j = must_parse(text);
    if (!j.is_object()) throw parse_error("weighting must be a JSON object");
    const auto& vj = field(j, "vertices");
    const auto& ej = field(j, "edges");
    if (!vj.is_array() || !ej.is_array()) throw parse_error("weighting parts must be arrays");
    Weighting w;
    for (const auto& x : vj) w.vertices.push_back(json_rational(x));
    for (const auto& x : ej) w.edges.push_back(json_rational(x));
    return w;
}

}  // namespace twc
