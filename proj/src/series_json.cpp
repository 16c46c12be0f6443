#include "leviflat/series_json.hpp"

namespace leviflat {

Json rational_to_json(const GaussianRational& c) {
    return Json{{"re", c.re_str()}, {"im", c.im_str()}};
}

GaussianRational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw SeriesError("coefficient must be an object with re/im strings");
    if (!j["re"].is_string() || !j["im"].is_string())
        throw SeriesError("re/im must be rational strings like \"p/q\"");
    return GaussianRational::parse(j["re"].get<std::string>(), j["im"].get<std::string>());
}

Json series_to_json(const TruncatedSeries& s) {
    const auto& sp = *s.space();
    Json j;
    j["vars"] = sp.names();
    j["weights"] = sp.weights();
    Json pairs = Json::array();
    for (int i = 0; i < sp.dim(); ++i) {
        int p = sp.conjugate_of(i);
        if (p > i) pairs.push_back(Json::array({i, p}));
    }
    j["pairs"] = pairs;
    j["trunc"] = s.is_exact() ? -1 : s.trunc();
    Json terms = Json::array();
    for (const auto& [m, c] : s.terms()) {
        Json t;
        t["exp"] = m.exp;
        t["re"] = c.re_str();
        t["im"] = c.im_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = terms;
    return j;
}

SpacePtr space_from_json(const Json& j) {
    if (!j.contains("vars") || !j["vars"].is_array()) throw SeriesError("missing vars array");
    std::vector<std::string> names;
    for (const auto& v : j["vars"]) names.push_back(v.get<std::string>());
    auto sp = VariableSpace::make(names);
    if (j.contains("pairs")) {
        for (const auto& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 2) throw SeriesError("pair must be [i,j]");
            int a = p[0].get<int>(), b = p[1].get<int>();
            if (a < 0 || b < 0 || a >= sp->dim() || b >= sp->dim())
                throw SeriesError("pair index out of range");
            sp = sp->with_pair(sp->name(a), sp->name(b));
        }
    }
    if (j.contains("weights")) {
        const auto& w = j["weights"];
        if (!w.is_array() || static_cast<int>(w.size()) != sp->dim())
            throw SeriesError("weights length mismatch");
        for (int i = 0; i < sp->dim(); ++i) {
            int wi = w[i].get<int>();
            if (wi < 1) throw SeriesError("weights must be positive");
            if (wi != 1) sp = sp->with_weight(sp->name(i), wi);
        }
    }
    if (j.contains("real")) {
        for (const auto& r : j["real"]) sp = sp->with_real(r.get<std::string>());
    }
    return sp;
}

TruncatedSeries series_from_json(const Json& j) {
    auto sp = space_from_json(j);
    int trunc = TruncatedSeries::kExactTrunc;
    if (j.contains("trunc") && !j["trunc"].is_null()) {
        int t = j["trunc"].get<int>();
        if (t >= 0) trunc = t;
    }
    TruncatedSeries s = TruncatedSeries::zero(sp, trunc);
    if (j.contains("terms")) {
        for (const auto& t : j["terms"]) {
            if (!t.contains("exp")) throw SeriesError("term missing exp");
            std::vector<int> exp = t["exp"].get<std::vector<int>>();
            GaussianRational c = rational_from_json(t);
            if (static_cast<int>(exp.size()) != sp->dim()) throw SeriesError("exp length mismatch");
            Monomial m{exp};
            if (trunc != TruncatedSeries::kExactTrunc && m.degree() > trunc)
                throw SeriesError("term degree exceeds trunc");
            s += TruncatedSeries::monomial(sp, exp, c, trunc);
        }
    }
    return s;
}

}  // namespace leviflat
