#include "qlab/io.hpp"

#include <algorithm>
#include <fstream>

#include "qlab/error.hpp"

namespace qlab {

Quiver quiver_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("arrows"))
        throw UsageError("quiver document needs 'vertices' and 'arrows'");
    std::vector<std::string> ids;
    for (const json& v : doc.at("vertices")) {
        if (!v.is_string()) throw UsageError("quiver vertex ids must be strings");
        ids.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const json& a : doc.at("arrows")) {
        if (!a.is_array() || a.size() != 2) throw UsageError("quiver arrows must be [source, target] pairs");
        arrows.emplace_back(a.at(0).get<std::string>(), a.at(1).get<std::string>());
    }
    return {std::move(ids), std::move(arrows)};
}

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({q.vertex_ids()[static_cast<size_t>(a.source)],
                          q.vertex_ids()[static_cast<size_t>(a.target)]});
    return {{"vertices", q.vertex_ids()}, {"arrows", arrows}};
}

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open quiver file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw UsageError("bad quiver file '" + path + "': " + e.what());
    }
    return quiver_from_json(doc);
}

namespace {
template <class D, class Str>
json series_records(const TruncatedSeries<D>& s, Str&& to_str) {
    // std::map keys are already in lexicographic order
    json out = json::array();
    for (const auto& [d, c] : s.coeffs()) out.push_back({{"exponent", d}, {"coefficient", to_str(c)}});
    return out;
}
} // namespace

json series_to_json(const SeriesRF& s) {
    return series_records(s, [](const RationalFunction& c) { return c.str(); });
}

json series_to_json(const SeriesQ& s) {
    return series_records(s, [](const BigRational& c) { return c.str(); });
}

json kac_table_to_json(const KacTable& table) {
    std::vector<DimVector> keys;
    keys.reserve(table.polys.size());
    for (const auto& [d, poly] : table.polys) keys.push_back(d);
    std::stable_sort(keys.begin(), keys.end(), [](const DimVector& a, const DimVector& b) {
        const long ta = total(a), tb = total(b);
        return ta != tb ? ta < tb : a < b;
    });
    json out = json::array();
    for (const DimVector& d : keys) {
        const LaurentPoly& poly = table.polys.at(d);
        json coeffs = json::array();
        for (long k = 0; k <= poly.degree(); ++k) {
            const BigRational& c = poly.coeff(k);
            if (!c.is_integer()) throw CheckError("Kac polynomial with non-integer coefficient");
            coeffs.push_back(c.numerator().to_long());
        }
        out.push_back({{"dim", d}, {"poly", coeffs}});
    }
    return out;
}

DimVector parse_dim_list(const std::string& csv) {
    DimVector d;
    std::string cur;
    const auto flush = [&] {
        if (cur.empty()) throw UsageError("bad dimension list '" + csv + "'");
        try {
            d.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw UsageError("bad dimension list '" + csv + "'");
        }
        cur.clear();
    };
    for (char ch : csv) {
        if (ch == ',')
            flush();
        else
            cur += ch;
    }
    flush();
    return d;
}

} // namespace qlab
