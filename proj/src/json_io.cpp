#include "braidcover/json_io.hpp"

namespace braidcover {

void to_json(json& j, const BraidWord& w) {
    j = json{{"strands", w.strands()}, {"letters", w.letters()}};
}

void from_json(const json& j, BraidWord& w) {
    w = BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
}

void to_json(json& j, const LaurentPoly& p) {
    j = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        j.push_back(json::array({it->first, it->second.str()}));
}

void from_json(const json& j, LaurentPoly& p) {
    p = LaurentPoly();
    for (const auto& pair : j)
        p += LaurentPoly(BigInt(pair.at(1).get<std::string>()), pair.at(0).get<int>());
}

void to_json(json& j, const IntMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
        entries.push_back(std::move(row));
    }
    j = json{{"ring", "int"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void to_json(json& j, const PolyMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            json cell;
            to_json(cell, m.at(i, c));
            row.push_back(std::move(cell));
        }
        entries.push_back(std::move(row));
    }
    j = json{{"ring", "laurent"},
             {"rows", m.rows()},
             {"cols", m.cols()},
             {"entries", std::move(entries)}};
}

void from_json(const json& j, IntMatrix& m) {
    if (j.at("ring").get<std::string>() != "int")
        throw DomainError("expected an integer matrix");
    IntMatrix r(j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& entries = j.at("entries");
    for (int i = 0; i < r.rows(); ++i)
        for (int c = 0; c < r.cols(); ++c)
            r.at(i, c) = BigInt(entries.at(i).at(c).get<std::string>());
    m = std::move(r);
}

void from_json(const json& j, PolyMatrix& m) {
    if (j.at("ring").get<std::string>() != "laurent")
        throw DomainError("expected a Laurent matrix");
    PolyMatrix r(j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& entries = j.at("entries");
    for (int i = 0; i < r.rows(); ++i)
        for (int c = 0; c < r.cols(); ++c) {
            LaurentPoly p;
            from_json(entries.at(i).at(c), p);
            r.at(i, c) = std::move(p);
        }
    m = std::move(r);
}

void to_json(json& j, const FdtcEstimate& e) {
    j = json{{"lower", e.lower.str()},
             {"upper", e.upper.str()},
             {"pinned", e.pinned ? json(e.pinned->str()) : json(nullptr)},
             {"power_used", e.power_used}};
}

void to_json(json& j, const Page& p) {
    j = json{{"strands", p.strands},
             {"genus", p.genus},
             {"boundary_components", p.boundary_components},
             {"euler_characteristic", p.euler_characteristic}};
}

void to_json(json& j, const OpenBookReport& r) {
    j = json{{"word", r.word},
             {"page", r.page},
             {"binding_connected", r.binding_connected},
             {"stein_witness", r.stein},
             {"fdtc_cover", r.fdtc_cover ? json(*r.fdtc_cover) : json(nullptr)},
             {"h1_order", r.h1 ? json(r.h1->str()) : json(nullptr)}};
}

void to_json(json& j, const DeterminantTableRow& r) {
    j = json{{"k", r.k},
             {"det_beta_n_m", r.det_a.str()},
             {"det_beta_m_n", r.det_b.str()},
             {"predicted", r.predicted.str()},
             {"pass", r.pass}};
}

void to_json(json& j, const Theorem12Report& r) {
    j = json{{"k", r.k},
             {"high_genus", r.high_genus},
             {"low_genus", r.low_genus},
             {"alexander_high", r.alexander_high},
             {"alexander_low", r.alexander_low},
             {"genus_ok", r.genus_ok},
             {"both_stein", r.both_stein},
             {"equal_determinant", r.equal_determinant},
             {"equal_alexander", r.equal_alexander},
             {"pass", r.pass}};
    j["fdtc_expected_high"] = r.fdtc_expected_high ? json(r.fdtc_expected_high->str()) : json(nullptr);
    j["fdtc_expected_low"] = r.fdtc_expected_low ? json(r.fdtc_expected_low->str()) : json(nullptr);
    j["fdtc_consistent"] = r.fdtc_consistent ? json(*r.fdtc_consistent) : json(nullptr);
}

} // namespace braidcover
