#include "cychb/io_json.hpp"

namespace cychb {

ojson field_to_json(Field f) {
    ojson j;
    if (f.is_rational()) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.characteristic();
    }
    return j;
}

Field field_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(j.at("p").get<std::uint64_t>());
    throw std::invalid_argument("field_from_json: unknown kind \"" + kind + "\"");
}

ojson poly_to_json(const Poly& p) {
    ojson j = ojson::array();
    for (int i = 0; i <= p.degree(); ++i) j.push_back(p.coeff(i).str());
    return j;
}

Poly poly_from_json(Field f, Var v, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of coefficient strings");
    std::vector<FieldElem> c;
    for (const auto& e : j) {
        if (e.is_string())
            c.push_back(FieldElem::from_string(f, e.get<std::string>()));
        else if (e.is_number_integer())
            c.push_back(FieldElem::of(f, e.get<std::int64_t>()));
        else
            throw std::invalid_argument("poly_from_json: coefficients must be strings or integers");
    }
    return Poly::from_coeffs(f, v, std::move(c));
}

ojson tpoly_to_json(const TPoly& p) {
    ojson j = ojson::array();
    for (int i = 0; i <= p.deg_t(); ++i) j.push_back(poly_to_json(p.tcoeff(i)));
    return j;
}

TPoly tpoly_from_json(Field f, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("tpoly_from_json: expected an array of polynomials");
    std::vector<Poly> c;
    for (const auto& e : j) c.push_back(poly_from_json(f, Var::x, e));
    return TPoly::from_tcoeffs(f, std::move(c));
}

ojson pmat_to_json(const PMat& m) {
    ojson j = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(i, c)));
        j.push_back(std::move(row));
    }
    return j;
}

PMat pmat_from_json(Field f, const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("pmat_from_json: expected a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    PMat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("pmat_from_json: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = poly_from_json(f, Var::x, j.at(i).at(c));
    }
    return m;
}

ojson higgs_to_json(const CyclicHiggsData& H) {
    ojson j;
    j["m"] = H.m;
    j["field"] = field_to_json(H.field);
    j["dims"] = H.dims;
    ojson phi = ojson::array();
    for (const auto& p : H.phi) phi.push_back(pmat_to_json(p));
    j["phi"] = std::move(phi);
    return j;
}

CyclicHiggsData higgs_from_json(const nlohmann::json& j) {
    CyclicHiggsData H;
    H.m = j.at("m").get<int>();
    H.field = field_from_json(j.at("field"));
    H.dims = j.at("dims").get<std::vector<int>>();
    for (const auto& p : j.at("phi")) H.phi.push_back(pmat_from_json(H.field, p));
    H.validate();
    return H;
}

ojson spectral_data_to_json(const SpectralData& SD) {
    ojson j;
    j["field"] = field_to_json(SD.field);
    j["m"] = SD.m;
    j["c"] = tpoly_to_json(SD.c);
    j["L0"] = ojson{{"rank", SD.L0.rank}, {"T", pmat_to_json(SD.L0.T)}};
    ojson divs = ojson::array();
    for (const auto& d : SD.divisors) divs.push_back(pmat_to_json(d.lattice));
    j["divisors"] = std::move(divs);
    return j;
}

SpectralData spectral_data_from_json(const nlohmann::json& j) {
    SpectralData SD;
    SD.field = field_from_json(j.at("field"));
    SD.m = j.at("m").get<int>();
    SD.c = tpoly_from_json(SD.field, j.at("c"));
    SD.L0.rank = j.at("L0").at("rank").get<int>();
    SD.L0.T = pmat_from_json(SD.field, j.at("L0").at("T"));
    for (const auto& d : j.at("divisors")) {
        EffectiveDivisor div;
        div.lattice = pmat_from_json(SD.field, d);
        div.length = 0;
        for (std::size_t i = 0; i < div.lattice.rows(); ++i) div.length += std::max(div.lattice.at(i, i).degree(), 0);
        SD.divisors.push_back(std::move(div));
    }
    return SD;
}

ojson path_elem_to_json(const PathElem& a) {
    ojson j;
    j["m"] = a.m();
    j["field"] = field_to_json(a.field());
    ojson terms = ojson::array();
    for (const auto& [p, c] : a.terms()) {
        ojson term;
        term["source"] = p.src;
        term["target"] = p.target(a.m());
        term["length"] = p.len;
        term["coeff"] = poly_to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

PathElem path_elem_from_json(const nlohmann::json& j) {
    const Field f = field_from_json(j.at("field"));
    const int m = j.at("m").get<int>();
    PathElem a(f, m);
    for (const auto& term : j.at("terms")) {
        const Path p{term.at("source").get<int>(), term.at("length").get<int>()};
        if (term.contains("target") && term.at("target").get<int>() != p.target(m))
            throw std::invalid_argument("path_elem_from_json: inconsistent target");
        a += PathElem::path(f, m, p, poly_from_json(f, Var::x, term.at("coeff")));
    }
    return a;
}

ojson reduced_elem_to_json(const ReducedElem& a) {
    ojson j;
    j["m"] = a.m();
    j["field"] = field_to_json(a.field());
    ojson terms = ojson::array();
    for (int i = 0; i < a.m(); ++i)
        for (int k = 0; k < a.m(); ++k) {
            if (a.coeff(i, k).is_zero()) continue;
            ojson term;
            term["target"] = i;
            term["source"] = k;
            term["coeff"] = tpoly_to_json(a.coeff(i, k));
            terms.push_back(std::move(term));
        }
    j["terms"] = std::move(terms);
    return j;
}

ojson table_algebra_to_json(const TableAlgebra& alg) {
    ojson j;
    j["dim"] = alg.dim;
    j["field"] = field_to_json(alg.field);
    j["names"] = alg.names;
    ojson table = ojson::array();
    for (std::size_t a = 0; a < alg.dim; ++a) {
        ojson row = ojson::array();
        for (std::size_t b = 0; b < alg.dim; ++b) {
            ojson vec = ojson::array();
            for (std::size_t k = 0; k < alg.dim; ++k) vec.push_back(alg.table[a][b][k].str());
            row.push_back(std::move(vec));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

} // namespace cychb
