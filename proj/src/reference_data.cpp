#include "symtri/reference_data.hpp"

#include <nlohmann/json.hpp>

#include "reference_tables_embed.inc"

namespace symtri {

namespace {

std::vector<BigInt> big_row(const nlohmann::json& j) {
    std::vector<BigInt> out;
    for (const auto& v : j) out.emplace_back(v.get<std::string>());
    return out;
}

ReferenceTables load() {
    const auto doc = nlohmann::json::parse(kReferenceTablesJson);
    ReferenceTables t;
    t.version = doc.at("version").get<int>();
    t.d_max = static_cast<int>(doc.at("d").size());
    const auto& t1 = doc.at("table1");
    t.L2 = big_row(t1.at("L2"));
    t.F_half = big_row(t1.at("F_half"));
    t.F_tilde = big_row(t1.at("F_tilde"));
    t.split_upper = big_row(t1.at("split_upper"));
    const auto& t2 = doc.at("table2");
    t.l2 = t2.at("l2").get<std::vector<std::string>>();
    t.f_half = t2.at("f_half").get<std::vector<std::string>>();
    t.f_tilde = t2.at("f_tilde").get<std::vector<std::string>>();
    t.log_split_upper = t2.at("split_upper").get<std::vector<std::string>>();
    t.u = t2.at("u").get<std::vector<std::string>>();
    const auto& fit = doc.at("regression");
    t.fit_a = fit.at("a").get<double>();
    t.fit_b = fit.at("b").get<double>();
    t.fit_c = fit.at("c").get<double>();
    return t;
}

}  // namespace

std::optional<BigInt> ReferenceTables::F_half_at(int d) const {
    if (d < 1 || d > d_max) return std::nullopt;
    return F_half[static_cast<std::size_t>(d - 1)];
}

std::optional<BigInt> ReferenceTables::F_tilde_at(int d) const {
    if (d < 1 || d > d_max) return std::nullopt;
    return F_tilde[static_cast<std::size_t>(d - 1)];
}

const ReferenceTables& reference_tables() {
    static const ReferenceTables tables = load();
    return tables;
}

const char* reference_tables_json() { return kReferenceTablesJson; }

}  // namespace symtri
