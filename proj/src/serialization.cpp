#include "orbifold/serialization.hpp"

#include <istream>
#include <ostream>

namespace orbifold {

Json to_json(GroupAlgebraElement const& x) { return Json(std::vector<Scalar>(x.coeffs().begin(), x.coeffs().end())); }

GroupAlgebraElement element_from_json(Json const& j, Prime p)
{
    if (j.is_string()) return parse_element(j.get<std::string>(), p);
    if (j.is_object()) {
        if (!j.contains("coeffs")) throw Error("element object needs a \"coeffs\" field");
        if (j.contains("p") && j.at("p").get<int>() != p.value()) throw MismatchedPrime(p.value(), j.at("p").get<int>());
        return element_from_json(j.at("coeffs"), p);
    }
    if (!j.is_array()) throw Error("expected a coefficient array or an element string");
    std::vector<std::int64_t> coeffs;
    for (auto const& c : j) {
        if (!c.is_number_integer()) throw Error("coefficients must be integers");
        coeffs.push_back(c.get<std::int64_t>());
    }
    return GroupAlgebraElement(p, coeffs);
}

Json to_json(VGroupElement const& x) { return Json{{"v1", to_json(x.row(0))}, {"v2", to_json(x.row(1))}}; }

Json to_json(DeformationParams const& params)
{
    Json lambda = Json::array();
    for (int i = 0; i < params.p(); ++i) lambda.push_back(Json::array({to_json(params.lambda(i, 0)), to_json(params.lambda(i, 1))}));
    return Json{{"p", params.p()},
                {"lambda", lambda},
                {"kappaC", to_json(params.kappa_c())},
                {"kappaL", to_json(params.kappa_l())}};
}

DeformationParams params_from_json(Json const& j)
{
    try {
        if (!j.is_object()) throw Error("parameters must be a JSON object");
        const Prime p(j.at("p").get<int>());
        DeformationParams params(p);
        auto const& lambda = j.at("lambda");
        if (!lambda.is_array() || static_cast<int>(lambda.size()) != p.value())
            throw Error("\"lambda\" must list p rows [lambda(g^i, v1), lambda(g^i, v2)]");
        for (int i = 0; i < p.value(); ++i) {
            auto const& row = lambda.at(static_cast<std::size_t>(i));
            if (!row.is_array() || row.size() != 2) throw Error("each \"lambda\" row needs two entries");
            params.lambda(i, 0) = element_from_json(row.at(0), p);
            params.lambda(i, 1) = element_from_json(row.at(1), p);
        }
        if (j.contains("kappaC")) params.kappa_c() = element_from_json(j.at("kappaC"), p);
        if (j.contains("kappaL")) {
            auto const& kl = j.at("kappaL");
            params.kappa_l() = VGroupElement(element_from_json(kl.at("v1"), p), element_from_json(kl.at("v2"), p));
        }
        return params;
    } catch (Json::exception const& e) {
        throw Error(std::string("malformed parameter JSON: ") + e.what());
    }
}

DeformationParams load_params(std::istream& in)
{
    Json j;
    try {
        j = Json::parse(in);
    } catch (Json::parse_error const& e) {
        throw Error(std::string("malformed parameter JSON: ") + e.what());
    }
    return params_from_json(j);
}

Json to_json(ConditionReport const& report)
{
    Json conditions = Json::array();
    for (auto const& c : report.conditions) {
        Json witnesses = Json::array();
        for (auto const& w : c.witnesses)
            witnesses.push_back(Json{{"group_exponents", w.group_exponents},
                                     {"basis_vectors", w.basis_vectors},
                                     {"residual", to_string(w.residual)}});
        Json entry{{"condition", c.condition}, {"passed", c.passed}, {"witnesses", witnesses}};
        if (!c.note.empty()) entry["note"] = c.note;
        conditions.push_back(std::move(entry));
    }
    return Json{{"passed", report.passed()}, {"conditions", conditions}};
}

Json to_json(AssociativityResult const& result)
{
    Json j{{"passed", result.passed}, {"triples_checked", result.triples_checked}};
    if (result.witness) {
        auto const& w = *result.witness;
        j["witness"] = Json{{"x", to_string(w.x)},
                            {"y", to_string(w.y)},
                            {"z", to_string(w.z)},
                            {"(xy)z", to_string(w.left)},
                            {"x(yz)", to_string(w.right)}};
    }
    return j;
}

Json to_json(DimensionResult const& result)
{
    return Json{{"passed", result.passed},
                {"idempotent", result.idempotent},
                {"counts", result.counts},
                {"expected", result.expected}};
}

Json to_json(ChainMapReport const& report)
{
    Json checks = Json::array();
    for (auto const& c : report.checks) {
        Json entry{{"identity", c.identity}, {"degree", c.degree}, {"passed", c.passed}};
        if (!c.passed) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    return Json{{"p", report.p}, {"max_degree", report.max_degree}, {"passed", report.passed()}, {"checks", checks}};
}

Json records_to_json(Prime p, std::vector<SolutionRecord> const& records)
{
    Json out = Json::array();
    for (auto const& r : records) {
        Json kernel = Json::array();
        for (auto const& k : r.kernel_basis) kernel.push_back(to_json(k));
        Json solutions = Json::array();
        for (auto const& s : r.solutions) solutions.push_back(Json{{"c", to_json(s.c)}, {"a", to_json(s.a)}});
        out.push_back(Json{{"b", to_json(r.b)}, {"k", r.k}, {"kernel", kernel}, {"solutions", solutions}});
    }
    return Json{{"p", p.value()}, {"records", out}};
}

Json census_to_json(Prime p, std::vector<CensusRow> const& rows)
{
    Json out = Json::array();
    for (auto const& r : rows)
        out.push_back(Json{{"k", r.k}, {"b_class_size", r.b_class_size}, {"a_class_size_per_b", r.a_class_size_per_b}});
    return Json{{"p", p.value()}, {"census", out}};
}

void write_solutions_csv(std::ostream& out, std::vector<SolutionRecord> const& records)
{
    out << "b,a\n";
    for (auto const& r : records)
        for (auto const& s : r.solutions) out << '"' << to_string(r.b) << "\",\"" << to_string(s.a) << "\"\n";
}

namespace {

std::string join(std::vector<GroupAlgebraElement> const& xs)
{
    std::string out;
    for (auto const& x : xs) {
        if (!out.empty()) out += "; ";
        out += to_string(x);
    }
    return out;
}

}  // namespace

void write_table_text(std::ostream& out, Prime p, std::vector<TableRow> const& rows)
{
    for (auto const& row : rows) {
        out << "k=" << row.k << " | b: " << join(row.bs) << " | a: ";
        if (row.k == p.value())
            out << "F_" << p.value() << "G (all " << row.as.size() << " elements)";
        else
            out << join(row.as);
        out << '\n';
    }
}

Json table_to_json(Prime p, std::vector<TableRow> const& rows)
{
    Json out = Json::array();
    for (auto const& row : rows) {
        Json bs = Json::array();
        for (auto const& b : row.bs) bs.push_back(to_json(b));
        Json as = Json::array();
        for (auto const& a : row.as) as.push_back(to_json(a));
        out.push_back(Json{{"k", row.k}, {"b", bs}, {"a", as}});
    }
    return Json{{"p", p.value()}, {"rows", out}};
}

}  // namespace orbifold
