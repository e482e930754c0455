#include "l2euler/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace l2euler {

using nlohmann::json;

namespace {

IVec parse_ivec(const json& j, const char* what)
{
    if (!j.is_array()) throw InputError(std::string("expected integer array for ") + what);
    IVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(std::string("non-integer entry in ") + what);
        v.push_back(x.get<long long>());
    }
    return v;
}

IMat parse_imat(const json& j, const char* what)
{
    if (!j.is_array()) throw InputError(std::string("expected integer matrix for ") + what);
    IMat m;
    for (const auto& row : j) m.push_back(parse_ivec(row, what));
    return m;
}

QuotientSpec parse_quotient(const json& j, const Presentation& p)
{
    if (j.is_string()) {
        if (j.get<std::string>() != "abelianization")
            throw InputError("unknown quotient shorthand: " + j.get<std::string>());
        return abelianization_quotient(p);
    }
    if (!j.is_object()) throw InputError("quotient must be an object or \"abelianization\"");
    const std::string kind = j.value("kind", "");
    QuotientSpec q;
    if (kind == "abelian") {
        q.kind = QuotientKind::Abelian;
        if (!j.contains("rank")) throw InputError("abelian quotient requires \"rank\"");
        q.rank = j.at("rank").get<int>();
        if (!j.contains("images")) throw InputError("quotient requires \"images\"");
        for (const auto& img : j.at("images"))
            q.images.push_back(GroupElem{parse_ivec(img, "abelian image"), 0});
    } else if (kind == "polyZ") {
        q.kind = QuotientKind::PolyZ;
        if (!j.contains("k")) throw InputError("polyZ quotient requires \"k\"");
        q.rank = j.at("k").get<int>();
        q.twist_matrix = j.contains("twist") ? parse_imat(j.at("twist"), "twist")
                                             : imat_identity(static_cast<std::size_t>(q.rank));
        if (!j.contains("images")) throw InputError("quotient requires \"images\"");
        for (const auto& img : j.at("images")) {
            if (!img.is_object() || !img.contains("v") || !img.contains("m"))
                throw InputError("polyZ image must be {\"v\": [...], \"m\": int}");
            q.images.push_back(
                GroupElem{parse_ivec(img.at("v"), "polyZ image"), img.at("m").get<long long>()});
        }
    } else {
        throw InputError("quotient kind must be \"abelian\" or \"polyZ\"");
    }
    return q;
}

PhiSpec parse_phi(const json& j, const QuotientSpec& q)
{
    if (q.kind == QuotientKind::Abelian) {
        if (!j.is_array()) throw InputError("abelian phi must be an integer covector");
        return PhiSpec::abelian(parse_ivec(j, "phi"));
    }
    if (!j.is_object() || !j.contains("c"))
        throw InputError("polyZ phi must be {\"c\": int}");
    return PhiSpec::poly_z(j.at("c").get<long long>());
}

}  // namespace

PresentationFile parse_presentation_file(const std::string& json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    try {
        PresentationFile f;
        f.name = j.value("name", "");
        if (!j.contains("generators") || !j.contains("relators"))
            throw InputError("presentation requires \"generators\" and \"relators\"");
        for (const auto& g : j.at("generators")) f.presentation.generators.push_back(g.get<std::string>());
        for (const auto& r : j.at("relators"))
            f.presentation.relators.push_back(parse_word(r.get<std::string>(), f.presentation));
        f.presentation.validate();

        if (!j.contains("quotient")) throw InputError("presentation file requires \"quotient\"");
        f.quotient = parse_quotient(j.at("quotient"), f.presentation);
        if (!j.contains("phi")) throw InputError("presentation file requires \"phi\"");
        f.phi = parse_phi(j.at("phi"), f.quotient);

        if (j.contains("dual_generators")) {
            std::vector<FreeWord> duals;
            for (const auto& w : j.at("dual_generators"))
                duals.push_back(parse_word(w.get<std::string>(), f.presentation));
            f.dual_generators = std::move(duals);
        }
        if (j.contains("expected_norm")) f.expected_norm = j.at("expected_norm").get<long long>();
        if (j.contains("genus")) f.genus = j.at("genus").get<long long>();
        return f;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed presentation file: ") + e.what());
    }
}

PresentationFile load_presentation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_file(buf.str());
}

namespace {

json result_to_json(const EulerResult& r)
{
    json d;
    d["deleted_column"] = r.diag.deleted_column;
    if (r.diag.deleted_row >= 0) d["deleted_row"] = r.diag.deleted_row;
    d["diagonal_degrees"] = r.diag.diagonal_degrees;
    d["scaling_k"] = r.diag.scaling_k;
    d["image_index"] = r.diag.image_index;
    d["trivial_phi_branch"] = r.diag.trivial_phi_branch;
    if (!r.diag.sweep.empty()) {
        json sweep = json::array();
        for (const auto& s : r.diag.sweep)
            sweep.push_back({{"column", s[0]}, {"row", s[1]}, {"chi2", s[2]}});
        d["sweep"] = sweep;
    }
    json out;
    out["chi2"] = r.chi2;
    out["thurston_lower_bound"] = r.thurston_lower_bound;
    out["diagnostics"] = d;
    return out;
}

}  // namespace

std::string record_to_json(const RunRecord& r)
{
    json j;
    j["schema"] = "l2euler.record/1";
    j["input"] = r.input;
    j["command"] = r.command;
    j["ok"] = r.ok;
    if (r.result) j["result"] = result_to_json(*r.result);
    if (!r.ok) {
        j["error"] = {{"kind", r.error_kind}, {"message", r.error_message}};
    }
    j["wall_ms"] = r.wall_ms;
    j["version"] = library_version();
    if (!r.extra.empty()) j["extra"] = json::parse(r.extra);
    return j.dump();
}

std::string reemit_record(const std::string& line)
{
    try {
        return json::parse(line).dump();
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid record line: ") + e.what());
    }
}

std::string library_version() { return "0.1.0"; }

}  // namespace l2euler
