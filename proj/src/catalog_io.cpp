#include "ybe/catalog_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ybe/parallel.hpp"

namespace ybe {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json solution_to_json(const Solution& s) {
    ordered_json j;
    j["n"] = s.n;
    ordered_json sig = ordered_json::array();
    ordered_json tau = ordered_json::array();
    for (int x = 0; x < s.n; ++x) {
        sig.push_back(s.sigma[x].images());
        tau.push_back(s.tau[x].images());
    }
    j["sigma"] = std::move(sig);
    j["tau"] = std::move(tau);
    return j;
}

Solution solution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("sigma") || !j.contains("tau"))
        throw std::invalid_argument("solution JSON must have fields n, sigma, tau");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("solution JSON: n must be an integer");
    int n = j["n"].get<int>();
    auto table = [&](const char* key) {
        const json& t = j.at(key);
        if (!t.is_array())
            throw std::invalid_argument(std::string("solution JSON: ") + key + " must be an array of rows");
        std::vector<std::vector<int>> rows;
        for (const json& r : t) {
            if (!r.is_array())
                throw std::invalid_argument(std::string("solution JSON: ") + key + " rows must be arrays");
            std::vector<int> row;
            for (const json& v : r) {
                if (!v.is_number_integer())
                    throw std::invalid_argument(std::string("solution JSON: ") + key + " entries must be integers");
                row.push_back(v.get<int>());
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    return make_solution(n, table("sigma"), table("tau"));
}

Solution load_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return solution_from_json(j);
}

ordered_json report_to_json(const ClassificationReport& r) {
    ordered_json j;
    j["braid"] = r.braid;
    j["involutive"] = r.involutive;
    j["square_free"] = r.square_free;
    j["lri"] = r.lri;
    j["left_distributive"] = r.left_distributive;
    j["right_distributive"] = r.right_distributive;
    j["two_reductive"] = r.two_reductive;
    j["two_permutational"] = r.two_permutational;
    j["irretractable"] = r.irretractable;
    if (r.mpl)
        j["mpl"] = *r.mpl;
    else
        j["mpl"] = nullptr;
    j["dis_abelian"] = r.dis_abelian;
    return j;
}

namespace {

ClassificationReport report_from_json(const json& j) {
    ClassificationReport r;
    r.braid = j.at("braid").get<bool>();
    r.involutive = j.at("involutive").get<bool>();
    r.square_free = j.at("square_free").get<bool>();
    r.lri = j.at("lri").get<bool>();
    r.left_distributive = j.at("left_distributive").get<bool>();
    r.right_distributive = j.at("right_distributive").get<bool>();
    r.two_reductive = j.at("two_reductive").get<bool>();
    r.two_permutational = j.at("two_permutational").get<bool>();
    r.irretractable = j.at("irretractable").get<bool>();
    if (!j.at("mpl").is_null())
        r.mpl = j.at("mpl").get<int>();
    r.dis_abelian = j.at("dis_abelian").get<bool>();
    return r;
}

} // namespace

void compute_flags(Catalog& cat, int jobs) {
    parallel_for_index(cat.entries.size(), jobs, [&](size_t i) {
        if (!cat.entries[i].flags)
            cat.entries[i].flags = classify_solution(cat.entries[i].sol);
    });
}

std::string catalog_to_jsonl(const Catalog& cat) {
    std::string out;
    {
        ordered_json hdr;
        hdr["schema"] = 1;
        hdr["n"] = cat.n;
        hdr["class"] = cat.cls;
        hdr["count"] = cat.count();
        out += hdr.dump();
        out += '\n';
    }
    for (const CatalogEntry& e : cat.entries) {
        ordered_json j;
        j["solution"] = solution_to_json(e.sol);
        j["flags"] = report_to_json(e.flags ? *e.flags : classify_solution(e.sol));
        ordered_json prov;
        if (e.base_index)
            prov["base_index"] = *e.base_index;
        else
            prov["base_index"] = nullptr;
        prov["pi1"] = e.pi1.cycles();
        prov["pi2"] = e.pi2.cycles();
        j["provenance"] = std::move(prov);
        out += j.dump();
        out += '\n';
    }
    return out;
}

Catalog catalog_from_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("catalog stream is empty");
    json hdr = json::parse(line);
    if (!hdr.contains("schema") || hdr["schema"].get<int>() != 1)
        throw std::invalid_argument("catalog header: unsupported schema");
    Catalog cat;
    cat.n = hdr.at("n").get<int>();
    cat.cls = hdr.at("class").get<std::string>();
    long long declared = hdr.at("count").get<long long>();
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        json j = json::parse(line);
        CatalogEntry e;
        e.sol = solution_from_json(j.at("solution"));
        e.flags = report_from_json(j.at("flags"));
        const json& prov = j.at("provenance");
        if (!prov.at("base_index").is_null())
            e.base_index = prov.at("base_index").get<int>();
        e.pi1 = Perm::from_cycles(cat.n, prov.at("pi1").get<std::string>());
        e.pi2 = Perm::from_cycles(cat.n, prov.at("pi2").get<std::string>());
        cat.entries.push_back(std::move(e));
    }
    if (declared != cat.count())
        throw std::invalid_argument("catalog count does not match entry lines");
    return cat;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    return catalog_from_jsonl(in);
}

} // namespace ybe
