// Command-line front end: verify / classify / isotope / sf-isotope /
// iso-check / enumerate / oracle / table.  Reports are JSON on stdout,
// diagnostics go to stderr.  Exit codes: 0 success, 1 failed check,
// 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybe/autgroup.hpp"
#include "ybe/catalog_io.hpp"
#include "ybe/classify.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/isotope.hpp"
#include "ybe/retract.hpp"

using nlohmann::json;
using nlohmann::ordered_json;
using namespace ybe;

namespace {

const std::vector<std::string> kClassNames = {"sf2r", "sf2r-inv", "2perm", "2perm-inv",
                                              "2red", "2red-inv", "perm"};

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + out_path);
    out << j.dump() << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

Perm parse_perm_arg(int n, const std::string& text) {
    bool letters = false;
    Perm p = Perm::from_cycles(n, text, &letters);
    if (letters)
        std::cerr << "note: letter points map to integers a=0, b=1, c=2, ...\n";
    return p;
}

int cmd_verify(const std::string& file) {
    ordered_json rep;
    json j;
    {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open file: " << file << "\n";
            return 2;
        }
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            std::cerr << "error: JSON parse failure: " << e.what() << "\n";
            return 2;
        }
    }
    Solution s;
    try {
        s = solution_from_json(j);
    } catch (const std::invalid_argument& e) {
        rep["well_formed"] = false;
        rep["error"] = e.what();
        std::cout << rep.dump() << "\n";
        return 1;
    }
    rep["n"] = s.n;
    rep["well_formed"] = true;
    rep["nondegenerate"] = true; // rows validated as bijections on load
    auto viol = braid_violation(s);
    rep["braid"] = !viol.has_value();
    if (viol) {
        ordered_json v;
        v["x"] = (*viol)[0];
        v["y"] = (*viol)[1];
        v["z"] = (*viol)[2];
        rep["violation"] = v;
    }
    std::cout << rep.dump() << "\n";
    return viol ? 1 : 0;
}

int cmd_classify(const std::string& file) {
    Solution s = load_solution_file(file);
    if (!check_braid(s)) {
        ordered_json rep;
        rep["braid"] = false;
        std::cout << rep.dump() << "\n";
        return 1;
    }
    std::cout << report_to_json(classify_solution(s)).dump() << "\n";
    return 0;
}

int cmd_isotope(const std::string& file, const std::string& pi1, const std::string& pi2,
                const std::string& out_path) {
    Solution s = load_solution_file(file);
    IsotopePair pair{parse_perm_arg(s.n, pi1), parse_perm_arg(s.n, pi2)};
    try {
        Solution iso = make_isotope(s, pair);
        emit(solution_to_json(iso), out_path);
        return 0;
    } catch (const std::invalid_argument& e) {
        ordered_json rep;
        rep["braid"] = false;
        rep["error"] = e.what();
        std::cout << rep.dump() << "\n";
        return 1;
    }
}

int cmd_sf_isotope(const std::string& file, const std::string& out_path) {
    Solution s = load_solution_file(file);
    try {
        auto [base, pair] = square_free_isotope(s);
        ordered_json rep;
        rep["base"] = solution_to_json(base);
        rep["pi1"] = pair.pi1.cycles();
        rep["pi2"] = pair.pi2.cycles();
        emit(rep, out_path);
        return 0;
    } catch (const std::invalid_argument& e) {
        ordered_json rep;
        rep["error"] = e.what();
        std::cout << rep.dump() << "\n";
        return 1;
    }
}

int cmd_iso_check(const std::string& file_a, const std::string& file_b) {
    Solution a = load_solution_file(file_a);
    Solution b = load_solution_file(file_b);
    ordered_json rep;
    auto phi = find_isomorphism(a, b);
    rep["isomorphic"] = phi.has_value();
    if (phi) {
        rep["iso"] = phi->cycles();
        std::cout << rep.dump() << "\n";
        return 0;
    }
    std::cout << rep.dump() << "\n";
    return 1;
}

int cmd_enumerate(int size, const std::string& cls, bool count_only, int jobs,
                  const std::string& out_path) {
    Catalog cat = enumerate_class(cls, size, jobs);
    if (count_only) {
        ordered_json rep;
        rep["schema"] = 1;
        rep["n"] = cat.n;
        rep["class"] = cat.cls;
        rep["count"] = cat.count();
        emit(rep, out_path);
        return 0;
    }
    compute_flags(cat, jobs);
    emit_text(catalog_to_jsonl(cat), out_path);
    return 0;
}

int cmd_oracle(int size, const std::string& cls, bool allow_big, int jobs,
               const std::string& out_path) {
    Catalog cat = brute_force_solutions(size, cls, class_predicate(cls), allow_big, jobs);
    compute_flags(cat, jobs);
    emit_text(catalog_to_jsonl(cat), out_path);
    return 0;
}

int cmd_table(int max_size, int jobs) {
    TableReport rep = table_counts(max_size, jobs);
    ordered_json j;
    j["max_n"] = rep.max_n;
    ordered_json rows = ordered_json::array();
    for (const TableRow& row : rep.rows) {
        ordered_json r;
        r["class"] = row.cls;
        r["counts"] = row.counts;
        r["expected"] = row.expected;
        r["match"] = row.match;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["all_match"] = rep.all_match;
    std::cout << j.dump() << "\n";
    return rep.all_match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-theoretic Yang-Baxter solutions: classification and enumeration"};
    app.require_subcommand(1);
    int rc = 0;

    auto check_class = [&](const std::string& cls) {
        for (const auto& k : kClassNames)
            if (k == cls)
                return true;
        std::cerr << "error: unknown class '" << cls << "'\n";
        return false;
    };

    // verify FILE
    {
        auto* sub = app.add_subcommand("verify", "check that a solution file is non-degenerate and satisfies the braid relation");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "solution JSON file")->required();
        sub->callback([&rc, file]() { rc = cmd_verify(*file); });
    }
    // classify FILE
    {
        auto* sub = app.add_subcommand("classify", "full classification report for a solution file");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "solution JSON file")->required();
        sub->callback([&rc, file]() { rc = cmd_classify(*file); });
    }
    // isotope FILE PI1 PI2
    {
        auto* sub = app.add_subcommand("isotope", "build the (pi1, pi2)-isotope of a solution");
        auto file = std::make_shared<std::string>();
        auto pi1 = std::make_shared<std::string>();
        auto pi2 = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("file", *file, "solution JSON file")->required();
        sub->add_option("pi1", *pi1, "first twist (cycle notation)")->required();
        sub->add_option("pi2", *pi2, "second twist (cycle notation)")->required();
        sub->add_option("-o,--output", *out, "output path (default: stdout)");
        sub->callback([&rc, file, pi1, pi2, out]() { rc = cmd_isotope(*file, *pi1, *pi2, *out); });
    }
    // sf-isotope FILE
    {
        auto* sub = app.add_subcommand("sf-isotope", "decompose a level-<=2 solution as an isotope of its square-free 2-reductive base");
        auto file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("file", *file, "solution JSON file")->required();
        sub->add_option("-o,--output", *out, "output path (default: stdout)");
        sub->callback([&rc, file, out]() { rc = cmd_sf_isotope(*file, *out); });
    }
    // iso-check FILEA FILEB
    {
        auto* sub = app.add_subcommand("iso-check", "test two solution files for isomorphism");
        auto fa = std::make_shared<std::string>();
        auto fb = std::make_shared<std::string>();
        sub->add_option("file_a", *fa, "first solution JSON file")->required();
        sub->add_option("file_b", *fb, "second solution JSON file")->required();
        sub->callback([&rc, fa, fb]() { rc = cmd_iso_check(*fa, *fb); });
    }
    // enumerate --size N --class CLS [--count-only] [--jobs J] [-o PATH]
    {
        auto* sub = app.add_subcommand("enumerate", "enumerate a solution class up to isomorphism");
        auto size = std::make_shared<int>(0);
        auto cls = std::make_shared<std::string>();
        auto count_only = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        sub->add_option("--size", *size, "solution size")->required()->check(CLI::PositiveNumber);
        sub->add_option("--class", *cls, "class name: sf2r sf2r-inv 2perm 2perm-inv 2red 2red-inv perm")->required();
        sub->add_flag("--count-only", *count_only, "emit the count header only");
        sub->add_option("--jobs", *jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("-o,--output", *out, "output path (default: stdout)");
        sub->callback([&rc, &check_class, size, cls, count_only, jobs, out]() {
            if (!check_class(*cls)) {
                rc = 2;
                return;
            }
            rc = cmd_enumerate(*size, *cls, *count_only, *jobs, *out);
        });
    }
    // oracle --size N --class CLS [--allow-big] [--jobs J] [-o PATH]
    {
        auto* sub = app.add_subcommand("oracle", "independent exhaustive-scan enumeration (small sizes)");
        auto size = std::make_shared<int>(0);
        auto cls = std::make_shared<std::string>();
        auto allow_big = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>();
        sub->add_option("--size", *size, "solution size")->required()->check(CLI::PositiveNumber);
        sub->add_option("--class", *cls, "class name: sf2r sf2r-inv 2perm 2perm-inv 2red 2red-inv perm")->required();
        sub->add_flag("--allow-big", *allow_big, "permit sizes above 3 (slow)");
        sub->add_option("--jobs", *jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("-o,--output", *out, "output path (default: stdout)");
        sub->callback([&rc, &check_class, size, cls, allow_big, jobs, out]() {
            if (!check_class(*cls)) {
                rc = 2;
                return;
            }
            if (*size > 3 && !*allow_big) {
                std::cerr << "error: oracle size cap is 3; pass --allow-big to override\n";
                rc = 2;
                return;
            }
            rc = cmd_oracle(*size, *cls, *allow_big, *jobs, *out);
        });
    }
    // table --max-size N [--jobs J]
    {
        auto* sub = app.add_subcommand("table", "reproduce the per-size class counts and compare with the frozen values");
        auto max_size = std::make_shared<int>(6);
        auto jobs = std::make_shared<int>(1);
        sub->add_option("--max-size", *max_size, "largest size to enumerate")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", *jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->callback([&rc, max_size, jobs]() { rc = cmd_table(*max_size, *jobs); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
