// Batch front end: loads a structure document, runs one command through the
// shared-library C interface, and prints the report.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gckit.h"

namespace {

int run(const std::string& command, const std::string& input_path,
        const std::string& point, const std::string& subspace, int degree,
        bool pretty) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "gckit: cannot open '" << input_path << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    gckit_doc* doc = nullptr;
    gckit_status st = gckit_doc_parse(buf.str().c_str(), &doc);
    if (st != GCKIT_OK) {
        std::cerr << "gckit: " << gckit_last_error() << "\n";
        return 2;
    }

    nlohmann::json opts = nlohmann::json::object();
    if (!point.empty()) {
        nlohmann::json pj = nlohmann::json::array();
        std::stringstream ps(point);
        std::string item;
        while (std::getline(ps, item, ','))
            pj.push_back(item);
        opts["point"] = pj;
    }
    if (!subspace.empty())
        opts["subspace"] = subspace;
    opts["degree"] = degree;

    gckit_report* report = nullptr;
    st = gckit_run(doc, command.c_str(), opts.dump().c_str(), &report);
    gckit_doc_free(doc);
    if (st == GCKIT_PARSE_ERROR || st == GCKIT_INVALID_ARGUMENT) {
        std::cerr << "gckit: " << gckit_last_error() << "\n";
        return 2;
    }
    if (report == nullptr) {
        std::cerr << "gckit: " << gckit_last_error() << "\n";
        return 2;
    }

    if (!pretty) {
        std::cout << gckit_report_json(report);
    } else {
        nlohmann::json body = nlohmann::json::parse(gckit_report_json(report));
        std::cout << "command: " << body["command"].get<std::string>() << "\n";
        std::cout << "status:  " << body["status"].get<std::string>() << "\n";
        for (const auto& c : body["checks"]) {
            std::cout << "  [" << c["status"].get<std::string>() << "] "
                      << c["name"].get<std::string>() << "\n";
            if (c.contains("residuals"))
                for (const auto& r : c["residuals"])
                    std::cout << "        residual " << r.get<std::string>() << "\n";
            if (c.contains("note"))
                std::cout << "        " << c["note"].get<std::string>() << "\n";
        }
        if (body.contains("outputs") && !body["outputs"].empty()) {
            std::cout << "outputs:\n";
            for (const auto& [key, value] : body["outputs"].items())
                std::cout << "  " << key << ": " << value.dump() << "\n";
        }
    }
    int exit_code = gckit_report_passed(report) ? 0 : 1;
    gckit_report_free(report);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for generalized complex structures"};
    app.require_subcommand(1);

    std::string input, point, subspace;
    int degree = 3;
    bool pretty = false;
    bool json_out = false;

    const char* names[] = {"check", "poisson", "decompose", "orthcomp", "linearize",
                           "normalform"};
    const char* descs[] = {
        "validate the algebraic identities and integrability",
        "emit the Poisson block and run the bracket identity suite",
        "split off the symplectic leaf at a point",
        "leafwise orthogonal complement of a declared subspace",
        "first-order complex Lie algebra at a rank-0 point",
        "two-form constructions and identities on a product chart"};
    for (int i = 0; i < 6; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->add_option("--input", input, "structure document (JSON)")->required();
        sub->add_option("--point", point, "evaluation point, comma-separated rationals");
        sub->add_option("--subspace", subspace,
                        "name of a subspace declared in the document");
        sub->add_option("--degree", degree, "degree bound for identity suites");
        sub->add_flag("--pretty", pretty, "human-readable report");
        sub->add_flag("--json", json_out, "machine-readable report (default)");
    }

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();
    return run(command, input, point, subspace, degree, pretty && !json_out);
}
