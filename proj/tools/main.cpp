#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crystalk/document.hpp"

namespace {

using crystalk::InputSpec;
using crystalk::Json;

struct CommonArgs {
    std::vector<long> cyclotomic;  // m k
    std::string matrix_file;
    std::string format = "text";
    long max_degree = -1;
    long enumeration_threshold = crystalk::kDefaultEnumerationThreshold;
    long exterior_cap = crystalk::kDefaultExteriorCap;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--cyclotomic", args.cyclotomic,
                    "cyclotomic lattice: m k (k copies of the companion of Phi_m)")
        ->expected(2);
    cmd->add_option("--matrix", args.matrix_file, "JSON file with {\"m\": .., \"matrix\": [[..],..]}");
    cmd->add_option("--format", args.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-degree", args.max_degree, "top degree of the cohomology tables (default 2n+2)");
    cmd->add_option("--enumeration-threshold", args.enumeration_threshold,
                    "largest group order cross-checked by literal enumeration");
    cmd->add_option("--exterior-cap", args.exterior_cap, "largest allowed exterior-power dimension");
}

InputSpec build_spec(const CommonArgs& args) {
    InputSpec spec;
    if (!args.cyclotomic.empty() && !args.matrix_file.empty())
        throw crystalk::InputError("give either --cyclotomic or --matrix, not both");
    if (!args.cyclotomic.empty()) {
        spec.cyclotomic = {args.cyclotomic[0], args.cyclotomic[1]};
    } else if (!args.matrix_file.empty()) {
        std::ifstream in(args.matrix_file);
        if (!in) throw crystalk::InputError("cannot open " + args.matrix_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw crystalk::InputError(std::string("bad input JSON: ") + e.what());
        }
        spec = crystalk::parse_input_json(j);
    } else {
        throw crystalk::InputError("an input is required: --cyclotomic M K or --matrix FILE");
    }
    spec.options.max_degree = args.max_degree;
    spec.options.enumeration_threshold = args.enumeration_threshold;
    spec.options.exterior_cap = args.exterior_cap;
    spec.format = args.format == "json" ? InputSpec::Format::json : InputSpec::Format::text;
    return spec;
}

void emit(const Json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << crystalk::render_text(doc);
}

std::vector<long> parse_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stol(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact census / cohomology / K-theory ranks for Z^n x| Z/m lattices"};
    app.require_subcommand(1);

    CommonArgs report_args, census_args, cohomology_args, validate_args;
    CLI::App* report = app.add_subcommand("report", "full pipeline: census, ranks, cohomology, checks");
    add_common(report, report_args);
    CLI::App* census = app.add_subcommand("census", "subgroup census with both routes cross-checked");
    add_common(census, census_args);
    CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology tables and Tate groups");
    add_common(cohomology, cohomology_args);
    CLI::App* validate = app.add_subcommand("validate", "validate the lattice input");
    add_common(validate, validate_args);

    std::string grid_ms = "2,3,4,5,6,7,8,9,12";
    std::string grid_ks = "1,2";
    std::string grid_format = "text";
    CommonArgs grid_args;
    CLI::App* grid = app.add_subcommand("grid", "regression grid over cyclotomic instances");
    grid->add_option("--m-list", grid_ms, "comma-separated m values");
    grid->add_option("--k-list", grid_ks, "comma-separated k values");
    grid->add_option("--format", grid_format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    grid->add_option("--enumeration-threshold", grid_args.enumeration_threshold, "");
    grid->add_option("--exterior-cap", grid_args.exterior_cap, "");

    CLI11_PARSE(app, argc, argv);

    try {
        if (report->parsed()) {
            emit(crystalk::report_document(build_spec(report_args)), report_args.format);
        } else if (census->parsed()) {
            emit(crystalk::census_document(build_spec(census_args)), census_args.format);
        } else if (cohomology->parsed()) {
            emit(crystalk::cohomology_document(build_spec(cohomology_args)), cohomology_args.format);
        } else if (validate->parsed()) {
            emit(crystalk::validate_document(build_spec(validate_args)), validate_args.format);
        } else if (grid->parsed()) {
            crystalk::ReportOptions options;
            options.enumeration_threshold = grid_args.enumeration_threshold;
            options.exterior_cap = grid_args.exterior_cap;
            crystalk::GridResult result = crystalk::run_grid(parse_list(grid_ms), parse_list(grid_ks), options);
            emit(crystalk::grid_document(result), grid_format);
            if (!result.all_pass) {
                std::cerr << "grid: identity failures present\n";
                return 2;
            }
        }
    } catch (const crystalk::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const crystalk::IdentityError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 2;
    } catch (const crystalk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
