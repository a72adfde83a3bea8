#include "crystalk/document.hpp"

#include <sstream>

namespace crystalk {

Json int_to_json(const Int& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

std::string rat_to_string(const Rat& value) {
    return value.get_str();
}

namespace {

Int json_to_int(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected an integer or a decimal string");
}

}  // namespace

InputSpec parse_input_json(const nlohmann::json& j) {
    InputSpec spec;
    if (j.contains("cyclotomic")) {
        const auto& c = j.at("cyclotomic");
        spec.cyclotomic = {c.at("m").get<long>(), c.at("k").get<long>()};
    } else if (j.contains("matrix")) {
        long m = j.at("m").get<long>();
        const auto& rows = j.at("matrix");
        std::vector<std::vector<Int>> entries;
        for (const auto& row : rows) {
            std::vector<Int> r;
            for (const auto& e : row) r.push_back(json_to_int(e));
            entries.push_back(std::move(r));
        }
        spec.explicit_input = {m, IntegerMatrix::from_rows(entries)};
    } else {
        throw InputError("input must contain either \"cyclotomic\" or \"matrix\"");
    }
    return spec;
}

CyclicLattice realize(const InputSpec& spec) {
    if (spec.cyclotomic && spec.explicit_input)
        throw InputError("exactly one of cyclotomic/explicit input must be present");
    if (spec.cyclotomic) return cyclotomic_lattice(spec.cyclotomic->first, spec.cyclotomic->second);
    if (spec.explicit_input) return validate(spec.explicit_input->first, spec.explicit_input->second);
    throw InputError("no input given");
}

namespace {

Json matrix_to_json(const IntegerMatrix& t) {
    Json rows = Json::array();
    for (long i = 0; i < t.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < t.cols(); ++j) row.push_back(int_to_json(t(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json input_echo(const InputSpec& spec, const CyclicLattice& lattice, const SylowData& sylow) {
    Json in;
    if (spec.cyclotomic) {
        in["cyclotomic"] = Json{{"m", spec.cyclotomic->first}, {"k", spec.cyclotomic->second}};
    }
    in["m"] = lattice.m;
    in["n"] = lattice.n;
    in["k"] = sylow.k;
    Json primes = Json::array();
    for (auto [p, r] : sylow.prime_powers) primes.push_back(Json{{"p", p}, {"r", r}});
    in["prime_powers"] = std::move(primes);
    in["k_per_prime"] = sylow.k_per_prime;
    in["matrix"] = matrix_to_json(lattice.action);
    return in;
}

Json census_to_json(const SubgroupCensus& census) {
    Json out;
    Json per;
    for (const auto& [d, entry] : census.per_divisor)
        per[std::to_string(d)] =
            Json{{"classes", int_to_json(entry.classes)}, {"maximal", int_to_json(entry.maximal)}};
    out["per_divisor"] = std::move(per);
    out["total_maximal"] = int_to_json(census.total_maximal());
    out["sum_order_minus_one"] = int_to_json(census.sum_order_minus_one());
    out["sum_reciprocal"] = rat_to_string(census.sum_reciprocal());
    out["sum_sq"] = rat_to_string(census.sum_sq());
    return out;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const CheckResult& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.lhs.empty() || !c.rhs.empty()) {
            e["lhs"] = c.lhs;
            e["rhs"] = c.rhs;
        }
        arr.push_back(std::move(e));
    }
    return arr;
}

Json graded_to_json(const std::vector<GradedGroup>& groups) {
    Json arr = Json::array();
    for (const GradedGroup& g : groups) {
        Json e;
        e["degree"] = g.degree;
        e["free_rank"] = int_to_json(g.free_rank);
        Json tor = Json::array();
        for (const Int& f : g.torsion) tor.push_back(int_to_json(f));
        e["torsion"] = std::move(tor);
        Json norm = Json::array();
        for (const Int& f : normalize_torsion(g.torsion)) norm.push_back(int_to_json(f));
        e["torsion_normalized"] = std::move(norm);
        arr.push_back(std::move(e));
    }
    return arr;
}

Json ranks_to_json(const LambdaRanks& ranks) {
    Json out;
    Json r = Json::array();
    for (const Int& v : ranks.ranks) r.push_back(int_to_json(v));
    out["ranks"] = std::move(r);
    out["sum_all"] = int_to_json(ranks.sum_all);
    out["sum_alt"] = int_to_json(ranks.sum_alt);
    out["sum_even"] = int_to_json(ranks.sum_even());
    out["sum_odd"] = int_to_json(ranks.sum_odd());
    if (ranks.closed_sum_all) out["sum_all_closed_form"] = int_to_json(*ranks.closed_sum_all);
    return out;
}

Json euler_to_json(const EulerClass& euler) {
    Json out;
    out["free_coefficient"] = rat_to_string(euler.free_orbit_coefficient);
    Json terms;
    for (const auto& [d, c] : euler.orbit_terms) terms[std::to_string(d)] = int_to_json(c);
    out["orbit_terms"] = std::move(terms);
    out["class"] = euler.integral() ? euler.as_burnside().to_string() : std::string("(non-integral)");
    out["quot"] = rat_to_string(euler.quot());
    out["kg"] = rat_to_string(euler.kg());
    out["cardinality"] = rat_to_string(euler.cardinality());
    return out;
}

Json cross_check_to_json(const CrossCheckReport& report) {
    Json arr = Json::array();
    for (const CrossCheckEntry& e : report.entries) {
        Json j;
        j["quantity"] = e.quantity;
        j["pass"] = e.pass;
        j["bruteforce"] = e.lhs;
        j["closed_form"] = e.rhs;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

Json report_document(const InputSpec& spec) {
    CyclicLattice lattice = realize(spec);
    SylowData sylow = sylow_data(lattice);
    KTheoryReport report = build_report(lattice, spec.options);

    Json doc;
    doc["schema_version"] = 1;
    doc["input"] = input_echo(spec, lattice, sylow);
    doc["lambda_ranks"] = ranks_to_json(report.ranks);
    doc["census"] = census_to_json(report.census);
    doc["census_cross_check"] = cross_check_to_json(report.census_checks);
    doc["s0"] = int_to_json(report.s0);
    doc["s1"] = int_to_json(report.s1);
    doc["euler_class"] = euler_to_json(report.euler);
    doc["max_degree"] = report.max_degree;
    doc["gamma_cohomology"] = graded_to_json(report.gamma);
    doc["orbifold_cohomology"] = graded_to_json(report.orbifold);
    doc["checks"] = checks_to_json(report.checks);
    Json prov;
    for (const auto& [q, route] : report.provenance) prov[q] = route;
    doc["provenance"] = std::move(prov);
    doc["all_checks_pass"] = report.all_checks_pass();
    return doc;
}

Json census_document(const InputSpec& spec) {
    CyclicLattice lattice = realize(spec);
    SylowData sylow = sylow_data(lattice);
    CrossCheckReport checks = cross_check(lattice, spec.options.enumeration_threshold);
    SubgroupCensus census = census_bruteforce(lattice, spec.options.enumeration_threshold);
    Json doc;
    doc["schema_version"] = 1;
    doc["input"] = input_echo(spec, lattice, sylow);
    doc["census"] = census_to_json(census);
    doc["census_cross_check"] = cross_check_to_json(checks);
    return doc;
}

Json cohomology_document(const InputSpec& spec) {
    CyclicLattice lattice = realize(spec);
    SylowData sylow = sylow_data(lattice);
    LambdaRanks ranks = lambda_ranks(lattice);
    long max_degree = spec.options.max_degree >= 0 ? spec.options.max_degree : 2 * lattice.n + 2;
    TateTable table = tate_table(lattice, spec.options.exterior_cap);
    Json doc;
    doc["schema_version"] = 1;
    doc["input"] = input_echo(spec, lattice, sylow);
    doc["lambda_ranks"] = ranks_to_json(ranks);
    doc["max_degree"] = max_degree;
    doc["gamma_cohomology"] = graded_to_json(gamma_cohomology(lattice, max_degree, table, ranks));
    doc["orbifold_cohomology"] = graded_to_json(orbifold_cohomology(lattice, max_degree, table, ranks));
    Json tate = Json::array();
    for (long l = 0; l <= lattice.n; ++l) {
        Json e;
        e["l"] = l;
        Json ev = Json::array(), od = Json::array();
        for (const Int& f : table.even[l].invariant_factors) ev.push_back(int_to_json(f));
        for (const Int& f : table.odd[l].invariant_factors) od.push_back(int_to_json(f));
        e["even"] = std::move(ev);
        e["odd"] = std::move(od);
        e["fixed_rank"] = table.fixed_rank[l];
        tate.push_back(std::move(e));
    }
    doc["tate"] = std::move(tate);
    return doc;
}

Json validate_document(const InputSpec& spec) {
    CyclicLattice lattice = realize(spec);
    SylowData sylow = sylow_data(lattice);
    Json doc;
    doc["schema_version"] = 1;
    doc["input"] = input_echo(spec, lattice, sylow);
    doc["valid"] = true;
    return doc;
}

GridResult run_grid(const std::vector<long>& m_list, const std::vector<long>& k_list,
                    const ReportOptions& options) {
    GridResult grid;
    for (long m : m_list) {
        for (long k : k_list) {
            GridRow row;
            row.m = m;
            row.k = k;
            long n = k * euler_phi(m);
            row.n = n;
            if (binomial(n, n / 2) > options.exterior_cap) {
                row.status = "skipped";
                grid.rows.push_back(std::move(row));
                continue;
            }
            try {
                KTheoryReport report = build_report(cyclotomic_lattice(m, k), options);
                row.s0 = report.s0.get_str();
                row.s1 = report.s1.get_str();
                if (report.all_checks_pass()) {
                    row.status = "pass";
                } else {
                    row.status = "fail";
                    for (const CheckResult& c : report.checks)
                        if (!c.pass) row.failed_checks.push_back(c.name);
                    grid.all_pass = false;
                }
            } catch (const Error& err) {
                row.status = "fail";
                row.failed_checks.push_back(err.what());
                grid.all_pass = false;
            }
            grid.rows.push_back(std::move(row));
        }
    }
    return grid;
}

Json grid_document(const GridResult& grid) {
    Json doc;
    doc["schema_version"] = 1;
    Json rows = Json::array();
    for (const GridRow& row : grid.rows) {
        Json r;
        r["m"] = row.m;
        r["k"] = row.k;
        r["n"] = row.n;
        r["status"] = row.status;
        if (row.status != "skipped") {
            r["s0"] = row.s0;
            r["s1"] = row.s1;
        }
        if (!row.failed_checks.empty()) r["failed_checks"] = row.failed_checks;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["all_pass"] = grid.all_pass;
    return doc;
}

namespace {

void render_value(const Json& value, const std::string& indent, const std::string& key,
                  std::ostringstream& os);

bool scalar_array(const Json& arr) {
    for (const auto& e : arr)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_value(const Json& value, const std::string& indent, const std::string& key,
                  std::ostringstream& os) {
    if (value.is_object()) {
        os << indent << key << ":\n";
        for (const auto& [k, v] : value.items()) render_value(v, indent + "  ", k, os);
    } else if (value.is_array() && !scalar_array(value)) {
        os << indent << key << ":\n";
        long i = 0;
        for (const auto& v : value) render_value(v, indent + "  ", "- " + std::to_string(i++), os);
    } else if (value.is_array()) {
        os << indent << key << ": [";
        bool first = true;
        for (const auto& v : value) {
            os << (first ? "" : ", ") << scalar_to_string(v);
            first = false;
        }
        os << "]\n";
    } else {
        os << indent << key << ": " << scalar_to_string(value) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream os;
    for (const auto& [k, v] : doc.items()) render_value(v, "", k, os);
    return os.str();
}

}  // namespace crystalk
