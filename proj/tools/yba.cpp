// Command-line front end: validate R-matrices, build braid matrices and
// braided factorials, evaluate the skew pairing, and extract generalized
// q-Serre relators as kernel vectors of braided factorials.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "yba/io.hpp"

using nlohmann::json;

namespace {

struct RunConfig {
    std::string catalog;
    std::string input;
    int n = 2;
    int degree_max = 2;
    bool verify = false;
    std::optional<yba::Rational> at_q;
    std::string format = "text";
    std::string output;
    std::string plus_expr;
    std::string minus_expr;
    bool inverse = false;
    bool convolution = false;
};

void add_source_options(CLI::App* cmd, RunConfig& cfg) {
    auto* cat = cmd->add_option("--catalog", cfg.catalog, "built-in R-matrix name");
    auto* file = cmd->add_option("--input", cfg.input, "R-matrix document file");
    cat->excludes(file);
    file->excludes(cat);
    cmd->add_option("--n", cfg.n, "dimension of V for catalog entries")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "doc"}));
    cmd->add_option("--output", cfg.output, "write output to a file instead of stdout");
}

std::string at_q_string;

void add_at_q_option(CLI::App* cmd) {
    cmd->add_option("--at-q", at_q_string, "display values at an exact rational q");
}

struct Source {
    std::string description;
    json document;        // R-matrix document of the raw input
    int n = 0;
    yba::ExactMatrix raw;  // unvalidated entries
};

Source load_source(const RunConfig& cfg) {
    Source src;
    if (!cfg.catalog.empty()) {
        const yba::RMatrix r = yba::catalog_lookup(cfg.catalog, cfg.n);
        src.description = "catalog " + cfg.catalog + " (n = " + std::to_string(cfg.n) + ")";
        src.n = r.dim();
        src.raw = r.matrix();
        src.document = yba::rmatrix_to_json(r.dim(), r.matrix());
    } else if (!cfg.input.empty()) {
        auto [n, m] = yba::rmatrix_from_file(cfg.input);
        src.description = "file " + cfg.input;
        src.n = n;
        src.raw = std::move(m);
        src.document = yba::rmatrix_to_json(n, src.raw);
    } else {
        throw std::invalid_argument("an R-matrix source is required (--catalog or --input)");
    }
    return src;
}

yba::RMatrix validated_of(const Source& src) { return yba::RMatrix::validated(src.raw); }

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + cfg.output + "'");
    out << text;
}

json doc_skeleton(const std::string& command, const Source& src) {
    return {{"tool", {{"name", yba::tool_name()}, {"version", yba::tool_version()}}},
            {"command", command},
            {"input", src.document}};
}

// ---------------------------------------------------------------------------

int cmd_check(const RunConfig& cfg) {
    const Source src = load_source(cfg);

    bool invertible = true;
    try {
        yba::inverse(src.raw);
    } catch (const std::domain_error&) {
        invertible = false;
    }
    const auto ybe = yba::check_ybe(src.raw);
    const yba::ExactMatrix braid = yba::flip_upper_indices(src.raw);
    const auto braid_rel = yba::check_braid(braid);
    const bool all_pass = invertible && !ybe && !braid_rel;

    if (cfg.format == "doc") {
        json doc = doc_skeleton("check", src);
        json results;
        results["invertible"] = invertible;
        results["yang_baxter"] = json{{"pass", !ybe}};
        if (ybe) results["yang_baxter"]["witness"] = ybe->describe();
        results["braid_relation"] = json{{"pass", !braid_rel}};
        if (braid_rel) results["braid_relation"]["witness"] = braid_rel->describe();
        results["all_pass"] = all_pass;
        doc["results"] = std::move(results);
        emit(cfg, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "source: " << src.description << "\n";
        out << "invertible: " << (invertible ? "yes" : "NO") << "\n";
        out << "yang-baxter: " << (ybe ? "FAIL " + ybe->describe() : "pass") << "\n";
        out << "braid relation: " << (braid_rel ? "FAIL " + braid_rel->describe() : "pass")
            << "\n";
        emit(cfg, out.str());
    }
    return all_pass ? 0 : 1;
}

int cmd_braid(const RunConfig& cfg) {
    const Source src = load_source(cfg);
    const yba::RMatrix r = validated_of(src);
    const yba::BraidMatrix b = yba::braid_from_r(r);

    if (cfg.format == "doc") {
        json doc = doc_skeleton("braid", src);
        doc["results"] = {{"braid_matrix", yba::matrix_to_json(b.matrix())}};
        emit(cfg, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "source: " << src.description << "\n";
        out << "braid matrix B (B^{ij}_{kl} = R^{ji}_{kl}):\n";
        out << yba::matrix_to_text(b.matrix(), cfg.at_q);
        emit(cfg, out.str());
    }
    return 0;
}

int cmd_factorial(const RunConfig& cfg) {
    const Source src = load_source(cfg);
    const yba::RMatrix r = validated_of(src);
    const yba::BraidMatrix b = yba::braid_from_r(r);

    std::vector<yba::BraidedFactorial> factorials;
    for (int N = 1; N <= cfg.degree_max; ++N) factorials.push_back(yba::braided_factorial(b, N));

    bool oracle_match = true;
    if (cfg.verify) {
        yba::GramOracle oracle(b);
        for (const auto& f : factorials) {
            const yba::BraidedFactorial check{f.n, f.N, oracle.gram(f.N),
                                              yba::FactorialProvenance::OracleRecursion};
            if (check.matrix != f.matrix) {
                oracle_match = false;
                break;
            }
        }
    }

    if (cfg.format == "doc") {
        json doc = doc_skeleton("factorial", src);
        json results;
        results["factorials"] = json::array();
        for (const auto& f : factorials)
            results["factorials"].push_back(
                {{"N", f.N}, {"matrix", yba::matrix_to_json(f.matrix)}});
        if (cfg.verify) results["oracle_match"] = oracle_match;
        doc["results"] = std::move(results);
        emit(cfg, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "source: " << src.description << "\n";
        for (const auto& f : factorials) {
            out << "[" << f.N << "!]_B:\n";
            out << yba::matrix_to_text(f.matrix, cfg.at_q);
        }
        if (cfg.verify)
            out << "pairing-recursion oracle: " << (oracle_match ? "match" : "MISMATCH") << "\n";
        emit(cfg, out.str());
    }
    return cfg.verify && !oracle_match ? 1 : 0;
}

int cmd_serre(const RunConfig& cfg) {
    if (cfg.degree_max < 2)
        throw std::invalid_argument("serre needs --N at least 2");
    if (cfg.at_q)
        throw std::invalid_argument(
            "serre output is always generic in q; --at-q is not supported here");
    const Source src = load_source(cfg);
    const yba::RMatrix r = validated_of(src);

    std::vector<std::string> warnings;
    {
        long long dim = 1;
        for (int i = 0; i < cfg.degree_max; ++i) dim *= r.dim();
        if (dim > 1024)
            warnings.push_back("n^N = " + std::to_string(dim) +
                               " exceeds 1024; exact elimination may be slow");
        if (dim * dim > 4096)
            warnings.push_back("the degree-" + std::to_string(cfg.degree_max) +
                               " t-u gram matrix has dimension n^(2N) = " +
                               std::to_string(dim * dim) +
                               "; its exact elimination may take minutes");
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    struct DegreeReport {
        int N;
        std::vector<yba::Relator> e, f, fresh;
        int tu_right_dim, tu_left_dim;
    };
    std::vector<DegreeReport> reports;
    std::map<int, std::vector<std::vector<yba::Scalar>>> lower;
    for (int N = 2; N <= cfg.degree_max; ++N) {
        DegreeReport rep;
        rep.N = N;
        rep.e = yba::e_relators(r, N);
        rep.f = yba::f_relators(r, N);
        rep.fresh = yba::new_relators(r, N, lower);
        const yba::ExactMatrix gram = yba::tu_null_gram(r, N);
        const int gram_rank = yba::rank(gram);
        rep.tu_right_dim = gram.cols() - gram_rank;
        rep.tu_left_dim = gram.rows() - gram_rank;
        std::vector<std::vector<yba::Scalar>> basis;
        for (const auto& rel : rep.e) basis.push_back(rel.coefficients);
        lower[N] = std::move(basis);
        reports.push_back(std::move(rep));
    }

    if (cfg.format == "doc") {
        json doc = doc_skeleton("serre", src);
        json degrees = json::array();
        for (const auto& rep : reports) {
            json d;
            d["N"] = rep.N;
            d["e_relators"] = json::array();
            for (const auto& rel : rep.e) d["e_relators"].push_back(yba::relator_to_json(rel));
            d["f_relators"] = json::array();
            for (const auto& rel : rep.f) d["f_relators"].push_back(yba::relator_to_json(rel));
            d["new_relators"] = json::array();
            for (const auto& rel : rep.fresh)
                d["new_relators"].push_back(yba::relator_to_json(rel));
            d["tu_gram"] = {{"degree", rep.N},
                            {"right_kernel_dim", rep.tu_right_dim},
                            {"left_kernel_dim", rep.tu_left_dim}};
            degrees.push_back(std::move(d));
        }
        doc["results"] = {{"degrees", std::move(degrees)}};
        if (!warnings.empty()) doc["warnings"] = warnings;
        emit(cfg, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "source: " << src.description << "\n";
        for (const auto& rep : reports) {
            out << "degree N = " << rep.N << "\n";
            out << "  e-relators (" << rep.e.size() << "):\n";
            for (const auto& rel : rep.e) out << "    " << rel.rendering.to_string() << "\n";
            out << "  f-relators (" << rep.f.size() << "):\n";
            for (const auto& rel : rep.f) out << "    " << rel.rendering.to_string() << "\n";
            out << "  new relators (" << rep.fresh.size() << "):\n";
            for (const auto& rel : rep.fresh) out << "    " << rel.rendering.to_string() << "\n";
            out << "  t-u gram at degree " << rep.N << ": right kernel dim " << rep.tu_right_dim
                << ", left kernel dim " << rep.tu_left_dim << "\n";
        }
        emit(cfg, out.str());
    }
    return 0;
}

int cmd_pair(const RunConfig& cfg) {
    const Source src = load_source(cfg);
    const yba::RMatrix r = validated_of(src);
    yba::PairingEvaluator ev(r);

    const yba::FreePoly x = yba::parse_free_poly(cfg.plus_expr, yba::Side::Plus);
    const yba::FreePoly a = yba::parse_free_poly(cfg.minus_expr, yba::Side::Minus);
    const yba::Scalar value = ev.pair(x, a);

    std::optional<yba::Scalar> inv_value;
    if (cfg.inverse) inv_value = ev.pair_inverse(x, a);

    bool conv_pass = true;
    yba::Scalar conv_first, conv_second, conv_expected;
    if (cfg.convolution) {
        for (const auto& [mx, cx] : x.terms())
            for (const auto& [ma, ca] : a.terms()) {
                const auto [one, two] = ev.convolution_products(mx, ma);
                conv_first += cx * ca * one;
                conv_second += cx * ca * two;
                conv_expected += cx * ca * yba::counit(mx) * yba::counit(ma);
            }
        conv_pass = conv_first == conv_expected && conv_second == conv_expected;
    }

    if (cfg.format == "doc") {
        json doc = doc_skeleton("pair", src);
        json results;
        results["x"] = x.to_string();
        results["a"] = a.to_string();
        results["pair"] = value.to_string();
        if (cfg.at_q) results["pair_at_q"] = yba::rational_to_string(value.evaluate_at(*cfg.at_q));
        if (inv_value) results["pair_inverse"] = inv_value->to_string();
        if (cfg.convolution)
            results["convolution"] = {{"inverse_first", conv_first.to_string()},
                                      {"inverse_second", conv_second.to_string()},
                                      {"expected", conv_expected.to_string()},
                                      {"pass", conv_pass}};
        doc["results"] = std::move(results);
        emit(cfg, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "pair(" << x.to_string() << ", " << a.to_string() << ") = " << value.to_string()
            << "\n";
        if (cfg.at_q)
            out << "  at q = " << yba::rational_to_string(*cfg.at_q) << ": "
                << yba::rational_to_string(value.evaluate_at(*cfg.at_q)) << "\n";
        if (inv_value) out << "pair_inverse = " << inv_value->to_string() << "\n";
        if (cfg.convolution)
            out << "convolution identity: " << (conv_pass ? "pass" : "FAIL")
                << " (got " << conv_first.to_string() << " and " << conv_second.to_string()
                << ", expected " << conv_expected.to_string() << ")\n";
        emit(cfg, out.str());
    }
    return cfg.convolution && !conv_pass ? 1 : 0;
}

int cmd_catalog(const RunConfig& cfg) {
    const auto entries = yba::catalog_descriptions();
    if (cfg.format == "doc") {
        json doc = {{"tool", {{"name", yba::tool_name()}, {"version", yba::tool_version()}}},
                    {"command", "catalog"}};
        json list = json::array();
        for (const auto& [name, info] : entries) list.push_back({{"name", name}, {"info", info}});
        doc["results"] = {{"entries", std::move(list)}};
        emit(cfg, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        for (const auto& [name, info] : entries) out << name << "  -  " << info << "\n";
        emit(cfg, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"yba: braided factorials and generalized q-Serre relators for "
                 "Yang-Baxter R-matrices"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* check = app.add_subcommand("check", "validate an R-matrix (invertibility, "
                                              "Yang-Baxter, braid relation)");
    add_source_options(check, cfg);
    add_output_options(check, cfg);

    auto* braid = app.add_subcommand("braid", "print the braid matrix B = P R");
    add_source_options(braid, cfg);
    add_output_options(braid, cfg);
    add_at_q_option(braid);

    auto* factorial = app.add_subcommand("factorial", "braided factorials [N!]_B for N = 1..N");
    add_source_options(factorial, cfg);
    add_output_options(factorial, cfg);
    add_at_q_option(factorial);
    factorial->add_option("--N", cfg.degree_max, "largest degree")->check(CLI::PositiveNumber);
    factorial->add_flag("--verify", cfg.verify,
                        "cross-check against the pairing-recursion oracle");

    auto* serre = app.add_subcommand("serre", "extract q-Serre relators for N = 2..N");
    add_source_options(serre, cfg);
    add_output_options(serre, cfg);
    add_at_q_option(serre);
    serre->add_option("--N", cfg.degree_max, "largest degree")->check(CLI::PositiveNumber);

    auto* pair = app.add_subcommand("pair", "evaluate the skew pairing of two monomials");
    add_source_options(pair, cfg);
    add_output_options(pair, cfg);
    add_at_q_option(pair);
    pair->add_option("x", cfg.plus_expr, "plus-side expression (u[i,j], F[i])")->required();
    pair->add_option("a", cfg.minus_expr, "minus-side expression (t[i,j], E[i])")->required();
    pair->add_flag("--inverse", cfg.inverse, "also evaluate the convolution-inverse pairing");
    pair->add_flag("--convolution", cfg.convolution, "check the convolution-inverse identity");

    auto* catalog = app.add_subcommand("catalog", "list built-in R-matrices");
    add_output_options(catalog, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!at_q_string.empty()) cfg.at_q = yba::parse_rational(at_q_string);
        if (app.got_subcommand(check)) return cmd_check(cfg);
        if (app.got_subcommand(braid)) return cmd_braid(cfg);
        if (app.got_subcommand(factorial)) return cmd_factorial(cfg);
        if (app.got_subcommand(serre)) return cmd_serre(cfg);
        if (app.got_subcommand(pair)) return cmd_pair(cfg);
        if (app.got_subcommand(catalog)) return cmd_catalog(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
