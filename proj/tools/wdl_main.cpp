#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdlkit/canonical.hpp"
#include "wdlkit/concept_algebra.hpp"
#include "wdlkit/concepts.hpp"
#include "wdlkit/enumerate.hpp"
#include "wdlkit/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wdlkit::ParseError("cannot write " + path);
    out << content;
}

int print_report_and_exit_code(const wdlkit::AxiomReport& report) {
    std::cout << wdlkit::to_text(report);
    return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

/// Loads a .lat and insists the tables form a weakly dicomplemented lattice;
/// prints the failing report otherwise.
wdlkit::Dicomplementation load_verified(const std::string& path, int& exit_code) {
    wdlkit::Dicomplementation d = wdlkit::load_lat(path);
    wdlkit::AxiomReport report = wdlkit::check_axioms(d);
    if (!report.all_passed()) {
        std::cout << wdlkit::to_text(report);
        exit_code = kExitVerificationFailure;
    }
    return d;
}

int run(int argc, char** argv) {
    CLI::App app{"finite lattice, formal concept analysis and weak dicomplementation toolkit"};
    app.require_subcommand(1);

    std::string input, output, dot_path, property;
    bool tables = false, count_only = false, embed_report = false, reduced_labels = false;
    std::size_t size = 0, max_size = 6;
    std::vector<std::string> extra_files;

    auto* concepts = app.add_subcommand("concepts", "enumerate the concepts of a context");
    concepts->add_option("file", input, ".cxt input")->required();
    concepts->add_option("--dot", dot_path, "write the concept lattice as DOT");
    concepts->add_flag("--reduced-labels", reduced_labels, "label nodes with introduced objects/attributes only");

    auto* algebra = app.add_subcommand("algebra", "concept algebra with weak negation and opposition");
    algebra->add_option("file", input, ".cxt input")->required();
    algebra->add_flag("--tables", tables, "print the full operation tables");

    auto* check = app.add_subcommand("check", "verify the dicomplementation axioms and derived properties");
    check->add_option("file", input, ".lat input")->required();

    auto* bounds = app.add_subcommand("derive-bounds", "recover the bounds from the tables alone");
    bounds->add_option("file", input, ".lat input")->required();

    auto* std_ctx = app.add_subcommand("standard-context", "emit the standard context of a lattice");
    std_ctx->add_option("file", input, ".lat input")->required();
    std_ctx->add_option("-o,--output", output, "output path (default stdout)");

    auto* canonical = app.add_subcommand("canonical", "canonical context from primary filters and ideals");
    canonical->add_option("file", input, ".lat input")->required();
    canonical->add_flag("--embed-report", embed_report, "verify and report the canonical embedding");

    auto* stone = app.add_subcommand("stone", "finite Stone representation (requires up = down)");
    stone->add_option("file", input, ".lat input")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all lattices of a given size up to isomorphism");
    enumerate->add_option("--size", size, "element count (1..8)")->required();
    enumerate->add_flag("--count-only", count_only, "print only the count");

    auto* search = app.add_subcommand("search", "first structure with a named property");
    search->add_option("--property", property, "property name")->required();
    search->add_option("--max-size", max_size, "enumeration size limit");
    search->add_option("files", extra_files, "search these .lat fixtures instead of enumerating");

    auto* diagnostics = app.add_subcommand("diagnostics", "Boolean part, skeletons and complemented elements");
    diagnostics->add_option("file", input, ".lat input")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitInputError;
    }

    if (concepts->parsed()) {
        wdlkit::ConceptLatticeView view = wdlkit::enumerate_concepts(wdlkit::load_cxt(input));
        const wdlkit::FormalContext& k = view.context();
        std::cout << "concepts " << view.concept_count() << "\n";
        for (std::size_t i = 0; i < view.concept_count(); ++i) {
            const auto& c = view.concept_at(static_cast<int>(i));
            std::cout << i << ": extent="
                      << wdlkit::format_set(c.extent, [&](int g) { return k.object_name(g); })
                      << " intent="
                      << wdlkit::format_set(c.intent, [&](int m) { return k.attribute_name(m); }) << "\n";
        }
        if (!dot_path.empty()) write_output(dot_path, wdlkit::to_dot(view, reduced_labels));
        return kExitOk;
    }
    if (algebra->parsed()) {
        wdlkit::ConceptAlgebraView a = wdlkit::build_concept_algebra(wdlkit::load_cxt(input));
        std::cout << "concepts " << a.base().concept_count() << "\n";
        if (tables) std::cout << a.table_dump();
        return print_report_and_exit_code(a.report());
    }
    if (check->parsed()) {
        wdlkit::Dicomplementation d = wdlkit::load_lat(input);
        wdlkit::AxiomReport report = wdlkit::check_axioms(d);
        if (report.all_passed()) report.append(wdlkit::check_derived_properties(d));
        return print_report_and_exit_code(report);
    }
    if (bounds->parsed()) {
        wdlkit::Dicomplementation d = wdlkit::load_lat(input);
        try {
            wdlkit::DerivedBounds b = wdlkit::derive_bounds(d);
            std::cout << "bottom=" << d.lattice.name(b.bottom) << " top=" << d.lattice.name(b.top) << "\n";
        } catch (const wdlkit::AxiomViolation& e) {
            std::cout << "FAIL " << e.what() << "\n";
            return kExitVerificationFailure;
        }
        return kExitOk;
    }
    if (std_ctx->parsed()) {
        wdlkit::Dicomplementation d = wdlkit::load_lat(input);
        write_output(output, wdlkit::to_cxt(wdlkit::standard_context(d.lattice)));
        return kExitOk;
    }
    if (canonical->parsed()) {
        int code = kExitOk;
        wdlkit::Dicomplementation d = load_verified(input, code);
        if (code != kExitOk) return code;
        std::cout << wdlkit::to_cxt(wdlkit::canonical_context(d));
        if (embed_report) {
            wdlkit::EmbeddingReport r = wdlkit::canonical_embedding(d);
            std::cout << wdlkit::to_text(r);
            if (!r.all_ok()) return kExitVerificationFailure;
        }
        return kExitOk;
    }
    if (stone->parsed()) {
        int code = kExitOk;
        wdlkit::Dicomplementation d = load_verified(input, code);
        if (code != kExitOk) return code;
        try {
            wdlkit::StoneView v = wdlkit::stone_representation(d);
            std::cout << wdlkit::to_text(v, d);
        } catch (const wdlkit::NotWithNegation& e) {
            std::cout << "FAIL " << e.what() << "\n";
            return kExitVerificationFailure;
        }
        return kExitOk;
    }
    if (enumerate->parsed()) {
        std::vector<wdlkit::FiniteLattice> all = wdlkit::enumerate_lattices(size);
        if (count_only) {
            std::cout << all.size() << "\n";
        } else {
            for (std::size_t i = 0; i < all.size(); ++i) {
                std::cout << "# lattice " << i << " of " << all.size() << "\n"
                          << wdlkit::to_lat(all[i]) << "\n";
            }
            std::cout << "count " << all.size() << "\n";
        }
        return kExitOk;
    }
    if (search->parsed()) {
        std::optional<wdlkit::Counterexample> hit;
        if (extra_files.empty()) {
            hit = wdlkit::find_counterexample(property, max_size);
        } else {
            std::vector<wdlkit::Dicomplementation> candidates;
            for (const auto& f : extra_files) candidates.push_back(wdlkit::load_lat(f));
            hit = wdlkit::find_counterexample_in(property, candidates);
        }
        if (!hit) {
            std::cout << "none found\n";
            return kExitOk;
        }
        std::cout << "counterexample: " << hit->description << "\n" << wdlkit::to_lat(hit->structure);
        return kExitOk;
    }
    if (diagnostics->parsed()) {
        int code = kExitOk;
        wdlkit::Dicomplementation d = load_verified(input, code);
        if (code != kExitOk) return code;
        wdlkit::SkeletonDiagnostics diag = wdlkit::boolean_part_diagnostics(d);
        auto name = [&](int i) { return d.lattice.name(i); };
        std::cout << "boolean-part=" << wdlkit::format_set(diag.boolean_part, name) << "\n"
                  << "skeleton=" << wdlkit::format_set(diag.skeleton, name) << "\n"
                  << "dual-skeleton=" << wdlkit::format_set(diag.dual_skeleton, name) << "\n"
                  << "skeleton-intersection=" << wdlkit::format_set(diag.skeleton_intersection, name) << "\n"
                  << "complemented=" << wdlkit::format_set(diag.complemented, name) << "\n";
        std::cout << "part-equals-intersection " << (diag.part_equals_intersection ? "yes" : "no");
        if (diag.intersection_minus_part_witness)
            std::cout << " witness " << name(*diag.intersection_minus_part_witness);
        std::cout << "\n";
        std::cout << "exchange-condition " << (diag.exchange_condition ? "yes" : "no");
        if (diag.exchange_witness) std::cout << " witness " << name(*diag.exchange_witness);
        std::cout << "\n";
        std::cout << "part-equals-complemented " << (diag.part_equals_complemented ? "yes" : "no") << "\n";
        std::cout << "skeleton-subalgebra " << (diag.skeleton_subalgebra ? "yes" : "no");
        if (diag.skeleton_closure_witness) std::cout << " witness " << *diag.skeleton_closure_witness;
        std::cout << "\n";
        if (diag.skeleton_subalgebra)
            std::cout << "skeleton-complemented " << (diag.skeleton_complemented ? "yes" : "no") << "\n";
        std::cout << "dual-skeleton-subalgebra " << (diag.dual_skeleton_subalgebra ? "yes" : "no");
        if (diag.dual_skeleton_closure_witness) std::cout << " witness " << *diag.dual_skeleton_closure_witness;
        std::cout << "\n";
        if (diag.dual_skeleton_subalgebra)
            std::cout << "dual-skeleton-complemented " << (diag.dual_skeleton_complemented ? "yes" : "no") << "\n";
        return kExitOk;
    }
    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wdlkit::TheoremViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const wdlkit::InternalContradiction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const wdlkit::NotWithNegation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
