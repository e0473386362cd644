// Command line front end: validate, homology, continuation, export.
#include "mbh/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace mbh;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1; // usage / IO / schema
constexpr int kExitMath = 2;  // mathematical validation failure

int classify(const Error& e) {
    return e.code() == ErrorCode::SchemaError ? kExitUsage : kExitMath;
}

int cmd_validate(const std::string& path, const std::string& format) {
    try {
        FlowCategory fc = load_flow_category(resolve_input_path(path));
        if (format == "json") {
            json j;
            j["ok"] = true;
            j["name"] = fc.name;
            j["violations"] = json::array();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "valid: " << fc.name << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        if (format == "json") {
            json j;
            j["ok"] = false;
            j["error"] = e.what();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << e.what() << "\n";
        }
        return classify(e);
    }
}

int cmd_homology(const std::string& path, int k_max, const std::string& format) {
    try {
        FlowCategory fc = load_flow_category(resolve_input_path(path));
        MorseBottComplex mc = assemble(fc, k_max);
        HomologyGroups h = mc.boundary().dims.empty()
                               ? HomologyGroups{}
                               : homology_of_complex(mc.boundary());
        if (format == "json") {
            json j;
            j["name"] = fc.name;
            j["truncated"] = mc.truncated();
            j["homology"] = json::array();
            for (size_t k = 0; k < h.groups.size(); ++k) {
                json g;
                g["degree"] = k;
                g["betti"] = h.groups[k].betti;
                g["torsion"] = json::array();
                for (const auto& t : h.groups[k].torsion)
                    g["torsion"].push_back(t.convert_to<long long>());
                j["homology"].push_back(std::move(g));
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << h.to_string() << "\n";
            if (mc.truncated())
                std::cout << "note: top degree is provisional (k-max truncation)\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return classify(e);
    }
}

int cmd_continuation(const std::string& src_path, const std::string& dst_path,
                     const std::string& cont_path, const std::string& homotopy_path) {
    try {
        FlowCategory src = load_flow_category(resolve_input_path(src_path));
        FlowCategory dst = load_flow_category(resolve_input_path(dst_path));
        ContinuationData cd =
            load_continuation(resolve_input_path(cont_path), src, dst);

        ValidationReport rep = continuation_boundary_validate(cd);
        if (!rep.ok()) {
            std::cerr << "boundary strata: FAIL\n" << rep.to_string();
            return kExitMath;
        }
        std::cout << "boundary strata: OK\n";

        MorseBottComplex cs = assemble(src), ct = assemble(dst);
        std::vector<IntMatrix> F = chain_map_from_continuation(cd, cs, ct);
        if (!verify_chain_map(F, cs.boundary(), ct.boundary())) {
            std::cerr << "chain map: FAIL\n";
            return kExitMath;
        }
        std::cout << "chain map: OK\n";

        auto induced = induced_map_on_homology(F, cs.boundary(), ct.boundary());
        bool identity = true;
        for (size_t k = 0; k < induced.size(); ++k) {
            const auto& d = induced[k];
            std::cout << "H_" << k << ": " << (d.iso ? "iso" : "not-iso");
            bool is_id = d.matrix.rows() == d.matrix.cols();
            if (is_id)
                for (int i = 0; i < d.matrix.rows() && is_id; ++i)
                    for (int j = 0; j < d.matrix.cols() && is_id; ++j)
                        if (d.matrix(i, j) != ((i == j) ? 1 : 0)) is_id = false;
            identity = identity && is_id;
            std::cout << " matrix ";
            if (d.matrix.rows() == 0 || d.matrix.cols() == 0)
                std::cout << "[]";
            else {
                std::cout << "[";
                for (int i = 0; i < d.matrix.rows(); ++i) {
                    if (i) std::cout << "; ";
                    for (int j = 0; j < d.matrix.cols(); ++j) {
                        if (j) std::cout << " ";
                        std::cout << d.matrix(i, j);
                    }
                }
                std::cout << "]";
            }
            std::cout << "\n";
        }
        if (identity) std::cout << "induced: identity\n";

        if (!homotopy_path.empty()) {
            auto lh = load_homotopy(resolve_input_path(homotopy_path));
            bool ok = verify_chain_homotopy(lh->data);
            std::cout << "chain homotopy: " << (ok ? "OK" : "FAIL") << "\n";
            if (!ok) return kExitMath;
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return classify(e);
    }
}

int cmd_export(const std::string& path, const std::string& out) {
    try {
        FlowCategory fc = load_flow_category(resolve_input_path(path));
        MorseBottComplex mc = assemble(fc);
        std::ofstream os(out);
        if (!os) {
            std::cerr << "cannot write " << out << "\n";
            return kExitUsage;
        }
        os << serialize_boundary_matrices(mc) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return classify(e);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse-Bott chain complex toolkit"};
    app.require_subcommand(1);

    std::string path, src, dst, cont, homotopy, out;
    std::string format = "text";
    int k_max = -1;

    auto* validate = app.add_subcommand("validate", "run all structural validators");
    validate->add_option("file", path)->required();
    validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* homology = app.add_subcommand("homology", "compute integral homology");
    homology->add_option("file", path)->required();
    homology->add_option("--k-max", k_max);
    homology->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* continuation =
        app.add_subcommand("continuation", "verify continuation data and induced maps");
    continuation->add_option("source", src)->required();
    continuation->add_option("target", dst)->required();
    continuation->add_option("continuation", cont)->required();
    continuation->add_option("--homotopy", homotopy);

    auto* exp = app.add_subcommand("export", "write boundary matrices as JSON");
    exp->add_option("file", path)->required();
    exp->add_option("--matrices", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (validate->parsed()) return cmd_validate(path, format);
    if (homology->parsed()) return cmd_homology(path, k_max, format);
    if (continuation->parsed()) return cmd_continuation(src, dst, cont, homotopy);
    if (exp->parsed()) return cmd_export(path, out);
    return kExitUsage;
}
