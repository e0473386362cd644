#include "mbh/io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef MBHOM_DEFAULT_FIXTURES
#define MBHOM_DEFAULT_FIXTURES ""
#endif

namespace mbh {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::SchemaError, "not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::SchemaError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw Error(ErrorCode::SchemaError, where + ": expected an integer");
    return Int(j.get<long long>());
}

int get_small_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw Error(ErrorCode::SchemaError, where + ": expected an integer");
    return int(j.get<long long>());
}

std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string())
        throw Error(ErrorCode::SchemaError, where + ": expected a string");
    return j.get<std::string>();
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::SchemaError, where + ": missing key '" + key + "'");
    return j.at(key);
}

Cubulation parse_complex(const json& j, const std::string& where) {
    Cubulation K;
    for (const auto& cj : need(j, "cells", where)) {
        std::string id = get_string(need(cj, "id", where), where + ".cells.id");
        int dim = get_small_int(need(cj, "dim", where), where + ".cells.dim");
        K.add_cell(id, dim);
    }
    int idx = 0;
    for (const auto& cj : need(j, "cells", where)) {
        if (cj.contains("boundary"))
            for (const auto& e : cj.at("boundary")) {
                if (!e.is_array() || e.size() != 4)
                    throw Error(ErrorCode::SchemaError,
                                where + ": boundary entries are [sign, axis, side, cell_id]");
                K.add_boundary(idx, get_small_int(e[0], where),
                               get_small_int(e[1], where), get_small_int(e[2], where),
                               get_string(e[3], where));
            }
        ++idx;
    }
    if (j.contains("fundamental")) {
        CellChain f;
        for (const auto& t : j.at("fundamental")) {
            if (!t.is_array() || t.size() != 2)
                throw Error(ErrorCode::SchemaError,
                            where + ": fundamental entries are [coeff, cell_id]");
            int c = K.find(get_string(t[1], where));
            if (c < 0)
                throw Error(ErrorCode::SchemaError,
                            where + ": fundamental names unknown cell");
            chain_add(f, c, get_int(t[0], where));
        }
        K.fundamental = f;
    }
    return K;
}

ModuliPiece parse_piece(const json& pj, const std::string& where, bool continuation) {
    ModuliPiece piece;
    piece.bundle.base_component =
        get_string(need(pj, "base_component", where), where + ".base_component");
    piece.bundle.fiber = parse_complex(need(pj, "fiber", where), where + ".fiber");
    if (pj.contains("orientation_coeff"))
        piece.bundle.orientation_coeff = get_int(pj.at("orientation_coeff"), where);
    for (const auto& ej : need(pj, "endpoint_map", where)) {
        std::string cid = get_string(need(ej, "cell_id", where), where);
        std::vector<std::pair<Int, std::string>> img;
        for (const auto& t : need(ej, "image", where)) {
            if (!t.is_array() || t.size() != 2)
                throw Error(ErrorCode::SchemaError,
                            where + ": image entries are [coeff, target_cell_id]");
            img.emplace_back(get_int(t[0], where), get_string(t[1], where));
        }
        piece.endpoint_images[cid] = std::move(img);
    }
    if (pj.contains("strata"))
        for (const auto& sj : pj.at("strata")) {
            StratumLabel s;
            s.fiber_boundary_cell =
                get_string(need(sj, "fiber_boundary_cell", where), where);
            s.via_index = get_small_int(need(sj, "via_index", where), where);
            s.left_cell = get_string(need(sj, "left_cell", where), where);
            s.right_cell = get_string(need(sj, "right_cell", where), where);
            if (continuation) {
                std::string fam = get_string(need(sj, "family", where), where);
                if (fam == "left")
                    s.family = 1;
                else if (fam == "right")
                    s.family = -1;
                else
                    throw Error(ErrorCode::SchemaError,
                                where + ": stratum family must be left or right");
            }
            piece.strata.push_back(std::move(s));
        }
    return piece;
}

} // namespace

FlowCategory parse_flow_category(const std::string& json_text) {
    json j = parse_json(json_text);
    FlowCategory fc;
    fc.name = get_string(need(j, "name", "document"), "name");
    fc.m = get_small_int(need(j, "top_index", "document"), "top_index");
    for (const auto& lj : need(j, "levels", "document")) {
        int index = get_small_int(need(lj, "index", "levels"), "levels.index");
        CriticalLevel lv;
        lv.index = index;
        for (const auto& cj : need(lj, "components", "levels")) {
            LevelComponent comp;
            comp.id = get_string(need(cj, "id", "components"), "components.id");
            comp.dim = get_small_int(need(cj, "dim", "components"), "components.dim");
            comp.complex = parse_complex(cj, "component " + comp.id);
            lv.components.push_back(std::move(comp));
        }
        if (fc.levels.count(index))
            throw Error(ErrorCode::SchemaError,
                        "duplicate level index " + std::to_string(index));
        fc.levels.emplace(index, std::move(lv));
    }
    if (j.contains("moduli"))
        for (const auto& mj : j.at("moduli")) {
            ModuliBundle b;
            b.from = get_small_int(need(mj, "from", "moduli"), "moduli.from");
            b.to = get_small_int(need(mj, "to", "moduli"), "moduli.to");
            for (const auto& pj : need(mj, "pieces", "moduli"))
                b.pieces.push_back(parse_piece(pj, "moduli piece", false));
            fc.moduli.push_back(std::move(b));
        }
    fc.finalize();
    ValidationReport rep = validate_flow_category(fc);
    if (!rep.ok())
        throw Error(ErrorCode::ValidationError, rep.to_string());
    return fc;
}

FlowCategory load_flow_category(const std::string& path) {
    return parse_flow_category(read_file(path));
}

std::string serialize_flow_category(const FlowCategory& fc) {
    json j;
    j["name"] = fc.name;
    j["top_index"] = fc.m;
    j["levels"] = json::array();
    auto complex_json = [](const Cubulation& K) {
        json cj;
        cj["cells"] = json::array();
        for (int i = 0; i < K.size(); ++i) {
            json cell;
            cell["id"] = K.cell(i).id;
            cell["dim"] = K.cell(i).dim;
            cell["boundary"] = json::array();
            for (const auto& e : K.cell(i).boundary)
                cell["boundary"].push_back(
                    {e.sign, e.axis, e.side, K.cell(e.target).id});
            cj["cells"].push_back(std::move(cell));
        }
        if (K.fundamental) {
            cj["fundamental"] = json::array();
            for (const auto& [c, k] : *K.fundamental)
                cj["fundamental"].push_back({k.convert_to<long long>(), K.cell(c).id});
        }
        return cj;
    };
    for (const auto& [i, lv] : fc.levels) {
        json lj;
        lj["index"] = i;
        lj["components"] = json::array();
        for (const auto& comp : lv.components) {
            json cj = complex_json(comp.complex);
            cj["id"] = comp.id;
            cj["dim"] = comp.dim;
            lj["components"].push_back(std::move(cj));
        }
        j["levels"].push_back(std::move(lj));
    }
    j["moduli"] = json::array();
    for (const auto& b : fc.moduli) {
        json mj;
        mj["from"] = b.from;
        mj["to"] = b.to;
        mj["pieces"] = json::array();
        for (const auto& piece : b.pieces) {
            json pj;
            pj["base_component"] = piece.bundle.base_component;
            pj["orientation_coeff"] =
                piece.bundle.orientation_coeff.convert_to<long long>();
            pj["fiber"] = complex_json(piece.bundle.fiber);
            pj["endpoint_map"] = json::array();
            for (const auto& [cid, img] : piece.endpoint_images) {
                json ej;
                ej["cell_id"] = cid;
                ej["image"] = json::array();
                for (const auto& [k, tid] : img)
                    ej["image"].push_back({k.convert_to<long long>(), tid});
                pj["endpoint_map"].push_back(std::move(ej));
            }
            pj["strata"] = json::array();
            for (const auto& s : piece.strata) {
                json sj;
                sj["fiber_boundary_cell"] = s.fiber_boundary_cell;
                sj["via_index"] = s.via_index;
                sj["left_cell"] = s.left_cell;
                sj["right_cell"] = s.right_cell;
                pj["strata"].push_back(std::move(sj));
            }
            mj["pieces"].push_back(std::move(pj));
        }
        j["moduli"].push_back(std::move(mj));
    }
    return j.dump(2);
}

ContinuationData parse_continuation(const std::string& json_text,
                                    const FlowCategory& source,
                                    const FlowCategory& target) {
    json j = parse_json(json_text);
    ContinuationData cd;
    cd.name = get_string(need(j, "name", "document"), "name");
    cd.source_name = get_string(need(j, "source", "document"), "source");
    cd.target_name = get_string(need(j, "target", "document"), "target");
    if (cd.source_name != source.name || cd.target_name != target.name)
        throw Error(ErrorCode::SchemaError,
                    "continuation endpoints (" + cd.source_name + " -> " +
                        cd.target_name + ") do not match the given categories (" +
                        source.name + " -> " + target.name + ")");
    cd.source = &source;
    cd.target = &target;
    if (j.contains("degree_shift"))
        cd.degree_shift = get_small_int(j.at("degree_shift"), "degree_shift");
    for (const auto& bj : need(j, "bundles", "document")) {
        ContinuationBundle b;
        b.from = get_small_int(need(bj, "from", "bundles"), "bundles.from");
        b.to = get_small_int(need(bj, "to", "bundles"), "bundles.to");
        if (bj.contains("pieces"))
            for (const auto& pj : bj.at("pieces"))
                b.pieces.push_back(parse_piece(pj, "continuation piece", true));
        if (bj.contains("transfers"))
            for (const auto& tj : bj.at("transfers")) {
                TransferAssignment tr;
                tr.base_component =
                    get_string(need(tj, "base_component", "transfers"), "transfers");
                for (const auto& ij : need(tj, "images", "transfers")) {
                    std::string cid = get_string(need(ij, "cell_id", "transfers"),
                                                 "transfers");
                    std::vector<std::pair<Int, std::string>> img;
                    for (const auto& t : need(ij, "image", "transfers")) {
                        if (!t.is_array() || t.size() != 2)
                            throw Error(ErrorCode::SchemaError,
                                        "transfer image entries are [coeff, cell_id]");
                        img.emplace_back(get_int(t[0], "transfers"),
                                         get_string(t[1], "transfers"));
                    }
                    tr.images[cid] = std::move(img);
                }
                b.transfers.push_back(std::move(tr));
            }
        cd.bundles.push_back(std::move(b));
    }
    cd.finalize();
    ValidationReport rep = cd.validate();
    if (!rep.ok())
        throw Error(ErrorCode::ValidationError, rep.to_string());
    return cd;
}

ContinuationData load_continuation(const std::string& path,
                                   const FlowCategory& source,
                                   const FlowCategory& target) {
    return parse_continuation(read_file(path), source, target);
}

std::unique_ptr<LoadedHomotopy> load_homotopy(const std::string& path) {
    json j = parse_json(read_file(path));
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    auto rel = [&](const std::string& p) { return (dir / p).string(); };

    auto lh = std::make_unique<LoadedHomotopy>();
    lh->f1 = std::make_unique<FlowCategory>(
        load_flow_category(rel(get_string(need(j, "f1", "homotopy"), "f1"))));
    lh->f2 = std::make_unique<FlowCategory>(
        load_flow_category(rel(get_string(need(j, "f2", "homotopy"), "f2"))));
    lh->f3 = std::make_unique<FlowCategory>(
        load_flow_category(rel(get_string(need(j, "f3", "homotopy"), "f3"))));
    lh->f4 = std::make_unique<FlowCategory>(
        load_flow_category(rel(get_string(need(j, "f4", "homotopy"), "f4"))));
    lh->F21 = std::make_unique<ContinuationData>(load_continuation(
        rel(get_string(need(j, "F21", "homotopy"), "F21")), *lh->f1, *lh->f2));
    lh->F31 = std::make_unique<ContinuationData>(load_continuation(
        rel(get_string(need(j, "F31", "homotopy"), "F31")), *lh->f1, *lh->f3));
    lh->F42 = std::make_unique<ContinuationData>(load_continuation(
        rel(get_string(need(j, "F42", "homotopy"), "F42")), *lh->f2, *lh->f4));
    lh->F43 = std::make_unique<ContinuationData>(load_continuation(
        rel(get_string(need(j, "F43", "homotopy"), "F43")), *lh->f3, *lh->f4));

    lh->data.f1 = lh->f1.get();
    lh->data.f2 = lh->f2.get();
    lh->data.f3 = lh->f3.get();
    lh->data.f4 = lh->f4.get();
    lh->data.F21 = lh->F21.get();
    lh->data.F31 = lh->F31.get();
    lh->data.F42 = lh->F42.get();
    lh->data.F43 = lh->F43.get();

    ContinuationData& H = lh->data.H;
    H.name = get_string(need(j, "name", "homotopy"), "name");
    H.source_name = lh->f1->name;
    H.target_name = lh->f4->name;
    H.source = lh->f1.get();
    H.target = lh->f4.get();
    H.degree_shift = 1;
    if (j.contains("h_bundles"))
        for (const auto& bj : j.at("h_bundles")) {
            ContinuationBundle b;
            b.from = get_small_int(need(bj, "from", "h_bundles"), "h_bundles.from");
            b.to = get_small_int(need(bj, "to", "h_bundles"), "h_bundles.to");
            if (bj.contains("pieces"))
                for (const auto& pj : bj.at("pieces"))
                    b.pieces.push_back(parse_piece(pj, "homotopy piece", false));
            H.bundles.push_back(std::move(b));
        }
    H.finalize();
    ValidationReport rep = H.validate();
    if (!rep.ok())
        throw Error(ErrorCode::ValidationError, rep.to_string());
    return lh;
}

std::string serialize_boundary_matrices(const MorseBottComplex& mc) {
    json j;
    j["degrees"] = json::array();
    j["generators"] = json::object();
    j["matrices"] = json::object();
    const auto& b = mc.boundary();
    for (int k = 0; k <= b.top(); ++k) {
        j["degrees"].push_back(k);
        json gens = json::array();
        for (const auto& g : mc.generators()[size_t(k)]) gens.push_back(g.id);
        j["generators"][std::to_string(k)] = std::move(gens);
        IntMatrix m = b.d_at(k);
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c)
                row.push_back(m(r, c).convert_to<long long>());
            rows.push_back(std::move(row));
        }
        j["matrices"][std::to_string(k)] = std::move(rows);
    }
    return j.dump(2);
}

std::string resolve_input_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* env = std::getenv("MBHOM_FIXTURES")) {
        fs::path p = fs::path(env) / path;
        if (fs::exists(p)) return p.string();
    }
    std::string def = MBHOM_DEFAULT_FIXTURES;
    if (!def.empty()) {
        fs::path p = fs::path(def) / path;
        if (fs::exists(p)) return p.string();
    }
    return path; // caller reports the open failure
}

} // namespace mbh
