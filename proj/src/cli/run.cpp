#include "hclat/cli.hpp"

#include "hclat/builders.hpp"
#include "hclat/excitation.hpp"
#include "hclat/json_io.hpp"
#include "hclat/sublattice.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <sstream>

namespace hcl::cli {

namespace {

struct Outcome {
    Json inputs = Json::object();
    Json results = Json::object();
    Json provenance = Json::object();
    int code = ok;
    std::string text;  // printed verbatim instead of JSON when set
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

Json signatures_json(const std::set<Signature>& sigs) {
    Json a = Json::array();
    for (const auto& s : sigs) a.push_back(s);
    return a;
}

Json sites_json(std::span<const Site> sites) {
    Json a = Json::array();
    for (const Site& s : sites) a.push_back(to_json(s));
    return a;
}

LayerFamily layer_family(const std::string& name) {
    if (name == "d5-triangular") return LayerFamily::d5_triangular;
    if (name == "d6-triangular") return LayerFamily::d6_triangular;
    if (name == "d6-rhombic") return LayerFamily::d6_rhombic;
    if (name == "2l2-triangular") return LayerFamily::l2_triangular;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::optional<bool> perfect_if_decidable(const PeriodicConfiguration& pc, std::int64_t d2) {
    if (!is_supported(d2)) return std::nullopt;
    return is_perfect(pc, d2);
}

// The table row constructor for each D^2 with a force table.
PeriodicConfiguration representative(std::int64_t d2) {
    switch (d2) {
        case 1: return build_cubic(1);
        case 2: return build_fcc(1);
        case 3: return build_bcc(2);
        case 4: return build_d4_family({});
        case 5: return build_layered_d5(0, "01");
        case 6: return build_layered_d6_tri(0, "025");
        case 8: return build_fcc(2);
        case 9: return build_phi9(1, 0);
        case 10: return build_phi10(0, 0);
        case 12: return build_bcc(4);
        default: throw UnsupportedD2(d2);
    }
}

bool golden_check(const std::string& dir, const BallSearchReport& r, Json& results) {
    const Json sm = read_json_file(dir + "/second_max.json");
    const std::string key = std::to_string(r.d2);
    bool match = sm.contains("second_max") && sm["second_max"].contains(key) &&
                 sm["second_max"][key] == to_json(r.second_max);
    if (r.d2 >= 2 && r.d2 <= 4) {
        const Json sig = read_json_file(dir + "/signatures_d2_" + key + ".json");
        match = match && sig["signatures"] == signatures_json(r.signatures);
    }
    results["golden"] = match ? "match" : "mismatch";
    return match;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hard-core lattice gas ground states on Z^3", "hclat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", version);

    unsigned threads = 1;
    bool raw = false;
    bool json_flag = true;
    app.add_option("--threads", threads, "worker threads; results do not depend on it")->check(CLI::Range(1u, 256u));
    app.add_flag("--raw", raw, "print the results payload without the envelope");
    app.add_flag("--json", json_flag, "JSON output (default)");

    std::string command;
    std::function<Outcome()> action;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->parse_complete_callback([&, parent, sub] { command = parent->get_name() + " " + sub->get_name(); });
        return sub;
    };

    // forces
    CLI::App* forces = app.add_subcommand("forces", "local repelling force families");
    forces->require_subcommand(1);
    std::int64_t d2 = 0;
    std::string golden_dir;

    CLI::App* f_table = leaf(forces, "table", "force table and normalization constant");
    f_table->add_option("--d2", d2, "squared exclusion distance")->required();
    f_table->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs["d2"] = d2;
            const ForceTable t = force_table(d2);
            o.results["d2"] = d2;
            o.results["ball_radius_sq"] = t.ball_radius_sq;
            Json f = Json::object();
            for (const auto& [q, v] : t.forces) f[std::to_string(q)] = to_json(v);
            o.results["forces"] = f;
            o.results["normalization_constant"] = to_json(normalization_constant(t));
            o.provenance = {{"forces", "published"}, {"normalization_constant", "published"}};
            return o;
        };
    });

    CLI::App* f_verify = leaf(forces, "verify", "exhaustive ball search");
    f_verify->add_option("--d2", d2)->required();
    f_verify->add_option("--golden", golden_dir, "directory with reference second maxima and signatures");
    f_verify->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs["d2"] = d2;
            if (!golden_dir.empty()) o.inputs["golden"] = golden_dir;
            err << "searching admissible subsets of the D^2=" << d2 << " ball\n";
            const BallSearchReport r = verify_forces(d2, threads);
            o.results["d2"] = r.d2;
            o.results["config_count"] = r.config_count;
            o.results["fstar"] = to_json(r.fstar);
            o.results["second_max"] = to_json(r.second_max);
            o.results["peierls_gap"] = to_json(Rational(1) - r.second_max);
            o.results["max_occupancy"] = r.max_occupancy;
            o.results["signatures"] = signatures_json(r.signatures);
            bool pass = r.fstar == Rational(1);
            if (!golden_dir.empty()) pass = golden_check(golden_dir, r, o.results) && pass;
            o.provenance = {{"fstar", "published"},
                            {"max_occupancy", "published"},
                            {"signatures", d2 >= 5 ? "published" : "derived"},
                            {"second_max", "derived"},
                            {"config_count", "derived"}};
            o.code = pass ? ok : check_failed;
            return o;
        };
    });

    CLI::App* f_bounds = leaf(forces, "bounds", "largest and second largest force by branch and bound");
    f_bounds->add_option("--d2", d2)->required();
    f_bounds->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs["d2"] = d2;
            const ForceBounds b = force_bounds(d2);
            o.results["fstar"] = to_json(b.fstar);
            o.results["second_max"] = to_json(b.second_max);
            o.results["peierls_gap"] = to_json(Rational(1) - b.second_max);
            o.results["nodes"] = b.nodes;
            o.provenance = {{"fstar", "published"}, {"second_max", "derived"}};
            o.code = b.fstar == Rational(1) ? ok : check_failed;
            return o;
        };
    });

    // pc
    CLI::App* pc = app.add_subcommand("pc", "perfect configurations");
    pc->require_subcommand(1);
    std::string family, seq = "0", in_file;
    int index = 0;
    std::int64_t l = 1, n = 1;
    D4Spec d4;
    std::string layer_masks = "0", column_shifts = "0";

    CLI::App* p_build = leaf(pc, "build", "construct a configuration");
    p_build->add_option("--d2", d2)->required();
    p_build->add_option("--family", family,
                        "cubic | fcc | bcc | phi9 | phi10 | d5-triangular | d6-triangular | d6-rhombic | "
                        "2l2-triangular | d4")
        ->required();
    p_build->add_option("--i", index, "diagonal index, or the axis for phi9");
    p_build->add_option("--seq", seq, "one period of the layer sequence");
    p_build->add_option("--l", l, "scale, BCC side, or lattice label for phi9/phi10");
    p_build->add_option("--axis", d4.axis, "d4: stacking axis")->check(CLI::Range(1, 3));
    p_build->add_option("--parity", d4.parity, "d4: layer parity")->check(CLI::Range(0, 1));
    p_build->add_option("--line-axis", d4.line_axis, "d4: in-plane axis the shifted lines run along")
        ->check(CLI::Range(1, 2));
    p_build->add_option("--layer-masks", layer_masks, "d4: comma separated 0/1 line masks, one per layer");
    p_build->add_option("--column-shifts", column_shifts, "d4: comma separated 0/1 rows of column lifts");
    p_build->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs = {{"d2", d2}, {"family", family}, {"i", index}, {"seq", seq}, {"l", l}};
            std::optional<PeriodicConfiguration> built;
            if (family == "cubic") built = build_cubic(l);
            else if (family == "fcc") built = build_fcc(l);
            else if (family == "bcc") built = build_bcc(l);
            else if (family == "phi9") built = build_phi9(index, static_cast<int>(l));
            else if (family == "phi10") built = build_phi10(index, static_cast<int>(l));
            else if (family == "d4") {
                d4.layer_masks = split(layer_masks, ',');
                d4.column_shifts = split(column_shifts, ',');
                o.inputs["layer_masks"] = d4.layer_masks;
                o.inputs["column_shifts"] = d4.column_shifts;
                built = build_d4_family(d4);
            } else built = build_layered({layer_family(family), index, seq}, l);
            PeriodicConfiguration config = *built;
            config.set_context_d2(d2);
            o.results["configuration"] = to_json(config);
            o.results["shift_count"] = shift_count(config);
            o.results["density"] = to_json(density(config));
            o.results["admissible"] = is_admissible(config, d2);
            if (!is_admissible(config, d2)) {
                o.code = check_failed;
                return o;
            }
            const auto perfect = perfect_if_decidable(config, d2);
            o.results["perfect"] = perfect ? Json(*perfect) : Json(nullptr);
            o.results["saturated"] = is_saturated(config, d2);
            if (is_supported(d2))
                o.results["reciprocal_normalization"] =
                    density(config) * normalization_constant(force_table(d2)) == Rational(1);
            o.provenance = {{"density", "published"}, {"perfect", "derived"}};
            if (perfect == false) o.code = check_failed;
            return o;
        };
    });

    CLI::App* p_check = leaf(pc, "check", "perfection, admissibility and saturation of a configuration file");
    p_check->add_option("--d2", d2)->required();
    p_check->add_option("--in", in_file, "configuration JSON")->required();
    p_check->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs = {{"d2", d2}, {"in", in_file}};
            const PeriodicConfiguration config = configuration_from_json(read_json_file(in_file));
            o.results["density"] = to_json(density(config));
            o.results["shift_count"] = shift_count(config);
            const bool admissible = is_admissible(config, d2);
            o.results["admissible"] = admissible;
            if (!admissible) {
                o.code = check_failed;
                return o;
            }
            const auto perfect = perfect_if_decidable(config, d2);
            o.results["perfect"] = perfect ? Json(*perfect) : Json(nullptr);
            o.results["saturated"] = is_saturated(config, d2);
            o.provenance = {{"perfect", "derived"}, {"saturated", "derived"}};
            if (perfect == false) o.code = check_failed;
            return o;
        };
    });

    CLI::App* p_census = leaf(pc, "census", "number of periodic perfect configurations");
    p_census->add_option("--d2", d2)->required();
    p_census->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs["d2"] = d2;
            const CensusResult c = pc_census(d2);
            if (c.count) o.results["count"] = *c.count;
            else o.results["count"] = c.marker;
            if (d2 == 5) o.results["hcp_family"] = hcp_census();
            o.provenance = {{"count", "published"}};
            if (d2 == 5) o.provenance["hcp_family"] = "published";
            return o;
        };
    });

    CLI::App* p_slide = leaf(pc, "slide", "particles removed when gluing the column-lifted prism into 2Z^3");
    p_slide->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    p_slide->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    p_slide->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs = {{"l", l}, {"n", n}};
            const std::int64_t removed = sliding_witness(l, n);
            o.results["removed"] = removed;
            o.results["bound"] = 2 * l * l;
            o.results["within_bound"] = removed <= 2 * l * l;
            o.provenance = {{"bound", "published"}, {"removed", "derived"}};
            o.code = removed <= 2 * l * l ? ok : check_failed;
            return o;
        };
    });

    // exc
    CLI::App* exc = app.add_subcommand("exc", "excitations of perfect configurations");
    exc->require_subcommand(1);
    std::string pc_file, insert_file, remove_file, site_text;
    std::int64_t layers = 2, radius_sq = 8;
    int max_size = 3;
    std::optional<std::int64_t> d2_opt;

    auto load_sites = [](const std::string& path) {
        return path.empty() ? std::vector<Site>{} : sites_from_json(read_json_file(path));
    };
    auto resolved_d2 = [&](const PeriodicConfiguration& config) {
        if (d2_opt) return *d2_opt;
        if (config.context_d2()) return *config.context_d2();
        throw std::invalid_argument("--d2 is required when the configuration carries no d2");
    };

    CLI::App* e_classify = leaf(exc, "classify", "insertion type of a single site");
    e_classify->add_option("--d2", d2_opt);
    e_classify->add_option("--pc", pc_file)->required();
    e_classify->add_option("--site", site_text, "x,y,z")->required();
    e_classify->final_callback([&] {
        action = [&] {
            Outcome o;
            const auto config = configuration_from_json(read_json_file(pc_file));
            const std::int64_t dd = resolved_d2(config);
            const Site x = parse_site(site_text);
            o.inputs = {{"d2", dd}, {"pc", pc_file}, {"site", to_json(x)}};
            const Site single[] = {x};
            o.results["type"] = to_string(classify_insertion(config, x, dd));
            o.results["repelled"] = sites_json(repelled_set(config, single, dd));
            o.provenance = {{"type", "derived"}};
            return o;
        };
    });

    CLI::App* e_report = leaf(exc, "report", "energy and excesses of an insertion");
    e_report->add_option("--d2", d2_opt);
    e_report->add_option("--pc", pc_file)->required();
    e_report->add_option("--insert", insert_file, "JSON array of inserted sites");
    e_report->add_option("--remove", remove_file, "JSON array of removed sites");
    e_report->final_callback([&] {
        action = [&] {
            Outcome o;
            const auto config = configuration_from_json(read_json_file(pc_file));
            const std::int64_t dd = resolved_d2(config);
            const auto ins = load_sites(insert_file), rem = load_sites(remove_file);
            o.inputs = {{"d2", dd}, {"pc", pc_file}, {"insert", sites_json(ins)}, {"remove", sites_json(rem)}};
            const ExcitationReport r = excitation_report(config, ins, dd, rem);
            o.results["inserted"] = r.inserted;
            o.results["removed"] = r.removed;
            o.results["repelled"] = sites_json(r.repelled);
            Json ex = Json::array();
            for (const auto& [y, e] : r.excesses) ex.push_back({{"site", to_json(y)}, {"excess", to_json(e)}});
            o.results["excesses"] = ex;
            o.results["energy"] = r.energy;
            o.results["pc_perfect"] = r.pc_perfect;
            o.results["identity_holds"] = r.identity_holds;
            o.results["type"] = r.type ? Json(to_string(*r.type)) : Json(nullptr);
            o.provenance = {{"energy", "derived"}, {"excesses", "derived"}};
            if (r.pc_perfect && !r.identity_holds) o.code = check_failed;
            return o;
        };
    });

    CLI::App* e_peierls = leaf(exc, "peierls", "Peierls inequality for an excitation");
    e_peierls->add_option("--d2", d2_opt);
    e_peierls->add_option("--pc", pc_file)->required();
    e_peierls->add_option("--insert", insert_file);
    e_peierls->add_option("--remove", remove_file);
    e_peierls->final_callback([&] {
        action = [&] {
            Outcome o;
            const auto config = configuration_from_json(read_json_file(pc_file));
            const std::int64_t dd = resolved_d2(config);
            const auto ins = load_sites(insert_file), rem = load_sites(remove_file);
            o.inputs = {{"d2", dd}, {"pc", pc_file}, {"insert", sites_json(ins)}, {"remove", sites_json(rem)}};
            const PeierlsResult r = peierls_check(config, ins, dd, rem);
            o.results["holds"] = r.holds;
            o.results["hamiltonian"] = to_json(r.hamiltonian);
            o.results["support"] = r.support;
            o.results["ball_size"] = r.ball_size;
            o.results["gap"] = to_json(r.gap);
            o.results["slack"] = to_json(r.slack);
            o.provenance = {{"gap", "derived"}, {"holds", "derived"}};
            o.code = r.holds ? ok : check_failed;
            return o;
        };
    });

    CLI::App* e_iia = leaf(exc, "iia-density", "type IIa insertion sites per cell");
    e_iia->add_option("--d2", d2_opt);
    e_iia->add_option("--pc", pc_file)->required();
    e_iia->final_callback([&] {
        action = [&] {
            Outcome o;
            const auto config = configuration_from_json(read_json_file(pc_file));
            const std::int64_t dd = resolved_d2(config);
            o.inputs = {{"d2", dd}, {"pc", pc_file}};
            const IIaCensus c = iia_census(config, dd);
            o.results["count_per_cell"] = c.count;
            o.results["density"] = to_json(c.density);
            o.provenance = {{"density", "derived"}};
            return o;
        };
    });

    CLI::App* e_window = leaf(exc, "window-census", "irreducible low-energy insertion sets in a window");
    e_window->add_option("--d2", d2)->required();
    e_window->add_option("--layers", layers)->check(CLI::PositiveNumber);
    e_window->add_option("--radius", radius_sq, "squared radius of the window")->check(CLI::NonNegativeNumber);
    e_window->add_option("--max-size", max_size)->check(CLI::Range(1, 6));
    e_window->add_option("--pc", pc_file, "layered configuration (default: two-layer sequence 01)");
    e_window->add_option("--i", index, "main diagonal the layers are normal to");
    e_window->final_callback([&] {
        action = [&] {
            if (d2 != 5) throw std::invalid_argument("window census is implemented for D^2=5");
            Outcome o;
            const auto config = pc_file.empty() ? build_layered_d5(index, "01")
                                                : configuration_from_json(read_json_file(pc_file));
            o.inputs = {{"d2", d2}, {"layers", layers}, {"radius", radius_sq}, {"max_size", max_size}, {"i", index}};
            if (!pc_file.empty()) o.inputs["pc"] = pc_file;
            err << "scanning insertion sets of up to " << max_size << " sites\n";
            const WindowCensus w = window_census(config, d2, main_diagonal(index), 3, layers, radius_sq, max_size, threads);
            o.results["window_sites"] = w.window_sites;
            o.results["sets_examined"] = w.sets_examined;
            o.results["irreducible"] = w.irreducible;
            Json low = Json::array();
            for (const auto& s : w.low_energy) low.push_back(sites_json(s));
            o.results["low_energy"] = low;
            o.results["only_iia"] = w.only_iia;
            o.provenance = {{"only_iia", "derived"}};
            o.code = w.only_iia ? ok : check_failed;
            return o;
        };
    });

    // sublat
    CLI::App* sub = app.add_subcommand("sublat", "cubic and FCC sublattices");
    sub->require_subcommand(1);
    std::int64_t ell = 1;
    bool fcc = false, brute = false;
    std::string format = "json", quaternion_text;

    CLI::App* s_enum = leaf(sub, "enumerate", "all cubic (or FCC) l-sublattices");
    s_enum->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    s_enum->add_flag("--fcc", fcc);
    s_enum->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    s_enum->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs = {{"ell", ell}, {"fcc", fcc}};
            const auto classes = classify_classes(ell);
            std::map<Mat3, std::pair<std::size_t, int>> owner;
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (const Mat3& m : classes[c].members) owner[m] = {c, classes[c].stabilizer_order};
            Json rows = Json::array();
            for (const auto& s : enumerate_cubic_sublattices(ell)) {
                const Mat3 basis = fcc ? hermite_normal_form(fcc_from_cubic(s.orthogonal)) : s.hnf;
                const auto [cls, stab] = owner.at(s.hnf);
                rows.push_back({{"basis", to_json(basis)}, {"class", cls}, {"stabilizer_order", stab}});
            }
            o.results["count"] = rows.size();
            o.results["sublattices"] = rows;
            o.provenance = {{"sublattices", "derived"}};
            if (format == "csv") {
                std::ostringstream csv;
                csv << "b11,b12,b13,b21,b22,b23,b31,b32,b33,class,stabilizer_order\n";
                for (const auto& r : rows) {
                    for (const auto& row : r["basis"])
                        for (const auto& v : row) csv << v.get<std::int64_t>() << ',';
                    csv << r["class"].get<std::size_t>() << ',' << r["stabilizer_order"].get<int>() << '\n';
                }
                o.text = csv.str();
            }
            return o;
        };
    });

    CLI::App* s_classes = leaf(sub, "classes", "O_h classes with formula comparison");
    s_classes->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    s_classes->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs["ell"] = ell;
            Json cls = Json::array();
            for (const auto& c : classify_classes(ell)) {
                Json params = Json::array();
                for (const auto& p : c.parameters) params.push_back(p);
                cls.push_back({{"size", c.size},
                               {"stabilizer_order", c.stabilizer_order},
                               {"representative", to_json(c.members.front())},
                               {"parameters", params}});
            }
            o.results["classes"] = cls;
            const auto cmp = compare_class_counts(ell);
            Json oracle = Json::object(), formula = Json::object();
            for (const auto& [k, v] : cmp.oracle) oracle[std::to_string(k)] = v;
            for (const auto& [k, v] : cmp.formula) formula[std::to_string(k)] = v;
            o.results["oracle_counts"] = oracle;
            o.results["formula_counts"] = formula;
            o.results["mismatch"] = cmp.mismatch;
            o.results["r_residual"] = r_residual(ell);
            const auto acc = solution_accounting(ell);
            o.results["solution_accounting"] = {
                {"class_total", acc.class_total}, {"r3", acc.r3}, {"unextended", sites_json(acc.unextended)}};
            o.provenance = {{"oracle_counts", "derived"}, {"formula_counts", "published"}};
            return o;
        };
    });

    CLI::App* s_r3 = leaf(sub, "r3", "number of integer solutions of m^2+n^2+k^2=l^2");
    s_r3->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    s_r3->add_flag("--brute", brute);
    s_r3->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs = {{"ell", ell}, {"brute", brute}};
            const std::int64_t formula = r3_formula(ell);
            o.results["r3"] = formula;
            o.provenance = {{"r3", "published"}};
            if (brute) {
                const std::int64_t b = r3_brute(ell);
                o.results["r3"] = b;
                o.results["formula"] = formula;
                o.results["agree"] = b == formula;
                o.provenance["r3"] = "derived";
                if (b != formula) o.code = check_failed;
            }
            return o;
        };
    });

    CLI::App* s_quat = leaf(sub, "quaternion", "Euler-Rodrigues sublattice of a quaternion");
    s_quat->add_option("z", quaternion_text, "a,b,c,d")->required();
    s_quat->final_callback([&] {
        action = [&] {
            Outcome o;
            const auto parts = split(quaternion_text, ',');
            if (parts.size() != 4) throw std::invalid_argument("expected a quaternion as a,b,c,d");
            Quaternion z;
            try {
                z = {std::stoll(parts[0]), std::stoll(parts[1]), std::stoll(parts[2]), std::stoll(parts[3])};
            } catch (const std::exception&) {
                throw std::invalid_argument("expected a quaternion as a,b,c,d");
            }
            o.inputs["z"] = {z.a, z.b, z.c, z.d};
            const Mat3 m = euler_rodrigues(z);
            o.results["ell"] = z.norm_sq();
            o.results["matrix"] = to_json(m);
            o.results["canonical"] = to_json(hermite_normal_form(m));
            o.results["fcc_basis"] = to_json(fcc_from_cubic(m));
            o.results["det"] = det(m);
            o.provenance = {{"matrix", "derived"}};
            return o;
        };
    });

    CLI::App* s_fcc = leaf(sub, "fcc-census", "FCC l-sublattices and the D^2=2l^2 configuration count");
    s_fcc->add_option("--ell", ell)->required()->check(CLI::PositiveNumber);
    s_fcc->final_callback([&] {
        action = [&] {
            Outcome o;
            o.inputs["ell"] = ell;
            const FccCensus c = fcc_census(ell);
            o.results["sublattices"] = c.sublattices;
            o.results["configurations"] = c.configurations ? Json(*c.configurations) : Json("ℵ₀");
            o.results["continuum"] = c.continuum;
            o.provenance = {{"configurations", "published"}};
            return o;
        };
    });

    // table
    CLI::App* table = app.add_subcommand("table", "summary tables");
    table->require_subcommand(1);
    CLI::App* t_dens = leaf(table, "densities", "census and density per D^2");
    t_dens->final_callback([&] {
        action = [&] {
            Outcome o;
            Json rows = Json::array();
            for (std::int64_t dd : supported_d2()) {
                const auto config = representative(dd);
                Json census;
                if (dd == 1) census = orbit_census({config});
                else if (const auto c = pc_census(dd); c.count) census = *c.count;
                else census = c.marker;
                rows.push_back({{"d2", std::to_string(dd)},
                                {"census", census},
                                {"density", to_json(density(config))},
                                {"reciprocal_normalization",
                                 density(config) * normalization_constant(force_table(dd)) == Rational(1)}});
            }
            for (std::int64_t ll : {4, 5}) {
                const FccCensus c = fcc_census(ll);
                rows.push_back({{"d2", "2l^2, l=" + std::to_string(ll)},
                                {"census", *c.configurations},
                                {"density", to_json(density(build_fcc(ll)))}});
            }
            rows.push_back({{"d2", "2l^2, l=3"},
                            {"census", "ℵ₀"},
                            {"density", to_json(density(build_layered_2l2(3, 0, "01")))}});
            o.results["rows"] = rows;
            o.provenance = {{"census", "published"}, {"density", "published"}};
            return o;
        };
    });

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion& e) {
        out << version << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }
    if (!action) {
        err << app.help();
        return usage_error;
    }

    Outcome o;
    try {
        o = action();
    } catch (const InadmissibleConfiguration& e) {
        err << "check failed: " << e.what() << "\n";
        return check_failed;
    } catch (const UnclassifiableSite& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    if (!o.text.empty()) {
        out << o.text;
    } else if (raw) {
        out << o.results.dump(2) << "\n";
    } else {
        Json env;
        env["command"] = command;
        env["version"] = version;
        env["inputs"] = o.inputs;
        env["results"] = o.results;
        env["provenance"] = o.provenance;
        out << env.dump(2) << "\n";
    }
    return o.code;
}

}  // namespace hcl::cli
