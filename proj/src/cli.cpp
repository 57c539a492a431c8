#include "hessberg/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hessberg/catalog.hpp"
#include "hessberg/errors.hpp"
#include "hessberg/text.hpp"
#include "hessberg/validate.hpp"

namespace hessberg::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string type;
    std::string levi;
    std::string hess;
    std::string nilpotent;
    std::string start;
    std::string format;  // empty = per-command default
    std::string out_path;
    std::string json_path;  // --json PATH shorthand
    int jobs = 0;
    int max_rank = 3;
    bool force = false;
    bool digest_only = false;
};

long long element_cap(const Options& o) {
    return o.force ? std::numeric_limits<long long>::max() : WeylGroup::kDefaultCap;
}

std::string chosen_format(const Options& o, const char* command_default) {
    return o.format.empty() ? command_default : o.format;
}

void write_output(const std::string& path, std::ostream& out, const std::string& bytes) {
    if (path.empty()) {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open output file: " + path);
    f << bytes;
    f.flush();
    if (!f.good()) throw InputError("failed writing output file: " + path);
}

ordered_json levi_json(std::uint32_t mask, int rank) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < rank; ++i)
        if ((mask >> i) & 1) arr.push_back(i + 1);
    return arr;
}

ordered_json hess_neg_json(const RootSystem& rs, const HessenbergSpace& hess) {
    ordered_json arr = ordered_json::array();
    for (int b = hess.neg.next(0); b != -1; b = hess.neg.next(b + 1))
        arr.push_back(rs.positive_root(b).negated().coeffs);
    return arr;
}

std::string space_symbolic_text(const RootSystem& rs, const HessenbergSpace& hess) {
    std::string s = "{";
    bool first = true;
    for (int b = hess.neg.next(0); b != -1; b = hess.neg.next(b + 1)) {
        if (!first) s += ",";
        first = false;
        s += root_symbolic(rs.positive_root(b).negated());
    }
    return s + "}";
}

std::string header_text(const RootSystem& rs, std::uint32_t mask, const HessenbergSpace& hess) {
    return rs.name() + " levi={" + levi_text(mask, rs.rank()) + "} hess=" +
           space_symbolic_text(rs, hess);
}

int cmd_describe(const Options& o, std::ostream& out) {
    RootSystem rs(parse_cartan_type(o.type));
    const unsigned long long order = weyl_order_classical(rs.cartan().family, rs.rank());
    const std::string fmt = chosen_format(o, "text");
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["cartan"] = rs.name();
        j["rank"] = rs.rank();
        j["num_positive"] = rs.num_positive();
        j["weyl_order"] = order;
        j["cartan_matrix"] = rs.cartan().matrix;
        j["highest_root"] = rs.positive_root(rs.theta_id()).coeffs;
        ordered_json roots = ordered_json::array();
        for (int i = 0; i < rs.num_positive(); ++i) {
            const Root& r = rs.positive_root(i);
            ordered_json jr;
            jr["id"] = i;
            jr["coeffs"] = r.coeffs;
            jr["symbolic"] = root_symbolic(r);
            jr["height"] = r.height();
            roots.push_back(jr);
        }
        j["positive_roots"] = roots;
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        bytes = "id,coeffs,symbolic,height\n";
        for (int i = 0; i < rs.num_positive(); ++i) {
            const Root& r = rs.positive_root(i);
            bytes += std::to_string(i) + "," + csv_quote(root_vector_text(r)) + "," +
                     csv_quote(root_symbolic(r)) + "," + std::to_string(r.height()) + "\n";
        }
    } else {
        bytes = rs.name() + ": rank " + std::to_string(rs.rank()) + ", " +
                std::to_string(rs.num_roots()) + " roots (" + std::to_string(rs.num_positive()) +
                " positive), |W| = " + std::to_string(order) + "\n";
        bytes += "cartan matrix:\n";
        for (const auto& row : rs.cartan().matrix) {
            bytes += " ";
            for (int v : row) {
                bytes += v < 0 ? " " : "  ";
                bytes += std::to_string(v);
            }
            bytes += "\n";
        }
        bytes += "positive roots:\n";
        for (int i = 0; i < rs.num_positive(); ++i) {
            const Root& r = rs.positive_root(i);
            bytes += "  " + std::to_string(i) + ": " + root_vector_text(r) + " = " +
                     root_symbolic(r) + " (height " + std::to_string(r.height()) + ")\n";
        }
        bytes += "highest root: " + root_vector_text(rs.positive_root(rs.theta_id())) + " = " +
                 root_symbolic(rs.positive_root(rs.theta_id())) + "\n";
    }
    write_output(o.out_path, out, bytes);
    return 0;
}

int cmd_hessenberg_enumerate(const Options& o, std::ostream& out) {
    RootSystem rs(parse_cartan_type(o.type));
    const std::vector<HessenbergSpace> spaces = enumerate_hessenberg(rs);
    const std::string fmt = chosen_format(o, "text");
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["cartan"] = rs.name();
        j["count"] = spaces.size();
        ordered_json arr = ordered_json::array();
        for (const HessenbergSpace& sp : spaces) arr.push_back(hess_neg_json(rs, sp));
        j["spaces"] = arr;
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        bytes = "index,size,neg\n";
        for (std::size_t i = 0; i < spaces.size(); ++i)
            bytes += std::to_string(i) + "," + std::to_string(spaces[i].neg.count()) + "," +
                     csv_quote(space_vector_text(rs, spaces[i])) + "\n";
    } else {
        bytes = rs.name() + ": " + std::to_string(spaces.size()) + " Hessenberg spaces\n";
        for (std::size_t i = 0; i < spaces.size(); ++i)
            bytes += "#" + std::to_string(i) + ": " + space_symbolic_text(rs, spaces[i]) + "\n";
    }
    write_output(o.out_path, out, bytes);
    return 0;
}

int cmd_betti(const Options& o, std::ostream& out, std::ostream& err) {
    RootSystem rs(parse_cartan_type(o.type));
    WeylGroup wg(rs, element_cap(o));
    const std::uint32_t mask = parse_levi_text(o.levi, rs.rank());
    LeviDatum levi = make_levi(rs, mask);
    const HessenbergSpace hess = parse_hessenberg_text(rs, o.hess);
    const BettiTable bt = betti_numbers(wg, levi, hess);
    const bool by_betti = connected_from_counts(bt.counts);
    const bool by_criterion = is_connected_by_criterion(rs, levi, hess);
    const bool want_witness = !by_criterion && !levi_is_full(rs, levi);
    DisconnectionWitness dw;
    if (want_witness) dw = disconnection_witness(wg, levi, hess);

    std::string fmt = chosen_format(o, "text");
    std::string out_path = o.out_path;
    if (!o.json_path.empty()) {
        fmt = "json";
        out_path = o.json_path;
    }
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["cartan"] = rs.name();
        j["levi"] = levi_json(mask, rs.rank());
        j["hess_neg"] = hess_neg_json(rs, hess);
        ordered_json cells = ordered_json::array();
        for (const CellReport& c : bt.cells) {
            ordered_json jc;
            jc["w"] = word_text(wg.word(c.w));
            jc["y"] = word_text(wg.word(c.y));
            jc["v"] = word_text(wg.word(c.v));
            jc["dim"] = c.dim;
            cells.push_back(jc);
        }
        j["cells"] = cells;
        j["betti"] = bt.counts;
        j["poincare"] = poincare_polynomial(bt.counts);
        j["connected"] = by_betti;
        if (want_witness) {
            ordered_json w;
            w["alpha"] = rs.positive_root(rs.simple_pos_id(dw.alpha_index)).coeffs;
            w["v"] = word_text(wg.word(dw.v));
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        bytes = "dim,count\n";
        for (std::size_t k = 0; k < bt.counts.size(); ++k)
            bytes += std::to_string(k) + "," + std::to_string(bt.counts[k]) + "\n";
    } else {
        bytes = header_text(rs, mask, hess) + "\n";
        bytes += "betti: " + counts_vector_text(bt.counts) + "\n";
        bytes += "poincare: " + poincare_polynomial(bt.counts) + "\n";
        bytes += std::string("connected: ") + (by_betti ? "yes" : "no") + " (criterion: " +
                 (by_criterion ? "yes" : "no") + ")\n";
        if (want_witness)
            bytes += "witness: alpha=" +
                     root_symbolic(rs.positive_root(rs.simple_pos_id(dw.alpha_index))) +
                     " v=" + word_text(wg.word(dw.v)) + "\n";
        bytes += "cells:\n";
        for (const CellReport& c : bt.cells)
            bytes += "  w= " + word_text(wg.word(c.w)) + "  y= " + word_text(wg.word(c.y)) +
                     "  v= " + word_text(wg.word(c.v)) + "  dim=" + std::to_string(c.dim) + "\n";
    }
    write_output(out_path, out, bytes);
    if (by_betti != by_criterion) {
        err << "property violation: connectedness verdicts disagree for " +
                   header_text(rs, mask, hess)
            << "\n";
        return 2;
    }
    return 0;
}

int cmd_connected(const Options& o, std::ostream& out, std::ostream& err) {
    RootSystem rs(parse_cartan_type(o.type));
    WeylGroup wg(rs, element_cap(o));
    const std::uint32_t mask = parse_levi_text(o.levi, rs.rank());
    LeviDatum levi = make_levi(rs, mask);
    const HessenbergSpace hess = parse_hessenberg_text(rs, o.hess);
    const BettiTable bt = betti_numbers(wg, levi, hess);
    const bool by_betti = connected_from_counts(bt.counts);
    const bool by_criterion = is_connected_by_criterion(rs, levi, hess);
    const bool want_witness = !by_criterion && !levi_is_full(rs, levi);
    DisconnectionWitness dw;
    if (want_witness) dw = disconnection_witness(wg, levi, hess);

    const std::string fmt = chosen_format(o, "text");
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["cartan"] = rs.name();
        j["levi"] = levi_json(mask, rs.rank());
        j["hess_neg"] = hess_neg_json(rs, hess);
        j["connected"] = by_betti;
        j["connected_criterion"] = by_criterion;
        j["n0"] = bt.counts[0];
        if (want_witness) {
            ordered_json w;
            w["alpha"] = rs.positive_root(rs.simple_pos_id(dw.alpha_index)).coeffs;
            w["v"] = word_text(wg.word(dw.v));
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        throw InputError("csv output is not supported for this command");
    } else {
        bytes = std::string(by_betti ? "connected" : "disconnected") + " (criterion: " +
                (by_criterion ? "yes" : "no") + ", betti n0=" + std::to_string(bt.counts[0]) +
                ")\n";
        if (want_witness)
            bytes += "witness: alpha=" +
                     root_symbolic(rs.positive_root(rs.simple_pos_id(dw.alpha_index))) +
                     " v=" + word_text(wg.word(dw.v)) + "\n";
    }
    write_output(o.out_path, out, bytes);
    if (by_betti != by_criterion) {
        err << "property violation: connectedness verdicts disagree for " +
                   header_text(rs, mask, hess)
            << "\n";
        return 2;
    }
    return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
    RootSystem rs(parse_cartan_type(o.type));
    WeylGroup wg(rs, element_cap(o));
    const std::uint32_t mask = parse_levi_text(o.levi, rs.rank());
    LeviDatum levi = make_levi(rs, mask);
    const HessenbergSpace hess = parse_hessenberg_text(rs, o.hess);
    const DisconnectionWitness dw = disconnection_witness(wg, levi, hess);
    const Root alpha = rs.positive_root(rs.simple_pos_id(dw.alpha_index));

    const std::string fmt = chosen_format(o, "text");
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["cartan"] = rs.name();
        j["levi"] = levi_json(mask, rs.rank());
        j["hess_neg"] = hess_neg_json(rs, hess);
        ordered_json w;
        w["alpha"] = alpha.coeffs;
        w["v"] = word_text(wg.word(dw.v));
        j["witness"] = w;
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        throw InputError("csv output is not supported for this command");
    } else {
        bytes = "witness: alpha=" + root_symbolic(alpha) + " v=" + word_text(wg.word(dw.v)) + "\n";
    }
    write_output(o.out_path, out, bytes);
    return 0;
}

int cmd_fixed_points(const Options& o, std::ostream& out) {
    RootSystem rs(parse_cartan_type(o.type));
    WeylGroup wg(rs, element_cap(o));
    const NilpotentSupport nilp = parse_nilpotent_text(rs, o.nilpotent);
    const HessenbergSpace hess = parse_hessenberg_text(rs, o.hess);
    const std::vector<int> fps = fixed_points(wg, nilp, hess);

    const std::string fmt = chosen_format(o, "text");
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["cartan"] = rs.name();
        ordered_json supp = ordered_json::array();
        for (int b = nilp.phi_n.next(0); b != -1; b = nilp.phi_n.next(b + 1))
            supp.push_back(rs.positive_root(b).coeffs);
        j["nilpotent"] = supp;
        j["hess_neg"] = hess_neg_json(rs, hess);
        j["count"] = fps.size();
        ordered_json words = ordered_json::array();
        for (int w : fps) words.push_back(word_text(wg.word(w)));
        j["fixed_points"] = words;
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        bytes = "index,word,length\n";
        for (std::size_t i = 0; i < fps.size(); ++i)
            bytes += std::to_string(i) + "," + csv_quote(word_text(wg.word(fps[i]))) + "," +
                     std::to_string(wg.length(fps[i])) + "\n";
    } else {
        for (int w : fps) bytes += word_text(wg.word(w)) + "\n";
    }
    write_output(o.out_path, out, bytes);
    return 0;
}

int cmd_chain(const Options& o, std::ostream& out) {
    RootSystem rs(parse_cartan_type(o.type));
    WeylGroup wg(rs, element_cap(o));
    const NilpotentSupport nilp = parse_nilpotent_text(rs, o.nilpotent);
    const HessenbergSpace hess = parse_hessenberg_text(rs, o.hess);
    const int start = wg.element_of_word(parse_word_text(o.start, rs.rank()));
    const Chain chain = connect_chain(wg, start, nilp, hess);
    const int end =
        chain.steps.empty() ? chain.start : chain.steps[chain.steps.size() - 1].w_after;

    const std::string fmt = chosen_format(o, "json");
    std::string bytes;
    if (fmt == "json") {
        ordered_json j;
        j["start"] = word_text(wg.word(chain.start));
        ordered_json steps = ordered_json::array();
        for (const ChainStep& s : chain.steps) {
            ordered_json js;
            js["w_before"] = word_text(wg.word(s.w_before));
            js["gamma"] = rs.positive_root(s.gamma).coeffs;
            js["w_after"] = word_text(wg.word(s.w_after));
            steps.push_back(js);
        }
        j["steps"] = steps;
        j["end"] = word_text(wg.word(end));
        bytes = j.dump(2) + "\n";
    } else if (fmt == "csv") {
        throw InputError("csv output is not supported for this command");
    } else {
        bytes = "start: " + word_text(wg.word(chain.start)) + "\n";
        for (const ChainStep& s : chain.steps)
            bytes += word_text(wg.word(s.w_before)) + " --(" +
                     root_symbolic(rs.positive_root(s.gamma)) + ")--> " +
                     word_text(wg.word(s.w_after)) + "\n";
        bytes += "end: " + word_text(wg.word(end)) + "\n";
    }
    write_output(o.out_path, out, bytes);
    return 0;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err) {
    RootSystem rs(parse_cartan_type(o.type));
    WeylGroup wg(rs, element_cap(o));
    std::vector<HessenbergSpace> spaces;
    if (o.hess.empty() || o.hess == "all")
        spaces = enumerate_hessenberg(rs);
    else
        spaces = {parse_hessenberg_text(rs, o.hess)};
    const std::vector<CatalogRow> rows = catalog_rows_parallel(wg, spaces, o.jobs);
    const std::string csv = catalog_csv(wg, spaces, rows);

    std::string bytes;
    if (o.digest_only) {
        bytes = digest_line(csv) + "\n";
    } else {
        const std::string fmt = chosen_format(o, "text");
        if (fmt == "csv")
            bytes = csv;
        else if (fmt == "json")
            bytes = catalog_json(wg, spaces, rows);
        else
            bytes = catalog_text(wg, spaces, rows);
    }
    write_output(o.out_path, out, bytes);
    for (const CatalogRow& row : rows) {
        if (!row.agree) {
            err << "property violation: connectedness verdicts disagree for " << rs.name()
                << " levi={" << levi_text(row.levi_mask, rs.rank()) << "} space#"
                << row.space_index << "\n";
            return 2;
        }
    }
    return 0;
}

int cmd_validate_all(const Options& o, std::ostream& out) {
    std::ostringstream buf;
    const int code = run_validate_all(o.max_rank, o.jobs, buf);
    write_output(o.out_path, out, buf.str());
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"root-system combinatorics of semisimple and nilpotent Hessenberg varieties"};
    app.name("hessberg");
    app.require_subcommand(1);
    Options o;

    const auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("--type", o.type, "Cartan type, e.g. A3 or G2")->required();
    };
    const auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
    };
    const auto add_force = [&](CLI::App* cmd) {
        cmd->add_flag("--force", o.force, "override the Weyl group element cap");
    };
    const auto add_levi = [&](CLI::App* cmd) {
        cmd->add_option("--levi", o.levi,
                        "Levi subset as 1-based simple indices, e.g. \"1,3\"; \"\" = torus");
    };
    const auto add_hess = [&](CLI::App* cmd, bool required) {
        CLI::Option* opt =
            cmd->add_option("--hess", o.hess, "Hessenberg space: neg=..., h=..., or all");
        if (required) opt->required();
    };
    const auto add_nilpotent = [&](CLI::App* cmd) {
        cmd->add_option("--nilpotent", o.nilpotent,
                        "nilpotent support: comma-separated positive roots; \"\" = zero");
    };
    const auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", o.jobs,
                        "worker threads, 0 = library default; never affects output bytes");
    };

    CLI::App* describe = app.add_subcommand("describe", "print a root system");
    add_type(describe);
    add_io(describe);

    CLI::App* henum =
        app.add_subcommand("hessenberg-enumerate", "enumerate all Hessenberg spaces (rank <= 4)");
    add_type(henum);
    add_io(henum);

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of a semisimple variety");
    add_type(betti);
    add_levi(betti);
    add_hess(betti, true);
    add_io(betti);
    add_force(betti);
    betti->add_option("--json", o.json_path, "shorthand for --format json --out PATH");

    CLI::App* connected = app.add_subcommand("connected", "connectedness verdicts and witness");
    add_type(connected);
    add_levi(connected);
    add_hess(connected, true);
    add_io(connected);
    add_force(connected);

    CLI::App* witness = app.add_subcommand("witness", "disconnection witness for a Levi/space pair");
    add_type(witness);
    add_levi(witness);
    add_hess(witness, true);
    add_io(witness);
    add_force(witness);

    CLI::App* fixed = app.add_subcommand("fixed-points", "torus fixed points of a nilpotent variety");
    add_type(fixed);
    add_nilpotent(fixed);
    add_hess(fixed, true);
    add_io(fixed);
    add_force(fixed);

    CLI::App* chain = app.add_subcommand("chain", "rational curve descent chain to the identity");
    add_type(chain);
    add_nilpotent(chain);
    add_hess(chain, true);
    add_io(chain);
    add_force(chain);
    chain->add_option("--start", o.start, "fixed point to descend from, as a word")->required();

    CLI::App* catalog =
        app.add_subcommand("catalog", "all (space, Levi) pairs with verdicts and witnesses");
    add_type(catalog);
    add_hess(catalog, false);
    add_io(catalog);
    add_force(catalog);
    add_jobs(catalog);
    catalog->add_flag("--digest-only", o.digest_only, "print only the digest of the canonical CSV");

    CLI::App* validate =
        app.add_subcommand("validate-all", "run every exhaustive property suite");
    validate->add_option("--max-rank", o.max_rank, "largest rank to cover (1..4)");
    add_jobs(validate);
    validate->add_option("--out", o.out_path, "write the report to a file instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hessberg");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (app.got_subcommand(describe)) return cmd_describe(o, out);
        if (app.got_subcommand(henum)) return cmd_hessenberg_enumerate(o, out);
        if (app.got_subcommand(betti)) return cmd_betti(o, out, err);
        if (app.got_subcommand(connected)) return cmd_connected(o, out, err);
        if (app.got_subcommand(witness)) return cmd_witness(o, out);
        if (app.got_subcommand(fixed)) return cmd_fixed_points(o, out);
        if (app.got_subcommand(chain)) return cmd_chain(o, out);
        if (app.got_subcommand(catalog)) return cmd_catalog(o, out, err);
        if (app.got_subcommand(validate)) return cmd_validate_all(o, out);
        err << "error: no command selected\n";
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PropertyViolation& e) {
        err << "property violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hessberg::cli
