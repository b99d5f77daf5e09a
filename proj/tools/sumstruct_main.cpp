// Command-line surface over the sumset-structure library.  Every subcommand
// is deterministic for a fixed input and configuration; counts are printed
// as decimal strings since they outgrow native integers.

#include "sumstruct/config.hpp"
#include "sumstruct/core.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/extremal.hpp"
#include "sumstruct/frobenius.hpp"
#include "sumstruct/lattice.hpp"
#include "sumstruct/repro.hpp"
#include "sumstruct/structure.hpp"
#include "sumstruct/threeset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>

using namespace sumstruct;
using nlohmann::ordered_json;

namespace {

IntegerSet set_from_text(const std::string& text) {
    auto [A, rec] = IntegerSet::normalize(parse_int_list(text));
    if (rec.shift != 0 || rec.scale != 1)
        std::cerr << "note: normalized to " << A.to_string() << " (shift " << rec.shift
                  << ", scale " << rec.scale << ")\n";
    return A;
}

std::vector<Point> points_from_text(const std::string& text) {
    std::vector<Point> pts;
    std::string token;
    auto flush = [&]() {
        if (!token.empty())
            pts.push_back(parse_int_list(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ';')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return pts;
}

LatticePointSet lattice_input(const std::string& inline_pts, const std::string& file) {
    if (!inline_pts.empty() && !file.empty())
        throw InvalidInput("give either --points or --points-file, not both");
    if (!inline_pts.empty())
        return LatticePointSet(points_from_text(inline_pts));
    if (!file.empty())
        return LatticePointSet(read_points_file(file));
    throw InvalidInput("missing --points or --points-file");
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Count num(text.substr(0, slash));
        Count den(text.substr(slash + 1));
        if (den <= 0)
            throw InvalidInput("bad rational '" + text + "'");
        return Rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        long long frac_len = static_cast<long long>(text.size() - dot - 1);
        Count num(digits);
        Count den = boost::multiprecision::pow(Count(10), static_cast<unsigned>(frac_len));
        return Rat(num, den);
    }
    return Rat(Count(text));
}

// "x,y:phi;x,y:phi"
std::vector<std::pair<Point, Rat>> parse_phi(const std::string& text) {
    std::vector<std::pair<Point, Rat>> out;
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            return;
        auto colon = token.rfind(':');
        if (colon == std::string::npos)
            throw InvalidInput("phi entry '" + token + "' needs point:value");
        out.emplace_back(parse_int_list(token.substr(0, colon)),
                         parse_rat(token.substr(colon + 1)));
        token.clear();
    };
    for (char c : text) {
        if (c == ';')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    apply_env_overrides(config());

    CLI::App app{"exact computations on t-representable sumsets, Frobenius-t numbers, and "
                 "their structure"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // frees the short -h for the parts budget
    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc = "") {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->set_help_flag("--help", "print help");
        return s;
    };
    app.add_option("--max-hm", config().max_hm, "cap on h*m for dense tables");
    app.add_option("--max-t", config().max_t, "cap on t for full verification");
    app.add_option("--max-points", config().max_lattice_points, "cap on lattice enumeration");
    app.add_option("--max-table", config().max_table_entries, "cap on parts-table cells");
    app.add_option("--witness-limit", config().witness_limit,
                   "witness truncation in serialized reports");
    app.add_option("--threads", config().parallelism, "reserved; evaluation is sequential");

    std::string set_text, n_text;
    long long h = -1, t = 1, n = 0;
    bool total = false, batch = false, as_json = false, brackets = false;
    std::string format = "table";

    auto* rho_cmd = sub(&app, "rho", "representation counts");
    rho_cmd->add_option("--set", set_text)->required();
    rho_cmd->add_option("--n", n);
    rho_cmd->add_option("--h", h);
    rho_cmd->add_flag("--total", total, "unbounded parts");
    rho_cmd->add_flag("--batch", batch, "full table for the given h");
    rho_cmd->add_option("--format", format, "csv|json for --batch");

    auto* exc_cmd = sub(&app, "exceptional", "t-exceptional set");
    exc_cmd->add_option("--set", set_text)->required();
    exc_cmd->add_option("--t", t)->required();

    auto* fr_cmd = sub(&app, "frobenius", "Frobenius-t number");
    fr_cmd->add_option("--set", set_text)->required();
    fr_cmd->add_option("--t", t)->required();
    fr_cmd->add_flag("--brackets", brackets, "include the analytic enclosure");

    auto* sum_cmd = sub(&app, "sumset", "(hA)^(t) members");
    sum_cmd->add_option("--set", set_text)->required();
    sum_cmd->add_option("--h", h)->required();
    sum_cmd->add_option("--t", t)->required();

    auto* str_cmd = sub(&app, "structure", "structure predicate at one h");
    str_cmd->add_option("--set", set_text)->required();
    str_cmd->add_option("--h", h)->required();
    str_cmd->add_option("--t", t)->required();

    auto* ht_cmd = sub(&app, "ht", "exact structure threshold");
    ht_cmd->add_option("--set", set_text)->required();
    ht_cmd->add_option("--t", t)->required();

    auto* bounds_cmd = sub(&app, "bounds", "threshold bounds report");
    bounds_cmd->add_option("--set", set_text)->required();
    bounds_cmd->add_option("--t", t)->required();

    std::vector<std::string> cb_sets;
    std::string cb_file, t_list = "1";
    auto* cb_cmd = sub(&app, "compare-bounds", "CSV: ht_exact vs the bounds");
    cb_cmd->add_option("--set", cb_sets, "repeatable");
    cb_cmd->add_option("--sets-file", cb_file, "one set per line");
    cb_cmd->add_option("--t-list", t_list, "comma-separated t values");

    long long ex_m = 0, ex_ell = 0, ex_R = 0;
    std::string ex_file;
    auto* ex_cmd = sub(&app, "extremal", "extremal family tools");
    auto* ex_verify = sub(ex_cmd, "verify", "build and verify one instance");
    ex_verify->add_option("--m", ex_m)->required();
    ex_verify->add_option("--ell", ex_ell)->required();
    ex_verify->add_option("--R", ex_R)->required();
    auto* ex_batch = sub(ex_cmd, "batch", "verify (m,ell,R) rows from CSV");
    ex_batch->add_option("--file", ex_file)->required();
    auto* ex_asym = sub(ex_cmd, "asymptotic", "finite-m growth-rate record");
    ex_asym->add_option("--m", ex_m)->required();

    long long ts_a = 0, ts_m = 0, ts_hmax = 40;
    auto* ts_cmd = sub(&app, "threeset", "closed forms for {0,a,m}");
    auto* ts_rho = sub(ts_cmd, "rho");
    ts_rho->add_option("--a", ts_a)->required();
    ts_rho->add_option("--m", ts_m)->required();
    ts_rho->add_option("--n", n)->required();
    auto* ts_fr = sub(ts_cmd, "frobenius");
    ts_fr->add_option("--a", ts_a)->required();
    ts_fr->add_option("--m", ts_m)->required();
    ts_fr->add_option("--t", t)->required();
    auto* ts_size = sub(ts_cmd, "size");
    ts_size->add_option("--a", ts_a)->required();
    ts_size->add_option("--m", ts_m)->required();
    ts_size->add_option("--t", t)->required();
    auto* ts_shift = sub(ts_cmd, "shift-check");
    ts_shift->add_option("--a", ts_a)->required();
    ts_shift->add_option("--m", ts_m)->required();
    ts_shift->add_option("--t", t)->required();
    auto* ts_str = sub(ts_cmd, "structured");
    ts_str->add_option("--a", ts_a)->required();
    ts_str->add_option("--m", ts_m)->required();
    ts_str->add_option("--t", t)->required();
    ts_str->add_option("--h-max", ts_hmax);
    std::string ts_file;
    auto* ts_batch = sub(ts_cmd, "batch", "CSV rows a,m,t -> closed-form values");
    ts_batch->add_option("--file", ts_file)->required();

    std::string pts_text, pts_file, p_text, phi_text, lambda_text = "1";
    long long h_cap = 10, h_lo = 0, h_hi = 10, sample_cap = 100000;
    auto* lat_cmd = sub(&app, "lattice", "Z^d operations");
    auto add_pts = [&](CLI::App* sub) {
        sub->add_option("--points", pts_text, "semicolon-separated points, e.g. 0,0;1,0;0,1");
        sub->add_option("--points-file", pts_file, "one point per line");
    };
    auto* lat_ex = sub(lat_cmd, "extremal-points");
    add_pts(lat_ex);
    auto* lat_span = sub(lat_cmd, "span");
    add_pts(lat_span);
    auto* lat_rho = sub(lat_cmd, "rho");
    add_pts(lat_rho);
    lat_rho->add_option("--h", h)->required();
    lat_rho->add_option("--p", p_text)->required();
    auto* lat_rho_total = sub(lat_cmd, "rho-total");
    add_pts(lat_rho_total);
    lat_rho_total->add_option("--p", p_text)->required();
    auto* lat_delta = sub(lat_cmd, "delta");
    add_pts(lat_delta);
    auto* lat_sumset = sub(lat_cmd, "sumset");
    add_pts(lat_sumset);
    lat_sumset->add_option("--h", h)->required();
    lat_sumset->add_option("--t", t)->required();
    auto* lat_struct = sub(lat_cmd, "structure");
    add_pts(lat_struct);
    lat_struct->add_option("--h", h)->required();
    lat_struct->add_option("--t", t)->required();
    auto* lat_index = sub(lat_cmd, "index");
    add_pts(lat_index);
    lat_index->add_option("--t", t)->required();
    lat_index->add_option("--h-cap", h_cap)->required();
    auto* lat_zd = sub(lat_cmd, "zd-bound");
    add_pts(lat_zd);
    lat_zd->add_option("--t", t)->required();
    lat_zd->add_option("--phi", phi_text, "x,y:value;... per hull vertex")->required();
    auto* lat_cara = sub(lat_cmd, "caratheodory");
    add_pts(lat_cara);
    lat_cara->add_option("--lambda", lambda_text)->required();
    lat_cara->add_option("--sample-cap", sample_cap);
    auto* lat_poly = sub(lat_cmd, "poly");
    add_pts(lat_poly);
    lat_poly->add_option("--t", t)->required();
    lat_poly->add_option("--h-lo", h_lo);
    lat_poly->add_option("--h-hi", h_hi)->required();

    std::string golden = "golden/worked_examples.txt";
    bool update = false;
    auto* repro_cmd = sub(&app, "repro", "recompute the worked-example corpus");
    repro_cmd->add_option("--golden", golden, "golden file path");
    repro_cmd->add_flag("--update", update, "rewrite the golden file");

    for (auto* sub : {rho_cmd, exc_cmd, fr_cmd, sum_cmd, str_cmd, ht_cmd, bounds_cmd, ex_verify,
                      ex_asym, lat_ex, lat_span, lat_delta, lat_sumset, lat_struct, lat_index})
        sub->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rho_cmd) {
            IntegerSet A = set_from_text(set_text);
            if (batch) {
                if (h < 0)
                    throw InvalidInput("--batch needs --h");
                RhoTable table = rho_batch(A, h);
                if (format == "json")
                    emit(table.to_json());
                else
                    std::cout << table.to_csv();
            } else if (h >= 0 && !total) {
                std::cout << rho_h(A, h, n).str() << "\n";
            } else {
                std::cout << rho_total(A, n).str() << "\n";
            }
        } else if (*exc_cmd) {
            emit(exceptional_set(set_from_text(set_text), t).to_json());
        } else if (*fr_cmd) {
            IntegerSet A = set_from_text(set_text);
            if (brackets) {
                auto [lo, hi] = frobenius_brackets(A, t);
                ordered_json j;
                j["set"] = A.to_string();
                j["t"] = t;
                j["frobenius_t"] = frobenius_t(A, t);
                j["bracket_lower"] = rat_to_string(lo);
                j["bracket_upper"] = rat_to_string(hi);
                emit(j);
            } else {
                std::cout << frobenius_t(A, t) << "\n";
            }
        } else if (*sum_cmd) {
            std::cout << format_int_list(t_sumset(set_from_text(set_text), h, t)) << "\n";
        } else if (*str_cmd) {
            StructureReport rep = is_structured(set_from_text(set_text), h, t);
            if (as_json)
                emit(rep.to_json(config().witness_limit));
            else
                std::cout << (rep.structured ? "structured" : "unstructured") << "\n";
        } else if (*ht_cmd) {
            emit(ht_exact(set_from_text(set_text), t).to_json());
        } else if (*bounds_cmd) {
            emit(bounds_report(set_from_text(set_text), t).to_json());
        } else if (*cb_cmd) {
            std::vector<IntegerSet> sets;
            for (const std::string& s : cb_sets)
                sets.push_back(set_from_text(s));
            if (!cb_file.empty())
                for (auto& raw : read_sets_file(cb_file))
                    sets.push_back(IntegerSet::normalize(raw).first);
            if (sets.empty())
                throw InvalidInput("compare-bounds: no sets given");
            std::cout << compare_bounds_csv_header() << "\n";
            for (const IntegerSet& A : sets)
                for (long long tv : parse_int_list(t_list))
                    std::cout << compare_bounds_csv_row(A, tv) << "\n";
        } else if (*ex_verify) {
            emit(extremal_verify(extremal_build(ex_m, ex_ell, ex_R)).to_json());
        } else if (*ex_batch) {
            for (auto& row : read_sets_file(ex_file)) {
                if (row.size() != 3)
                    throw InvalidInput("extremal batch rows are m,ell,R");
                emit(extremal_verify(extremal_build(row[0], row[1], row[2])).to_json());
            }
        } else if (*ex_asym) {
            emit(asymptotic_report(ex_m).to_json());
        } else if (*ts_rho) {
            std::cout << ThreeSet(ts_a, ts_m).rho_closed(n).str() << "\n";
        } else if (*ts_fr) {
            std::cout << ThreeSet(ts_a, ts_m).frobenius_t_closed(t) << "\n";
        } else if (*ts_size) {
            std::cout << ThreeSet(ts_a, ts_m).exceptional_size_closed(t).str() << "\n";
        } else if (*ts_shift) {
            std::cout << (ThreeSet(ts_a, ts_m).shift_identity_check(t) ? "true" : "false") << "\n";
        } else if (*ts_batch) {
            std::cout << "a,m,t,frobenius_t,exceptional_size\n";
            for (auto& row : read_sets_file(ts_file)) {
                if (row.size() != 3)
                    throw InvalidInput("threeset batch rows are a,m,t");
                ThreeSet T(row[0], row[1]);
                std::cout << row[0] << ',' << row[1] << ',' << row[2] << ','
                          << T.frobenius_t_closed(row[2]) << ','
                          << T.exceptional_size_closed(row[2]).str() << "\n";
            }
        } else if (*ts_str) {
            std::cout << (ThreeSet(ts_a, ts_m).always_structured_check(t, ts_hmax) ? "true"
                                                                                   : "false")
                      << "\n";
        } else if (*lat_ex) {
            for (const Point& p : extremal_points(lattice_input(pts_text, pts_file)))
                std::cout << format_point(p) << "\n";
        } else if (*lat_span) {
            emit(lattice_span(lattice_input(pts_text, pts_file)).to_json());
        } else if (*lat_rho) {
            std::cout << rho_h_d(lattice_input(pts_text, pts_file), h, parse_int_list(p_text)).str()
                      << "\n";
        } else if (*lat_rho_total) {
            std::cout
                << rho_total_d(lattice_input(pts_text, pts_file), parse_int_list(p_text)).str()
                << "\n";
        } else if (*lat_delta) {
            emit(delta_Delta(lattice_input(pts_text, pts_file)).to_json());
        } else if (*lat_sumset) {
            for (const Point& p : t_sumset_d(lattice_input(pts_text, pts_file), h, t))
                std::cout << format_point(p) << "\n";
        } else if (*lat_struct) {
            emit(is_structured_d(lattice_input(pts_text, pts_file), h, t)
                     .to_json(config().witness_limit));
        } else if (*lat_index) {
            emit(empirical_structure_index(lattice_input(pts_text, pts_file), t, h_cap).to_json());
        } else if (*lat_zd) {
            std::cout << zd_bound_formula(lattice_input(pts_text, pts_file), t,
                                          parse_phi(phi_text))
                      << "\n";
        } else if (*lat_cara) {
            std::cout << (caratheodory_cover_check(lattice_input(pts_text, pts_file),
                                                   parse_rat(lambda_text), sample_cap)
                              ? "true"
                              : "false")
                      << "\n";
        } else if (*lat_poly) {
            emit(hull_size_poly_check(lattice_input(pts_text, pts_file), t, h_lo, h_hi).to_json());
        } else if (*repro_cmd) {
            if (update) {
                repro_write(golden);
                std::cout << "wrote " << golden << "\n";
            } else {
                if (repro_check(golden, std::cerr)) {
                    std::cout << "worked-example corpus matches " << golden << "\n";
                } else {
                    std::cerr << "worked-example corpus differs from " << golden << "\n";
                    return 1;
                }
            }
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
