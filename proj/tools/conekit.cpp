// Copyright 2026 The conekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line entry point: verify | sectors | smatrix | index | braid A B.
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "conekit/verify.hpp"
#include "json.hpp"

using namespace conekit;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char *kSchemaVersion = "1.0";
constexpr size_t kIndexBonds = 3;

struct Options {
    Config config;
    std::string mode = "exact";
    std::string format = "json";
    std::string out;
    bool timing = false;
    std::string braid_a, braid_b;
};

struct Result {
    std::string command;
    std::vector<CheckRecord> checks;
    Json payload = Json::object();
    std::vector<std::string> table_lines;

    bool passed() const {
        for (const auto &c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

Json fraction(const Rational &r) {
    return Json{{"num", numerator_str(r)}, {"den", denominator_str(r)}};
}

Json config_json(const Options &o) {
    return Json{{"size", o.config.size},       {"truncation", o.config.truncation}, {"budget", o.config.budget},
                {"seed", o.config.seed},       {"samples", o.config.samples},       {"mode", mode_name(o.config.mode)}};
}

Json index_payload(const Config &cfg) {
    PimsnerPopaResult r = pimsner_popa_constant(index_setup(kIndexBonds, cfg.truncation).action);
    return Json{{"lambda", r.certified() ? fraction(r.lambda) : Json(nullptr)},
                {"index", r.certified() ? fraction(r.index) : Json(nullptr)},
                {"certificates", {{"dual_averaging", r.dual_averaging}, {"witness_projection", r.witness_projection}}},
                {"k", r.k},
                {"n", cfg.truncation}};
}

Result cmd_verify(const Config &cfg) {
    Result r{"verify", run_all_checks(cfg)};
    r.payload["index"] = index_payload(cfg);
    r.table_lines.push_back("index = " + r.payload["index"]["index"]["num"].get<std::string>() + "/" +
                            r.payload["index"]["index"]["den"].get<std::string>());
    return r;
}

Result cmd_sectors(const Config &cfg) {
    Result r{"sectors"};
    Patch p = build_patch(cfg.size);
    StabilizerGroup group = ground_stabilizers(p);
    ConeSpec spec = standard_cone(cfg.size);
    Region cone = cone_region(spec, p);
    DetectionLoop loop = detection_loop(cone, p);
    EnumerationOptions opt;
    opt.budget = cfg.budget;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    SectorEnumeration out = enumerate_sectors(cone, loop, p, group, opt);
    Json table = Json::array();
    for (const SectorWitness &w : out.witnesses) {
        table.push_back({{"label", w.label.name()},
                         {"witness", w.witness.str()},
                         {"loop_eigenvalues", {{"star", w.star_loop_eigenvalue}, {"plaquette", w.plaquette_loop_eigenvalue}}}});
        std::ostringstream line;
        line << std::left << std::setw(4) << w.label.name() << " star loop " << std::showpos << w.star_loop_eigenvalue
             << "  plaquette loop " << w.plaquette_loop_eigenvalue << std::noshowpos << "  witness weight "
             << w.witness.weight();
        r.table_lines.push_back(line.str());
    }
    Json labels = Json::array(), exhaustive = Json::array();
    for (SectorLabel a : out.labels) labels.push_back(a.name());
    for (SectorLabel a : out.exhaustive_labels) exhaustive.push_back(a.name());
    r.payload["region"] = {{"apex", {spec.apex.x.convert_to<long>(), spec.apex.y.convert_to<long>()}},
                           {"slopes", {{spec.low.dx, spec.low.dy}, {spec.high.dx, spec.high.dy}}},
                           {"r", {to_string(spec.r_min), to_string(spec.r_max)}}};
    r.payload["labels"] = labels;
    r.payload["exhaustive_labels"] = exhaustive;
    r.payload["sectors"] = table;
    r.payload["candidates"] = out.candidates;
    r.payload["partial"] = out.partial;
    r.payload["invariance_samples"] = out.invariance_samples;
    bool ok = out.labels.size() == 4 && out.invariance && out.separation;
    r.checks.push_back({"sectors.count", "four distinct irreducible charges", ok, std::to_string(out.labels.size()), "4"});
    return r;
}

Result cmd_smatrix(const Config &cfg) {
    Result r{"smatrix"};
    r.checks.push_back(check_monodromy(cfg));
    r.checks.push_back(check_degeneracy(cfg));
    r.checks.push_back(check_s_matrix(cfg));
    Patch p = build_patch(cfg.size);
    SMatrix s = s_matrix(p);
    Json entries = Json::array(), mono = Json::array(), order = Json::array();
    for (SectorLabel a : all_sectors()) {
        order.push_back(a.name());
        Json row = Json::array(), mrow = Json::array();
        std::string line = a.name();
        line.resize(4, ' ');
        for (SectorLabel b : all_sectors()) {
            row.push_back(fraction(s(a, b)));
            mrow.push_back(monodromy(a, b, p));
            std::string cell = to_string(s(a, b));
            line += std::string(6 - std::min<size_t>(cell.size(), 5), ' ') + cell;
        }
        entries.push_back(row);
        mono.push_back(mrow);
        r.table_lines.push_back(line);
    }
    r.payload["order"] = order;
    r.payload["s_matrix"] = entries;
    r.payload["monodromy"] = mono;
    r.payload["total_dimension"] = fraction(s.total_dimension);
    r.payload["determinant"] = fraction(s.determinant);
    r.payload["unitary"] = s.unitary;
    return r;
}

Result cmd_index(const Config &cfg) {
    Result r{"index"};
    r.checks.push_back(check_index_constant(cfg));
    r.checks.push_back(check_index_samples(cfg));
    r.checks.push_back(check_dimension_sum(cfg));
    r.payload["index"] = index_payload(cfg);
    r.table_lines.push_back("index = " + r.payload["index"]["index"]["num"].get<std::string>() + "/" +
                            r.payload["index"]["index"]["den"].get<std::string>());
    return r;
}

Result cmd_braid(const Config &cfg, SectorLabel a, SectorLabel b) {
    Result r{"braid"};
    int m = monodromy(a, b, build_patch(cfg.size));
    int via = monodromy_via_transporter(a, b, TransporterGeometry::build(cfg.truncation), cfg.truncation);
    r.payload["a"] = a.name();
    r.payload["b"] = b.name();
    r.payload["monodromy"] = m;
    r.payload["via_transporter"] = via;
    int expected = detail::pairing(a, b);
    r.checks.push_back({"braiding.pair", "monodromy is the Z2 x Z2 bicharacter", m == expected && via == expected,
                        std::to_string(m) + "," + std::to_string(via),
                        std::to_string(expected) + "," + std::to_string(expected)});
    r.table_lines.push_back("monodromy(" + a.name() + ", " + b.name() + ") = " + (m > 0 ? "+1" : "-1"));
    return r;
}

std::string render_json(const Options &o, const Result &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        Json j{{"check_id", c.check_id},
               {"claim_tag", c.claim_tag},
               {"passed", c.passed},
               {"computed_value", c.computed_value},
               {"expected_value", c.expected_value},
               {"tolerance", c.tolerance}};
        if (o.timing) j["runtime_ms"] = c.runtime_ms;
        checks.push_back(j);
    }
    Json doc{{"version", kSchemaVersion}, {"command", r.command}, {"config", config_json(o)}, {"checks", checks},
             {"passed", r.passed()}};
    for (const auto &[key, value] : r.payload.items()) doc[key] = value;
    return doc.dump(2) + "\n";
}

std::string render_table(const Options &o, const Result &r) {
    std::ostringstream s;
    const Config &c = o.config;
    s << "conekit " << r.command << "  L=" << c.size << " n=" << c.truncation << " budget=" << c.budget
      << " seed=" << c.seed << " samples=" << c.samples << " mode=" << mode_name(c.mode) << "\n";
    size_t width = 0;
    for (const auto &k : r.checks) width = std::max(width, k.check_id.size());
    size_t good = 0;
    for (const auto &k : r.checks) {
        good += k.passed;
        s << (k.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2) << k.check_id
          << k.computed_value << "  (expected " << k.expected_value << ", " << k.tolerance << ")";
        if (o.timing) s << "  " << std::fixed << std::setprecision(1) << k.runtime_ms << " ms";
        s << "\n";
    }
    for (const auto &line : r.table_lines) s << line << "\n";
    s << (r.passed() ? "all checks passed" : "some checks failed") << " (" << good << "/" << r.checks.size() << ")\n";
    return s.str();
}

}  // namespace

int main(int argc, char **argv) {
    Options o;
    CLI::App app{"Finite-patch checks of toric-code superselection sectors and the cone index."};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--size", o.config.size, "patch side L (at least 6)");
        sub->add_option("--truncation", o.config.truncation, "transporter truncation n");
        sub->add_option("--budget", o.config.budget, "exhaustive support budget");
        sub->add_option("--seed", o.config.seed, "random seed (CONEKIT_SEED overrides)");
        sub->add_option("--samples", o.config.samples, "random samples per check");
        sub->add_option("--mode", o.mode, "arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--out", o.out, "write the report to FILE");
        sub->add_flag("--timing", o.timing, "include per-check runtimes");
    };
    CLI::App *verify = app.add_subcommand("verify", "run every check");
    CLI::App *sectors = app.add_subcommand("sectors", "enumerate superselection sectors");
    CLI::App *smatrix = app.add_subcommand("smatrix", "monodromy table and S-matrix");
    CLI::App *index = app.add_subcommand("index", "Pimsner-Popa constant of the crossed product");
    CLI::App *braid = app.add_subcommand("braid", "monodromy of two sectors");
    braid->add_option("a", o.braid_a, "first sector (1, e, m, eps)")->required();
    braid->add_option("b", o.braid_b, "second sector (1, e, m, eps)")->required();
    for (CLI::App *sub : {verify, sectors, smatrix, index, braid}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    Result result;
    try {
        if (const char *env = std::getenv("CONEKIT_SEED")) {
            o.config.seed = std::stoull(env);
        }
        o.config.mode = o.mode == "float" ? ArithmeticMode::Float : ArithmeticMode::Exact;
        validate_config(o.config);
        if (*verify) {
            result = cmd_verify(o.config);
        } else if (*sectors) {
            result = cmd_sectors(o.config);
        } else if (*smatrix) {
            result = cmd_smatrix(o.config);
        } else if (*index) {
            result = cmd_index(o.config);
        } else {
            result = cmd_braid(o.config, parse_sector(o.braid_a), parse_sector(o.braid_b));
        }
    } catch (const NoRoom &e) {
        std::cerr << "conekit: no room: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "conekit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "conekit: internal error: " << e.what() << "\n";
        return 1;
    }

    std::string text = o.format == "table" ? render_table(o, result) : render_json(o, result);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "conekit: cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return result.passed() ? 0 : 1;
}
