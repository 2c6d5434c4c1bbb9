/*
 * Copyright 2026 The dpcl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "dpcl/dpcl.hpp"

namespace fs = std::filesystem;
using namespace dpcl;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

// hash covers the config and every file it pulls in
std::string config_hash(const PipelineConfig& c) {
    std::string blob = c.source.empty() ? std::string() : read_file(c.source);
    if (c.model_file) blob += "\n--model--\n" + read_file(*c.model_file);
    if (c.h_file) blob += "\n--h--\n" + read_file(*c.h_file);
    return sha256_hex(blob);
}

PipelineConfig load_or_usage(const fs::path& p) {
    try {
        return load_config(p);
    } catch (const ParseError& e) {
        throw Usage(e.what());
    } catch (const std::ios_base::failure& e) {
        throw Usage(e.what());
    }
}

// writes to a file when given, stdout otherwise
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  private:
    std::ofstream file_;
};

std::vector<Int> parse_prime_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        Int p;
        if (p.set_str(item, 10) != 0 || !is_probable_prime(p)) throw Usage("not a prime: " + item);
        out.push_back(p);
    }
    return out;
}

Rat parse_t(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw Usage("not a rational number: " + s);
    }
}

struct ModelInputs {
    std::string config, model, h;
};

// either a config file or an explicit model/h pair
PipelineConfig resolve(const ModelInputs& in) {
    if (!in.config.empty()) {
        if (!in.model.empty() || !in.h.empty()) throw Usage("give either --file or --model/--h, not both");
        return load_or_usage(in.config);
    }
    if (in.model.empty() || in.h.empty()) throw Usage("need --file or both --model and --h");
    PipelineConfig c;
    c.model_file = fs::path(in.model);
    c.h_file = fs::path(in.h);
    for (auto& f : {in.model, in.h})
        if (!fs::exists(f)) throw Usage("cannot read " + f);
    try {
        parse_model(read_file(in.model), in.model);
        parse_kummer_file(read_file(in.h), in.h);
    } catch (const ParseError& e) {
        throw Usage(e.what());
    }
    return c;
}

void add_model_inputs(CLI::App* app, ModelInputs& in) {
    app->add_option("--file,--config", in.config, "pipeline configuration");
    app->add_option("--model", in.model, "model file (a2, a1, a0 in t)");
    app->add_option("--h", in.h, "Kummer function file");
}

int cmd_points(const std::string& file, const std::string& out) {
    auto c = load_or_usage(file);
    if (c.points.empty()) throw Usage(file + ": no points");
    auto v = check_general_position(c.points);
    Sink s(out);
    write_header(s.os(), {"points check", config_hash(c), std::nullopt});
    write_points(s.os(), c.points, v);
    return v.pass ? kOk : kFail;
}

int cmd_branch_curve(const std::string& file, const std::string& out, unsigned workers) {
    Pipeline p(load_or_usage(file), workers);
    if (p.config().points.empty()) throw Usage(file + ": branch-curve needs points");
    auto& bc = p.branch_curve();
    Sink s(out);
    write_header(s.os(), {"branch-curve", config_hash(p.config()), std::nullopt});
    write_delpezzo(s.os(), p.delpezzo());
    write_branch_curve(s.os(), bc);
    return kOk;
}

int cmd_torsion(const std::string& file, const std::string& out, unsigned workers) {
    Pipeline p(load_or_usage(file), workers);
    if (p.config().points.empty()) throw Usage(file + ": torsion report needs points");
    auto& t = p.torsion();
    Sink s(out);
    write_header(s.os(), {"torsion report", config_hash(p.config()), p.config().seed});
    write_torsion(s.os(), t);
    bool ok = true;
    for (auto& h : t.h) ok = ok && resultant_square_identity(p.branch_curve().model, h);
    s.os() << "square_identity: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kFail;
}

int cmd_bounds(const ModelInputs& in, const std::string& table, const std::string& primes, const std::string& out, unsigned workers) {
    auto cfg = resolve(in);
    Pipeline p(cfg, workers);
    std::string hash = config_hash(cfg);
    std::vector<std::pair<Int, int>> rows;
    if (!table.empty()) {
        try {
            rows = parse_table(read_file(table), table);
        } catch (const ParseError& e) {
            throw Usage(e.what());
        } catch (const std::ios_base::failure& e) {
            throw Usage(e.what());
        }
        hash = sha256_hex(hash + read_file(table));
    }
    if (!primes.empty()) {
        p.set_primes(parse_prime_list(primes));
        hash = sha256_hex(hash + "primes=" + primes);
    } else if (cfg.points.empty()) {
        std::vector<Int> ps;
        for (auto& r : rows) ps.push_back(r.first);
        if (ps.empty()) throw Usage("bounds without points needs --primes or --verify-table");
        p.set_primes(ps);
    }
    Sink s(out);
    auto& os = s.os();
    write_header(os, {"bounds", hash, std::nullopt});
    int status = kOk;
    if (!rows.empty()) {
        size_t failures = 0;
        for (auto& [q, k] : rows) {
            auto r = verify_sufficiency(p.model(), p.kummer(), q, k);
            os << "row: p=" << q.get_str() << " k=" << k << " " << (r.pass ? "PASS" : "FAIL");
            for (auto& line : r.trace) os << " | " << line;
            os << "\n";
            if (!r.pass) ++failures;
        }
        os << "table_failures: " << failures << "\n";
        if (failures) status = kFail;
    }
    write_profile(os, p.profile());
    return status;
}

int cmd_enumerate(const ModelInputs& in, const std::string& primes, size_t count, std::optional<std::string> strategy, const std::string& out,
                  unsigned workers) {
    auto cfg = resolve(in);
    if (strategy) cfg.strategy = *strategy;
    Pipeline p(cfg, workers);
    if (!primes.empty()) p.set_primes(parse_prime_list(primes));
    auto ts = p.enumerate(count ? count : cfg.count);
    Sink s(out);
    write_header(s.os(), {"enumerate", sha256_hex(config_hash(cfg) + "primes=" + primes), std::nullopt});
    write_profile(s.os(), p.profile());
    for (auto& t : ts) s.os() << "t: " << t.get_str() << "\n";
    return kOk;
}

int cmd_certify(const ModelInputs& in, const std::string& primes, const std::vector<std::string>& tvals, size_t aux, const std::string& out,
                unsigned workers) {
    auto cfg = resolve(in);
    if (aux) cfg.aux_budget = aux;
    Pipeline p(cfg, workers);
    if (!primes.empty()) p.set_primes(parse_prime_list(primes));
    std::vector<Rat> ts;
    std::string joined;
    for (auto& v : tvals) {
        ts.push_back(parse_t(v));
        joined += v + ",";
    }
    if (ts.empty()) ts = p.enumerate(cfg.count);
    auto res = p.certify_all(ts);
    Sink s(out);
    write_header(s.os(), {"certify", sha256_hex(config_hash(cfg) + "primes=" + primes + "t=" + joined), std::nullopt});
    bool ok = true;
    for (auto& r : res) {
        s.os() << "---\n";
        if (!r.certificate) {
            s.os() << "t: " << r.t.get_str() << "\nskipped: " << r.skipped << "\n";
            ok = false;
            continue;
        }
        write_certificate(s.os(), *r.certificate);
        ok = ok && r.certificate->overall == Verdict::Pass;
    }
    return ok ? kOk : kFail;
}

int cmd_oracle(const std::string& a, const std::string& b, size_t count, const std::string& out, unsigned workers) {
    Int A, B;
    if (A.set_str(a, 10) != 0 || B.set_str(b, 10) != 0) throw Usage("--a and --b must be integers");
    auto r = validate_family(A, B, count, workers);
    Sink s(out);
    write_header(s.os(), {"oracle run", sha256_hex("a=" + a + " b=" + b + " count=" + std::to_string(count)), std::nullopt});
    write_oracle(s.os(), r);
    return r.assertion_holds ? kOk : kFail;
}

int cmd_mu3_check(const std::string& out) {
    auto r = check_mu3_example();
    Sink s(out);
    write_header(s.os(), {"mu3 check", sha256_hex("mu3 example"), std::nullopt});
    write_mu3(s.os(), r);
    return r.pass ? kOk : kFail;
}

int cmd_run(const std::string& file, const std::string& outdir, unsigned workers) {
    auto cfg = load_or_usage(file);
    fs::path dir = outdir.empty() ? cfg.output_dir : fs::path(outdir);
    std::string hash = config_hash(cfg);
    Pipeline p(cfg, workers);
    fs::create_directories(dir / "certificates");
    auto open = [&](const std::string& name) {
        auto f = std::make_unique<std::ofstream>(dir / name);
        if (!*f) throw std::runtime_error("cannot write " + (dir / name).string());
        return f;
    };
    auto stage_report = [&](const std::string& name, auto body) {
        auto f = open(name);
        write_header(*f, {"run " + name, hash, cfg.seed});
        body(*f);
        std::cerr << "stage " << name << " done\n";
    };
    if (!cfg.points.empty()) {
        stage_report("points.txt", [&](std::ostream& os) { write_points(os, cfg.points, p.points()); });
        if (!p.points().pass) throw StageError("points", "not in general position: " + p.points().describe());
    }
    if (p.from_points()) {
        stage_report("delpezzo.txt", [&](std::ostream& os) { write_delpezzo(os, p.delpezzo()); });
        stage_report("branch_curve.txt", [&](std::ostream& os) { write_branch_curve(os, p.branch_curve()); });
        stage_report("torsion.txt", [&](std::ostream& os) { write_torsion(os, p.torsion()); });
    } else {
        stage_report("model.txt", [&](std::ostream& os) {
            write_model(os, p.model());
            for (size_t i = 0; i < p.kummer().size(); ++i) write_kummer(os, p.kummer()[i], "h_" + std::to_string(i + 1));
        });
    }
    stage_report("bounds.txt", [&](std::ostream& os) { write_profile(os, p.profile()); });
    auto ts = p.enumerate(cfg.count);
    stage_report("enumerate.txt", [&](std::ostream& os) {
        for (auto& t : ts) os << "t: " << t.get_str() << "\n";
    });
    auto res = p.certify_all(ts);
    bool ok = true;
    for (size_t i = 0; i < res.size(); ++i) {
        auto f = open("certificates/cert_" + std::to_string(i + 1) + ".txt");
        write_header(*f, {"run certify", hash, cfg.seed});
        if (res[i].certificate) {
            write_certificate(*f, *res[i].certificate);
            ok = ok && res[i].certificate->overall == Verdict::Pass;
        } else {
            *f << "t: " << res[i].t.get_str() << "\nskipped: " << res[i].skipped << "\n";
            ok = false;
        }
    }
    std::cerr << "stage certify done\n";
    auto f = open("summary.txt");
    write_header(*f, {"run summary", hash, cfg.seed});
    for (auto& r : res)
        *f << "certificate: t=" << r.t.get_str() << " " << (r.certificate ? verdict_name(r.certificate->overall) : "SKIPPED") << "\n";
    *f << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dpcl: class-group 2-rank families from del Pezzo surfaces of degree 1"};
    app.set_version_flag("--version", std::string("dpcl ") + DPCL_VERSION);
    app.set_help_flag("--help", "print help");   // -h is taken by --h
    app.require_subcommand(1);
    unsigned workers = default_workers();
    std::string out;
    app.add_option("--workers,-j", workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out,-o", out, "report file (run: output directory)");

    auto* points = app.add_subcommand("points", "point configurations");
    points->require_subcommand(1);
    std::string pts_file;
    auto* points_check = points->add_subcommand("check", "general position test");
    points_check->add_option("--file", pts_file, "configuration with point_1..point_8")->required();

    std::string bc_file;
    auto* bc = app.add_subcommand("branch-curve", "linear systems, weighted model and trigonal model");
    bc->add_option("--file,--config", bc_file)->required();

    auto* torsion = app.add_subcommand("torsion", "two-torsion");
    torsion->require_subcommand(1);
    std::string tor_file;
    auto* torsion_report = torsion->add_subcommand("report", "theta divisors, Kummer functions, Weil pairing");
    torsion_report->add_option("--file,--config", tor_file)->required();

    ModelInputs bounds_in;
    std::string table, bounds_primes;
    auto* bounds = app.add_subcommand("bounds", "local admissibility profile");
    add_model_inputs(bounds, bounds_in);
    bounds->add_option("--verify-table", table, "rows 'p k' to verify");
    bounds->add_option("--primes", bounds_primes, "comma-separated primes replacing the derived set");

    ModelInputs enum_in;
    std::string enum_primes;
    size_t enum_count = 0;
    std::optional<std::string> enum_strategy;
    auto* enumerate = app.add_subcommand("enumerate", "admissible parameters");
    add_model_inputs(enumerate, enum_in);
    enumerate->add_option("--primes", enum_primes);
    enumerate->add_option("--count", enum_count);
    enumerate->add_option("--strategy", enum_strategy)->check(CLI::IsMember({"positive", "negative", "both"}));

    ModelInputs cert_in;
    std::string cert_primes;
    std::vector<std::string> cert_t;
    size_t cert_aux = 0;
    auto* certify = app.add_subcommand("certify", "fibre field certificates");
    add_model_inputs(certify, cert_in);
    certify->add_option("--primes", cert_primes);
    certify->add_option("--t", cert_t, "parameter values (default: enumerate)");
    certify->add_option("--aux-budget", cert_aux);

    auto* oracle = app.add_subcommand("oracle", "genus-1 validation");
    oracle->require_subcommand(1);
    std::string oa, ob;
    size_t ocount = 25;
    auto* oracle_run = oracle->add_subcommand("run", "certify members and compare with form class groups");
    oracle_run->add_option("--a", oa)->required();
    oracle_run->add_option("--b", ob)->required();
    oracle_run->add_option("--count", ocount);

    auto* mu3 = app.add_subcommand("mu3", "order-3 automorphisms");
    mu3->require_subcommand(1);
    auto* mu3_check = mu3->add_subcommand("check", "built-in zeta3 configuration");
    int genus = 0;
    auto* mu3_bound = mu3->add_subcommand("bound", "rank bound");
    mu3_bound->add_option("--genus", genus)->required()->check(CLI::Range(1, 30));

    std::string run_file;
    auto* run = app.add_subcommand("run", "full pipeline with stage reports");
    run->add_option("--config,--file", run_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*points_check) return cmd_points(pts_file, out);
        if (*bc) return cmd_branch_curve(bc_file, out, workers);
        if (*torsion_report) return cmd_torsion(tor_file, out, workers);
        if (*bounds) return cmd_bounds(bounds_in, table, bounds_primes, out, workers);
        if (*enumerate) return cmd_enumerate(enum_in, enum_primes, enum_count, enum_strategy, out, workers);
        if (*certify) return cmd_certify(cert_in, cert_primes, cert_t, cert_aux, out, workers);
        if (*oracle_run) return cmd_oracle(oa, ob, ocount, out, workers);
        if (*mu3_check) return cmd_mu3_check(out);
        if (*mu3_bound) {
            std::cout << rank_bound(genus) << "\n";
            return kOk;
        }
        if (*run) return cmd_run(run_file, out, workers);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    std::cerr << app.help();
    return kUsage;
}
