#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "msum/campaign.hpp"
#include "msum/classification.hpp"
#include "msum/cyclotomic.hpp"
#include "msum/engine.hpp"
#include "msum/errors.hpp"
#include "msum/prime_power.hpp"

namespace msum::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Options {
    Format format = Format::text;
    unsigned jobs = 0;
    std::string store_path;
    std::optional<Int> e_min, e_max, p_max, q_min, q_max, r, n;
    std::optional<unsigned> k_cap;
    std::string report_path;
    std::string output_path;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A right-aligned text table.
class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width(rows_.front().size(), 0);
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
            }
            out << '\n';
        }
    }

    void print_csv(std::ostream& out) const {
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string str(Int x) { return std::to_string(x); }

// "4^0+4^1+4^2", with repeated terms folded as "3*5^0".
std::string render_witness(Int q, const std::vector<Int>& witness) {
    std::string out;
    for (std::size_t i = 0; i < witness.size();) {
        std::size_t j = i;
        while (j < witness.size() && witness[j] == witness[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += str(j - i) + "*";
        out += str(q) + "^" + str(witness[i]);
        i = j;
    }
    return out;
}

std::optional<std::string> closed_form(const PowerSumInstance& inst) {
    if (inst.e == 1) return "e=1 case";
    if (inst.q == 1 % inst.e) return "q≡1 case";
    if ((inst.e & (inst.e - 1)) == 0 && inst.q % 2 == 1) return "two-power case";
    if (is_m_two(inst)) return "m=2 criterion";
    if (inst.q > 1 && lemma3_applies(inst)) return "e < e1^2+2e1, m=e1";
    return std::nullopt;
}

int cmd_m(Int q, Int e, const Options& opt, std::ostream& out) {
    if (e == 0) throw UsageError("e must be positive");
    if (std::gcd(q % e, e) != 1) {
        throw UsageError("q=" + str(q) + " and e=" + str(e) + " must be coprime (gcd(q, e) = 1)");
    }
    const auto inst = PowerSumInstance::make(q, e);
    const auto result = m(q, e);
    const auto form = closed_form(inst);
    const Int bound = ceil_bound(inst);
    switch (opt.format) {
        case Format::json:
            out << json{{"q", q},
                        {"e", e},
                        {"m", result.value},
                        {"witness", result.witness},
                        {"n", inst.n},
                        {"e1", inst.e1},
                        {"ceil_bound", bound},
                        {"closed_form", form ? json(*form) : json(nullptr)}}
                       .dump(2)
                << '\n';
            break;
        case Format::csv:
            out << "q,e,m,n,e1,ceil_bound\n"
                << q << ',' << e << ',' << result.value << ',' << inst.n << ',' << inst.e1 << ','
                << bound << '\n';
            break;
        case Format::text:
            out << "m=" << result.value;
            if (form && inst.q == 1 % inst.e) {
                out << " (" << *form << ")\n";
            } else {
                out << ", witness " << render_witness(q, result.witness);
                if (form) out << " (" << *form << ")";
                out << '\n';
            }
            out << "n=" << inst.n << ", e1=" << inst.e1 << ", ceil(e/n)=" << bound << '\n';
            break;
    }
    return kOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
    const Int e_min = std::max<Int>(1, opt.e_min.value_or(1));
    const Int e_max = opt.e_max.value_or(12);
    const Int q_min = opt.q_min.value_or(0);
    const Int q_max = opt.q_max.value_or(e_max);
    if (e_max < e_min) throw UsageError("--e-max must be at least --e-min");
    const Sweep sweep(SweepOptions{opt.jobs, nullptr});
    const auto tables = sweep.map<ModulusTable>(
        e_max - e_min + 1, [&](std::size_t i) { return modulus_table(e_min + i); });

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.output_path.empty()) {
        file.open(opt.output_path);
        if (!file) throw UsageError("cannot write " + opt.output_path);
        sink = &file;
    }

    Table table({"e", "q", "m", "n", "e1"});
    json rows = json::array();
    for (const auto& t : tables) {
        const Int e = t.modulus;
        for (Int q = q_min; q <= q_max && q < e; ++q) {
            if (!t.is_unit(q)) continue;
            const Int e1 = std::gcd(e, (q + e - 1) % e);
            if (opt.format == Format::json) {
                rows.push_back({{"e", e}, {"q", q}, {"m", t.m[q]}, {"n", t.order[q]}, {"e1", e1}});
            } else {
                table.add({str(e), str(q), str(t.m[q]), str(t.order[q]), str(e1)});
            }
        }
    }
    switch (opt.format) {
        case Format::json:
            *sink << json{{"e_min", e_min}, {"e_max", e_max}, {"q_min", q_min}, {"q_max", q_max},
                          {"rows", rows}}
                         .dump(2)
                  << '\n';
            break;
        case Format::csv: table.print_csv(*sink); break;
        case Format::text: table.print(*sink); break;
    }
    return kOk;
}

// --store beats MSUM_STORE; empty means no store.
std::string store_path(const Options& opt) {
    if (!opt.store_path.empty()) return opt.store_path;
    const char* env = std::getenv("MSUM_STORE");
    return env ? env : "";
}

std::unique_ptr<ResultStore> open_store(const Options& opt) {
    const auto path = store_path(opt);
    if (path.empty()) return nullptr;
    return std::make_unique<ResultStore>(ResultStore::open(path));
}

int cmd_verify(const std::string& claim, const Options& opt, std::ostream& out) {
    auto store = open_store(opt);
    ClaimParams params;
    params.e_min = opt.e_min;
    params.e_max = opt.e_max;
    params.p_max = opt.p_max;
    params.q_max = opt.q_max;
    params.k_cap = opt.k_cap;
    params.r = opt.r;
    params.n = opt.n;
    params.jobs = opt.jobs;
    params.store = store.get();
    const auto report = run_claim(claim, params);
    if (store) store->save(store_path(opt));

    const std::filesystem::path path =
        opt.report_path.empty() ? std::filesystem::path("reports") / (claim + ".json")
                                : std::filesystem::path(opt.report_path);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write report " + path.string());
    file << to_json(report).dump(2) << '\n';

    switch (opt.format) {
        case Format::json: out << to_json(report).dump(2) << '\n'; break;
        case Format::csv:
            out << "claim_id,checks,violations\n"
                << report.claim_id << ',' << report.checks << ',' << report.violations.size() << '\n';
            break;
        case Format::text: out << render_text(report); break;
    }
    return report.verified() ? kOk : kViolations;
}

std::string optional_str(const std::optional<unsigned>& x) { return x ? str(*x) : "-"; }

int cmd_sequence(Int p, Int n, unsigned k_max, const Options& opt, std::ostream& out) {
    const auto tower = tower_sequence(p, n, k_max);
    const std::string k_hit = tower.k_hit ? str(*tower.k_hit) : "-";
    switch (opt.format) {
        case Format::json: {
            json levels = json::array();
            for (const auto& l : tower.levels) {
                levels.push_back({{"k", l.k},
                                  {"modulus", l.modulus},
                                  {"generator", l.generator},
                                  {"ord", l.ord},
                                  {"m", l.m},
                                  {"w", l.w ? json(*l.w) : json(nullptr)}});
            }
            out << json{{"p", p},
                        {"n", n},
                        {"r", tower.r},
                        {"sequence", tower.sequence()},
                        {"levels", levels},
                        {"limit", tower.limit},
                        {"k_hit", tower.k_hit ? json(*tower.k_hit) : json(nullptr)},
                        {"notes", tower.notes}}
                       .dump(2)
                << '\n';
            break;
        }
        case Format::csv: {
            Table t({"p", "n", "k", "modulus", "generator", "ord", "m", "w", "limit"});
            for (const auto& l : tower.levels) {
                t.add({str(p), str(n), str(l.k), str(l.modulus), str(l.generator), str(l.ord),
                       str(l.m), optional_str(l.w), str(tower.limit)});
            }
            t.print_csv(out);
            break;
        }
        case Format::text: {
            out << render_tuple(tower.sequence()) << '\n';
            Table t({"k", "modulus", "generator", "ord", "m", "w"});
            for (const auto& l : tower.levels) {
                t.add({str(l.k), str(l.modulus), str(l.generator), str(l.ord), str(l.m),
                       optional_str(l.w)});
            }
            t.print(out);
            out << "r=" << tower.r << ", limit=" << tower.limit << ", first k with m=r: " << k_hit
                << '\n';
            for (const auto& note : tower.notes) out << "note: " << note << '\n';
            break;
        }
    }
    return kOk;
}

int cmd_tower(Int q, Int p, unsigned k_max, const Options& opt, std::ostream& out) {
    const auto tower = fixed_base_tower(q, p, k_max);
    switch (opt.format) {
        case Format::json: {
            json entries = json::array();
            for (const auto& x : tower.entries) {
                entries.push_back({{"k", x.k},
                                   {"modulus", x.modulus},
                                   {"ord", x.ord},
                                   {"i", x.factors.i},
                                   {"d", x.factors.d},
                                   {"m", x.m}});
            }
            out << json{{"q", q}, {"p", p}, {"n", tower.n}, {"w", tower.w}, {"entries", entries}}
                       .dump(2)
                << '\n';
            break;
        }
        case Format::csv: {
            Table t({"q", "p", "k", "modulus", "ord", "i", "d", "m", "w"});
            for (const auto& x : tower.entries) {
                t.add({str(q), str(p), str(x.k), str(x.modulus), str(x.ord), str(x.factors.i),
                       str(x.factors.d), str(x.m), str(tower.w)});
            }
            t.print_csv(out);
            break;
        }
        case Format::text: {
            out << render_tuple(tower.m_values()) << '\n';
            Table t({"k", "modulus", "ord", "p^i", "d", "m"});
            for (const auto& x : tower.entries) {
                t.add({str(x.k), str(x.modulus), str(x.ord), str(p) + "^" + str(x.factors.i),
                       str(x.factors.d), str(x.m)});
            }
            t.print(out);
            out << "n=" << tower.n << ", w=" << tower.w << '\n';
            break;
        }
    }
    return kOk;
}

std::string render_entries(const std::vector<ExceptionEntry>& entries) {
    std::string s = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += "(" + str(entries[i].p) + "," + str(entries[i].k) + "," + str(entries[i].m) + ")";
    }
    return s + "}";
}

int cmd_exceptions(Int n, const Options& opt, std::ostream& out) {
    const auto set = corollary13_exceptions(n, opt.k_cap.value_or(4));
    switch (opt.format) {
        case Format::json: out << to_json(set).dump(2) << '\n'; break;
        case Format::csv: {
            Table t({"p", "k", "m"});
            for (const auto& x : set.entries) t.add({str(x.p), str(x.k), str(x.m)});
            t.print_csv(out);
            break;
        }
        case Format::text:
            out << render_entries(set.entries) << '\n';
            out << "threshold=" << set.limit.to_string() << ", " << set.candidate_pool.size()
                << " candidate denominators from " << set.tuples << " exponent tuples\n";
            out << "status: " << (set.complete() ? "complete" : "candidates, verified members")
                << '\n';
            for (const auto& u : set.unresolved) {
                out << "unresolved: " << u.value << " (" << u.reason << ")\n";
            }
            break;
    }
    return kOk;
}

int cmd_claims(std::ostream& out) {
    for (const auto& c : claims()) out << std::left << std::setw(14) << c.id << c.summary << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal vanishing sums of powers modulo e"};
    app.require_subcommand(1);
    Options opt;
    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--jobs", opt.jobs, "worker threads (default: logical cores)");
    };

    Int q = 0, e = 0, p = 0, n = 0;
    unsigned k = 0;
    std::string claim;

    auto* m_cmd = app.add_subcommand("m", "compute m(q, e) with a witness");
    m_cmd->add_option("q", q)->required();
    m_cmd->add_option("e", e)->required();
    common(m_cmd);

    auto* table_cmd = app.add_subcommand("table", "grid of m values, e outer and q inner");
    common(table_cmd);
    table_cmd->add_option("--e-min", opt.e_min);
    table_cmd->add_option("--e-max", opt.e_max);
    table_cmd->add_option("--q-min", opt.q_min);
    table_cmd->add_option("--q-max", opt.q_max);
    table_cmd->add_option("--output", opt.output_path, "write to a file instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
    verify_cmd->add_option("claim", claim)->required();
    common(verify_cmd);
    verify_cmd->add_option("--e-min", opt.e_min);
    verify_cmd->add_option("--e-max", opt.e_max);
    verify_cmd->add_option("--p-max", opt.p_max);
    verify_cmd->add_option("--q-max", opt.q_max);
    verify_cmd->add_option("--k-cap", opt.k_cap);
    verify_cmd->add_option("--r", opt.r);
    verify_cmd->add_option("--n", opt.n);
    verify_cmd->add_option("--store", opt.store_path, "result cache (default: $MSUM_STORE)");
    verify_cmd->add_option("--report", opt.report_path, "report path (default: reports/<claim>.json)");

    auto* sequence_cmd = app.add_subcommand("sequence", "tower of order-n subgroups mod p^k");
    sequence_cmd->add_option("p", p)->required();
    sequence_cmd->add_option("n", n)->required();
    sequence_cmd->add_option("k_max", k)->required();
    common(sequence_cmd);

    auto* tower_cmd = app.add_subcommand("tower", "m(q, p^k) for a fixed base q");
    tower_cmd->add_option("q", q)->required();
    tower_cmd->add_option("p", p)->required();
    tower_cmd->add_option("k_max", k)->required();
    common(tower_cmd);

    auto* exceptions_cmd = app.add_subcommand("exceptions", "small-m prime powers for order n");
    exceptions_cmd->add_option("n", n)->required();
    exceptions_cmd->add_option("--k-cap", opt.k_cap);
    common(exceptions_cmd);

    auto* claims_cmd = app.add_subcommand("claims", "list claim ids accepted by verify");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*m_cmd) return cmd_m(q, e, opt, out);
        if (*table_cmd) return cmd_table(opt, out);
        if (*verify_cmd) return cmd_verify(claim, opt, out);
        if (*sequence_cmd) return cmd_sequence(p, n, k, opt, out);
        if (*tower_cmd) return cmd_tower(q, p, k, opt, out);
        if (*exceptions_cmd) return cmd_exceptions(n, opt, out);
        if (*claims_cmd) return cmd_claims(out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const NotCoprime& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const UnknownClaim& ex) {
        err << "error: " << ex.what() << "; run 'claims' for the list\n";
        return kUsage;
    } catch (const CapExceeded& ex) {
        err << "cap exceeded: " << ex.what() << '\n';
        return kCapExceeded;
    }
    return kUsage;
}

}  // namespace msum::cli
