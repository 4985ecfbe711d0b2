// sylowed command-line interface; talks to the core only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sylowed/sylowed.h"

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kCap = 3 };

struct RunConfig {
    std::string family;
    int p = 0, r = 1;
    std::optional<int> n, m;
    int epsilon = 1;
    std::string format = "json";
    uint64_t cap_group = 0, cap_chars = 0, cap_repdim = 0;
    unsigned workers = 1;
    uint64_t seed = 0;
    std::string out;
    std::string character;
    bool no_oracle = false;
    // table
    std::vector<std::string> families;
    std::vector<int> ps, rs, ns, ms;
    bool verify_cells = false;
};

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_for(syl_status s) {
    switch (s) {
        case SYL_OK: return kOk;
        case SYL_ERR_CAP:
        case SYL_ERR_OVERFLOW: return kCap;
        case SYL_ERR_MISMATCH:
        case SYL_ERR_INTERNAL: return kMismatch;
        default: return kBadInput;
    }
}

using Ctx = std::unique_ptr<syl_context, decltype(&syl_context_destroy)>;
using Pres = std::unique_ptr<syl_presentation, decltype(&syl_presentation_destroy)>;

Ctx make_context(const RunConfig& c) {
    Ctx ctx(syl_context_create(), &syl_context_destroy);
    if (!ctx) throw std::runtime_error("cannot allocate context");
    syl_context_set_caps(ctx.get(), c.cap_group, c.cap_chars, c.cap_repdim);
    if (syl_context_set_workers(ctx.get(), c.workers) != SYL_OK) throw BadInput("--workers must be positive");
    syl_context_set_seed(ctx.get(), c.seed);
    return ctx;
}

json take_json(char* s) {
    json j = json::parse(s);
    syl_string_free(s);
    return j;
}

bool uses_n(int family) { return family == SYL_HEISENBERG || family == SYL_UP_FULL || family == SYL_SP; }

// Resolves the family name and the n/m flags into library parameters.
// heisenberg, up, sp take --n only. The orthogonal and unitary families take
// --m, or --n as the ambient matrix size; the bare names "unitary" and
// "orthogonal" require --n and pick the parity from it.
syl_family_params resolve(const std::string& name, int p, int r, std::optional<int> n, std::optional<int> m,
                          int epsilon) {
    if (n && m) throw BadInput("give either --n or --m, not both");
    if (!n && !m) throw BadInput("missing size: give --n or --m");
    syl_family_params f{0, p, r, 0, epsilon};
    if (name == "unitary" || name == "orthogonal" || name == "orth") {
        if (!n) throw BadInput("family '" + name + "' needs --n (matrix size) to select the parity");
        bool odd = *n % 2 != 0;
        if (name == "unitary") f.family = odd ? SYL_UNITARY_ODD : SYL_UNITARY_EVEN;
        else f.family = odd ? SYL_ORTH_ODD : SYL_ORTH_EVEN;
        f.size = odd ? (*n - 1) / 2 : *n / 2;
        return f;
    }
    if (syl_family_from_name(name.c_str(), &f.family) != SYL_OK)
        throw BadInput("unknown family '" + name +
                       "' (heisenberg, up, sp, orth-even, orth-odd, unitary-even, unitary-odd, unitary, orthogonal)");
    if (uses_n(f.family)) {
        if (m) throw BadInput(std::string("family '") + syl_family_name(f.family) + "' is sized by --n");
        f.size = *n;
        return f;
    }
    if (m) {
        f.size = *m;
        return f;
    }
    bool odd_family = f.family == SYL_ORTH_ODD || f.family == SYL_UNITARY_ODD;
    if ((*n % 2 != 0) != odd_family)
        throw BadInput("--n " + std::to_string(*n) + " has the wrong parity for family '" + name + "'");
    f.size = odd_family ? (*n - 1) / 2 : *n / 2;
    return f;
}

void record_config(json& j, const RunConfig& c, syl_context* ctx) {
    j["seed"] = syl_context_seed(ctx);
    json caps;
    caps["workers"] = c.workers;
    if (c.cap_group) caps["group"] = c.cap_group;
    if (c.cap_chars) caps["chars"] = c.cap_chars;
    if (c.cap_repdim) caps["repdim"] = c.cap_repdim;
    j["caps_overrides"] = caps;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

int size_of(const json& j) { return j.contains("n") ? j["n"].get<int>() : j["m"].get<int>(); }

std::vector<uint32_t> parse_char(const std::string& s) {
    std::vector<uint32_t> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            long x = std::stol(tok, &pos);
            if (pos != tok.size() || x < 0) throw std::invalid_argument(tok);
            v.push_back(uint32_t(x));
        } catch (const std::exception&) {
            throw BadInput("--char expects comma-separated non-negative integers, got '" + s + "'");
        }
    }
    if (v.empty()) throw BadInput("--char is empty");
    return v;
}

struct Output {
    std::string text;
    int code = kOk;
};

Output fail_with(syl_context* ctx, syl_status s) {
    std::cerr << "error: " << syl_status_string(s) << ": " << syl_last_error(ctx) << "\n";
    return {"", exit_for(s)};
}

Output cmd_formula(const RunConfig& c) {
    Ctx ctx = make_context(c);
    auto f = resolve(c.family, c.p, c.r, c.n, c.m, c.epsilon);
    char* s = nullptr;
    syl_status st = syl_formula_json(ctx.get(), &f, &s);
    if (st != SYL_OK) return fail_with(ctx.get(), st);
    json j = take_json(s);
    record_config(j, c, ctx.get());
    if (c.format == "json") return {j.dump(2) + "\n"};
    if (c.format == "csv")
        return {csv_row({"family", "p", "r", "n", "ed", "method"}) +
                csv_row({j["family"], std::to_string(c.p), std::to_string(c.r), std::to_string(size_of(j)),
                         std::to_string(j["ed"].get<uint64_t>()), j["method"]})};
    return {std::to_string(j["ed"].get<uint64_t>()) + "\n"};
}

Output cmd_verify(const RunConfig& c) {
    Ctx ctx = make_context(c);
    auto f = resolve(c.family, c.p, c.r, c.n, c.m, c.epsilon);
    char* s = nullptr;
    int agree = 0;
    syl_status st = syl_verify_json(ctx.get(), &f, c.no_oracle ? 0 : 1, &agree, &s);
    if (!s) return fail_with(ctx.get(), st);
    json j = take_json(s);
    record_config(j, c, ctx.get());
    Output o;
    o.code = exit_for(st);
    if (st != SYL_OK) std::cerr << "verify: " << syl_status_string(st) << ": " << syl_last_error(ctx.get()) << "\n";
    std::string status = j["status"];
    if (c.format == "json") {
        o.text = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        std::string search = j.contains("search") && j["search"].is_object()
                                 ? std::to_string(j["search"]["ed"].get<uint64_t>())
                                 : "";
        o.text = csv_row({"family", "p", "r", "n", "ed", "method", "status", "search"}) +
                 csv_row({j["family"], std::to_string(c.p), std::to_string(c.r), std::to_string(size_of(j)),
                          std::to_string(j["ed"].get<uint64_t>()), j["method"], status, search});
    } else {
        std::ostringstream os;
        os << status << " ed=" << j["ed"].get<uint64_t>();
        if (j.contains("certificate")) {
            // summand dimensions, largest first
            std::vector<uint64_t> dims;
            for (const auto& x : j["certificate"]["summands"]) dims.push_back(x["dim"].get<uint64_t>());
            std::sort(dims.rbegin(), dims.rend());
            os << " summands {";
            for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
            os << "} kernel=" << j["certificate"]["kernel_size"].get<uint64_t>();
        }
        if (j.contains("detail")) os << " (" << j["detail"].get<std::string>() << ")";
        o.text = os.str() + "\n";
    }
    return o;
}

Output cmd_table(const RunConfig& c) {
    if (c.families.empty() || c.ps.empty() || c.rs.empty()) throw BadInput("table needs --families, --ps and --rs");
    if (c.ns.empty() == c.ms.empty()) throw BadInput("table needs exactly one of --ns or --ms");
    for (int v : c.ps) if (v < 2) throw BadInput("malformed range: p values must be primes");
    for (int v : c.rs) if (v < 1) throw BadInput("malformed range: r values must be positive");
    Ctx ctx = make_context(c);
    const auto& sizes = c.ns.empty() ? c.ms : c.ns;
    json rows = json::array();
    int code = kOk;
    for (const auto& fam : c.families)
        for (int p : c.ps)
            for (int r : c.rs)
                for (int sz : sizes) {
                    std::optional<int> n, m;
                    (c.ns.empty() ? m : n) = sz;
                    auto f = resolve(fam, p, r, n, m, c.epsilon);
                    syl_formula_result fr{};
                    syl_status st = syl_formula(ctx.get(), &f, &fr);
                    if (st != SYL_OK) {
                        std::cerr << "error: cell " << fam << " p=" << p << " r=" << r << " size=" << sz << ": "
                                  << syl_status_string(st) << ": " << syl_last_error(ctx.get()) << "\n";
                        return {"", exit_for(st)};
                    }
                    static const char* methods[] = {"closed_form", "wm_search", "special_known"};
                    std::string verified = "no";
                    if (c.verify_cells) {
                        char* s = nullptr;
                        int agree = 0;
                        syl_status vs = syl_verify_json(ctx.get(), &f, c.no_oracle ? 0 : 1, &agree, &s);
                        if (s) {
                            json vj = take_json(s);
                            std::string status = vj["status"];
                            verified = status == "OK" ? "yes" : status == "SPECIAL" ? "special"
                                                           : status == "CAP_EXCEEDED" ? "cap" : "MISMATCH";
                        } else {
                            verified = "error";
                        }
                        if (vs == SYL_ERR_MISMATCH || vs == SYL_ERR_INTERNAL || !s) code = kMismatch;
                    }
                    rows.push_back({{"family", syl_family_name(f.family)},
                                    {"p", p},
                                    {"r", r},
                                    {"n", f.size},
                                    {"ed", fr.ed},
                                    {"method", methods[fr.method]},
                                    {"verified", verified}});
                }
    Output o;
    o.code = code;
    if (c.format == "json") {
        json j;
        j["columns"] = {"family", "p", "r", "n", "ed", "method", "verified"};
        j["rows"] = rows;
        record_config(j, c, ctx.get());
        o.text = j.dump(2) + "\n";
    } else {
        // text and csv share the stable column order
        o.text = csv_row({"family", "p", "r", "n", "ed", "method", "verified"});
        for (const auto& row : rows)
            o.text += csv_row({row["family"], std::to_string(row["p"].get<int>()), std::to_string(row["r"].get<int>()),
                               std::to_string(row["n"].get<int>()), std::to_string(row["ed"].get<uint64_t>()),
                               row["method"], row["verified"]});
    }
    return o;
}

Output cmd_inspect(const RunConfig& c, const std::string& what) {
    Ctx ctx = make_context(c);
    auto f = resolve(c.family, c.p, c.r, c.n, c.m, c.epsilon);
    syl_presentation* raw = nullptr;
    syl_status st = syl_presentation_build(ctx.get(), &f, &raw);
    if (st != SYL_OK) return fail_with(ctx.get(), st);
    Pres pres(raw, &syl_presentation_destroy);
    char* s = nullptr;
    if (what == "center") {
        st = syl_inspect_center_json(ctx.get(), pres.get(), &s);
    } else if (what == "orbits") {
        st = syl_inspect_orbits_json(ctx.get(), pres.get(), &s);
    } else {
        if (c.character.empty()) throw BadInput("inspect stabilizer needs --char");
        auto ch = parse_char(c.character);
        st = syl_inspect_stabilizer_json(ctx.get(), pres.get(), ch.data(), int(ch.size()), &s);
    }
    if (st != SYL_OK) return fail_with(ctx.get(), st);
    json j = take_json(s);
    record_config(j, c, ctx.get());
    if (c.format == "json") return {j.dump(2) + "\n"};
    std::ostringstream os;
    if (what == "center") {
        if (c.format == "csv") {
            os << "bruteforce_rank,closed_form_rank,equal\n"
               << j["bruteforce_rank"] << "," << j["center_rank"] << "," << (j["equal"].get<bool>() ? "true" : "false")
               << "\n";
        } else {
            os << "rank " << j["bruteforce_rank"] << " (closed form " << j["center_rank"] << ", "
               << (j["equal"].get<bool>() ? "equal" : "DIFFERENT") << ")\ncoords";
            for (const auto& l : j["center_labels"]) os << " " << l.get<std::string>();
            if (j["center_includes_L"].get<bool>()) os << " +L";
            os << "\n";
        }
    } else if (what == "orbits") {
        os << "rep,orbit_size,stab_size,central\n";
        auto vec = [](const json& v) {
            std::string t;
            for (size_t i = 0; i < v.size(); ++i) t += (i ? " " : "") + std::to_string(v[i].get<uint32_t>());
            return t;
        };
        for (const auto& o : j["orbits"])
            os << vec(o["rep"]) << "," << o["orbit_size"] << "," << o["stab_size"] << "," << vec(o["central"]) << "\n";
        if (c.format == "text") os << "sum " << j["sum_orbit_sizes"] << " of " << j["char_group_order"] << "\n";
    } else {
        if (c.format == "csv") os << "size,orbit_size,closed_form\n" << j["size"] << "," << j["orbit_size"] << ","
                                  << (j["closed_form"].is_string() ? j["closed_form"].get<std::string>()
                                                                   : std::to_string(j["closed_form"].get<uint64_t>()))
                                  << "\n";
        else os << "size " << j["size"] << " orbit " << j["orbit_size"] << " closed_form " << j["closed_form"] << "\n";
    }
    return {os.str()};
}

// Output, cap and worker options; attached to every leaf command.
void add_common_flags(CLI::App* sub, RunConfig& c) {
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--cap-group", c.cap_group, "group enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--cap-chars", c.cap_chars, "character enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--cap-repdim", c.cap_repdim, "induced representation dimension cap")->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed recorded in the output");
    sub->add_option("--out", c.out, "write output to this file");
}

void add_family_flags(CLI::App* sub, RunConfig& c) {
    add_common_flags(sub, c);
    sub->add_option("--family", c.family, "heisenberg, up, sp, orth-even, orth-odd, unitary-even, unitary-odd, "
                                          "unitary, orthogonal")->required();
    sub->add_option("--p", c.p, "characteristic")->required();
    sub->add_option("--r", c.r, "degree over F_p")->capture_default_str();
    sub->add_option("--n", c.n, "matrix size parameter");
    sub->add_option("--m", c.m, "half-rank parameter");
    sub->add_option("--epsilon", c.epsilon, "orthogonal type, accepted for orth-even without effect")
        ->check(CLI::IsMember({-1, 1}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal faithful representations of Sylow subgroups of finite classical groups"};
    app.require_subcommand(1);
    RunConfig c;
    auto* formula = app.add_subcommand("formula", "closed-form essential dimension");
    add_family_flags(formula, c);
    auto* verify = app.add_subcommand("verify", "formula vs orbit search vs explicit representation");
    add_family_flags(verify, c);
    verify->add_flag("--no-oracle", c.no_oracle, "skip the explicit representation");
    auto* table = app.add_subcommand("table", "formula grid");
    add_common_flags(table, c);
    table->add_option("--families", c.families)->delimiter(',')->required();
    table->add_option("--ps", c.ps)->delimiter(',')->required();
    table->add_option("--rs", c.rs)->delimiter(',')->required();
    table->add_option("--ns", c.ns)->delimiter(',');
    table->add_option("--ms", c.ms)->delimiter(',');
    table->add_option("--epsilon", c.epsilon)->check(CLI::IsMember({-1, 1}));
    table->add_flag("--verify-cells", c.verify_cells, "also run verify on every cell");
    table->add_flag("--no-oracle", c.no_oracle, "skip the explicit representation when verifying");
    auto* inspect = app.add_subcommand("inspect", "center, orbits or one stabilizer");
    inspect->require_subcommand(1);
    std::string what;
    for (const char* name : {"center", "orbits", "stabilizer"}) {
        auto* s = inspect->add_subcommand(name);
        add_family_flags(s, c);
        if (std::string(name) == "stabilizer") s->add_option("--char", c.character, "exponents, e.g. 1,0,0");
        s->callback([&what, name] { what = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    Output o;
    try {
        if (*formula) o = cmd_formula(c);
        else if (*verify) o = cmd_verify(c);
        else if (*table) o = cmd_table(c);
        else o = cmd_inspect(c, what);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    }
    if (!o.text.empty()) {
        if (c.out.empty()) {
            std::cout << o.text;
        } else {
            std::ofstream f(c.out);
            if (!f) {
                std::cerr << "error: cannot open " << c.out << "\n";
                return kBadInput;
            }
            f << o.text;
        }
    }
    return o.code;
}
