// superfat: Hilbert functions of unions of 2-squares, fat points and their
// degenerations, with certificate sweeps and Horace replays.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 invalid scheme.

#include "superfat/io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace superfat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBadScheme = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::vector<std::uint64_t> primes{kDefaultPrime};
    std::uint64_t seed = 0;
    int trials = 3;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--prime", c.primes, "prime modulus; repeat for a cross-check")->capture_default_str();
    cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
    cmd->add_option("--trials", c.trials, "random trials per row")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("--out", c.out, "output file (default stdout)");
}

std::vector<PrimeField> fields_of(const Common& c) {
    std::vector<PrimeField> out;
    for (std::uint64_t p : c.primes) {
        try {
            out.emplace_back(p);
        } catch (const std::exception& e) {
            throw UsageError("--prime " + std::to_string(p) + ": " + e.what());
        }
    }
    return out;
}

RunHeader header_of(const Common& c) { return RunHeader{c.primes, c.seed, c.trials}; }

// Writes to a sibling temporary and renames, so a failed run leaves no partial file.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw UsageError("cannot write " + path);
        os << text;
        if (!os.flush()) throw UsageError("cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string text_header(const Common& c) {
    std::string primes;
    for (std::size_t i = 0; i < c.primes.size(); ++i) primes += (i ? ";" : "") + std::to_string(c.primes[i]);
    return "# prime=" + primes + " seed=" + std::to_string(c.seed) + " trials=" + std::to_string(c.trials) + "\n";
}

int cmd_dim(const Common& c, const std::string& input, int d) {
    if (d < 0) throw UsageError("--d must be non-negative");
    const PrimeField field = fields_of(c).front();
    ScalarStream stream(field, c.seed);
    const SchemeUnion u = parse_scheme_spec(read_file(input), stream);
    const long dim = ideal_dim(field, u, d);
    const json doc{{"header", to_json(header_of(c))},
                   {"d", d},
                   {"length", u.length()},
                   {"expected", expected_dim(u, d)},
                   {"computed", dim},
                   {"hilbert", static_cast<long>(form_dim(d)) - dim}};
    if (c.format == "csv")
        emit(c.out, text_header(c) + "d,length,expected,computed,hilbert\n" + std::to_string(d) + "," +
                        std::to_string(u.length()) + "," + std::to_string(expected_dim(u, d)) + "," +
                        std::to_string(dim) + "," + std::to_string(static_cast<long>(form_dim(d)) - dim) + "\n");
    else
        emit(c.out, doc.dump(2) + "\n");
    return kOk;
}

int cmd_sweep(const Common& c, int d_max, const std::string& mode, bool with_triple, unsigned jobs) {
    if (d_max < 1) throw UsageError("--dmax must be at least 1");
    const auto fields = fields_of(c);
    const Extras extras = with_triple ? Extras{{3}} : Extras{};
    const auto rows = sweep(fields, d_max, mode == "full" ? SweepMode::Full : SweepMode::Critical, extras, c.trials,
                            c.seed, jobs);
    emit(c.out, c.format == "csv" ? certificates_csv(header_of(c), rows) : certificates_json(header_of(c), rows));
    for (const Certificate& r : rows)
        if (!r.ok()) return kFailed;
    return kOk;
}

int cmd_horace(const Common& c, const std::string& lemma, int d, int s) {
    const PrimeField field = fields_of(c).front();
    std::vector<ReductionReport> reps;
    auto need_d = [&] {
        if (d < 0) throw UsageError("--lemma " + lemma + " needs --d");
    };
    if (lemma == "24") {
        reps = replay_lemma24(field, c.seed);
    } else if (lemma == "dispari") {
        need_d();
        if (d < 3 || d % 2 == 0) throw UsageError("--lemma dispari needs odd d >= 3");
        const int on_r = (d + 1) / 2;
        if (s < 0) s = std::max(on_r, s_star_bounds(d, 0).lower);
        if (s < on_r) throw UsageError("--lemma dispari needs s >= (d+1)/2");
        reps.push_back(replay_dispari(field, d, s - on_r, c.seed));
    } else if (lemma == "pari") {
        need_d();
        if (d < 6 || d % 2 != 0) throw UsageError("--lemma pari needs even d >= 6");
        if (s < 0) s = std::max(d, s_star_bounds(d, 0).lower);
        if (s < d) throw UsageError("--lemma pari needs s >= d");
        reps.push_back(replay_pari(field, d, s - d, c.seed));
    } else if (lemma == "triple") {
        need_d();
        if (d < 5) throw UsageError("--lemma triple needs d >= 5");
        const int need = d % 2 == 0 ? d / 2 - 1 : (d + 1) / 2;
        if (s < 0) s = std::max(need, s_star_bounds(d, 6).lower);
        if (s < need) throw UsageError("--lemma triple needs more squares for this degree");
        reps.push_back(replay_triple(field, d, s, c.seed));
    } else if (lemma == "obstruction") {
        const ObstructionReport o = naive_specialization(field, c.seed);
        json doc = to_json(o);
        doc["header"] = to_json(header_of(c));
        emit(c.out, doc.dump(2) + "\n");
        return o.obstructed ? kOk : kFailed;
    }

    bool pass = true;
    json arr = json::array();
    std::string table = text_header(c);
    for (const ReductionReport& r : reps) {
        pass = pass && r.pass;
        arr.push_back(to_json(r));
        table += step_table(r);
    }
    if (c.out.empty()) {
        std::cout << table;
    } else {
        const json doc{{"header", to_json(header_of(c))}, {"reports", arr}};
        emit(c.out, doc.dump(2) + "\n");
    }
    return pass ? kOk : kFailed;
}

int cmd_interp(const Common& c, int s, int d, int samples) {
    if (s < 1 || d < 1) throw UsageError("--s and --d must be positive");
    if (samples < 0) throw UsageError("--samples must be non-negative");
    const PrimeField field = fields_of(c).front();
    const DoublePointReport r = verify_double_points(field, s, d, samples, c.seed);
    json doc = to_json(r);
    doc["header"] = to_json(header_of(c));
    emit(c.out, doc.dump(2) + "\n");
    if (!r.note.empty()) std::cerr << "note: " << r.note << "\n";
    return r.pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions of unions of 2-squares and fat points in the plane"};
    app.require_subcommand(1);

    Common dim_c, sweep_c, horace_c, interp_c;
    std::string input;
    int dim_d = -1;
    auto* dim = app.add_subcommand("dim", "dimension of I(X)_d for a scheme-spec file");
    add_common(dim, dim_c);
    dim->add_option("input", input, "scheme-spec JSON file")->required();
    dim->add_option("--d", dim_d, "degree")->required();

    int d_max = 10;
    std::string mode = "critical";
    bool with_triple = false;
    unsigned jobs = 0;
    auto* sw = app.add_subcommand("sweep", "certify generic postulation for all degrees up to --dmax");
    add_common(sw, sweep_c);
    sw->add_option("--dmax", d_max, "largest degree")->capture_default_str();
    sw->add_option("--mode", mode, "critical: s at the two extreme values; full: 1 <= s <= s_upper + 2")
        ->check(CLI::IsMember({"critical", "full"}))
        ->capture_default_str();
    sw->add_flag("--with-triple", with_triple, "add one general triple point");
    sw->add_option("--jobs", jobs, "worker threads (0 = all cores)")->capture_default_str();

    std::string lemma;
    int hd = -1, hs = -1;
    auto* hor = app.add_subcommand("horace", "replay a Horace reduction");
    add_common(hor, horace_c);
    hor->add_option("--lemma", lemma, "reduction to replay")
        ->required()
        ->check(CLI::IsMember({"24", "dispari", "pari", "triple", "obstruction"}));
    hor->add_option("--d", hd, "degree");
    hor->add_option("--s", hs, "number of squares (default: the lower extreme value)");

    int is = 0, id = 0, samples = 100;
    auto* itp = app.add_subcommand("interp", "classify double points of curves through s squares");
    add_common(itp, interp_c);
    itp->add_option("--s", is, "number of squares")->required();
    itp->add_option("--d", id, "degree")->required();
    itp->add_option("--samples", samples, "random members to classify")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*dim) return cmd_dim(dim_c, input, dim_d);
        if (*sw) return cmd_sweep(sweep_c, d_max, mode, with_triple, jobs);
        if (*hor) return cmd_horace(horace_c, lemma, hd, hs);
        if (*itp) return cmd_interp(interp_c, is, id, samples);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemeError& e) {
        std::cerr << "invalid scheme: " << e.what() << "\n";
        return kBadScheme;
    }
    return kUsage;
}
