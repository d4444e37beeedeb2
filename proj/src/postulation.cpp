#include "superfat/postulation.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace superfat {

long ideal_dim(const PrimeField& field, const SchemeUnion& u, int d) {
    if (d < 0) throw std::invalid_argument("ideal_dim: negative degree");
    const std::size_t n = form_dim(d);
    RowReducer red(field, n);
    for (const SchemeComponent& c : u.components()) {
        const Matrix rows = condition_rows(field, c, d);
        for (Eigen::Index i = 0; i < rows.rows() && !red.full(); ++i) red.insert(rows.row(i).transpose());
        if (red.full()) break;
    }
    return static_cast<long>(n - red.rank());
}

long hilbert_function(const PrimeField& field, const SchemeUnion& u, int d) {
    return static_cast<long>(form_dim(d)) - ideal_dim(field, u, d);
}

long expected_dim(std::size_t length, int d) {
    return std::max(0L, static_cast<long>(form_dim(d)) - static_cast<long>(length));
}

long expected_dim(const SchemeUnion& u, int d) { return expected_dim(u.length(), d); }

SquareCountBounds s_star_bounds(int d, int extra_length) {
    if (d < 1) throw std::invalid_argument("s_star_bounds: degree must be positive");
    const long room = static_cast<long>(form_dim(d)) - extra_length;
    if (room <= 0) return {0, 0};
    return {static_cast<int>(room / 4), static_cast<int>((room + 3) / 4)};
}

int Extras::length() const {
    int n = 0;
    for (int m : fat) n += m * (m + 1) / 2;
    return n;
}

SchemeUnion random_union(ScalarStream& stream, int s, const Extras& extras) {
    const PrimeField& field = stream.field();
    SchemeUnion u;
    auto place = [&](auto make) {
        for (;;) {
            try {
                u.add(field, make());
                return;
            } catch (const SchemeError&) {
                // coincident support: redraw
            }
        }
    };
    for (int i = 0; i < s; ++i) place([&] { return two_square(field, random_frame(stream)); });
    for (int m : extras.fat) place([&] { return fat_point(field, random_point(stream), m); });
    return u;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Certified: return "CERTIFIED";
        case Status::Inconclusive: return "INCONCLUSIVE";
        case Status::ExceptionalMatch: return "EXCEPTIONAL-MATCH";
    }
    return "?";
}

std::optional<long> exceptional_target(int d, int s, const Extras& extras) {
    if (d == 3 && s == 1 && extras.fat.size() == 1 && extras.fat[0] == 3) return 1;
    return std::nullopt;
}

namespace {

struct PrimeOutcome {
    long computed;
    int trials;
    bool hit;
};

PrimeOutcome run_trials(const PrimeField& field, int d, int s, const Extras& extras, int trials, std::uint64_t seed,
                        long target) {
    PrimeOutcome out{0, 0, false};
    const std::uint64_t row_key = (static_cast<std::uint64_t>(d) << 32) | static_cast<std::uint64_t>(s);
    for (int t = 0; t < trials; ++t) {
        ScalarStream stream(field, mix_seed(mix_seed(seed, row_key), static_cast<std::uint64_t>(t)));
        const SchemeUnion u = random_union(stream, s, extras);
        const long dim = ideal_dim(field, u, d);
        if (dim < expected_dim(u, d)) throw std::logic_error("rank exceeds the number of conditions");
        out.computed = t == 0 ? dim : std::min(out.computed, dim);
        out.trials = t + 1;
        if (dim == target) {
            out.computed = dim;
            out.hit = true;
            break;
        }
    }
    return out;
}

}  // namespace

Certificate certify_generic(const std::vector<PrimeField>& fields, int d, int s, const Extras& extras, int trials,
                            std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("certify_generic: trials must be positive");
    if (fields.empty()) throw std::invalid_argument("certify_generic: no prime given");
    Certificate cert;
    cert.d = d;
    cert.s = s;
    cert.extra_length = extras.length();
    cert.expected = expected_dim(static_cast<std::size_t>(4 * s + cert.extra_length), d);
    cert.seed = seed;
    const std::optional<long> exceptional = exceptional_target(d, s, extras);
    const long target = exceptional.value_or(cert.expected);

    bool all_hit = true;
    for (const PrimeField& field : fields) {
        const PrimeOutcome o = run_trials(field, d, s, extras, trials, seed, target);
        cert.primes.push_back(field.modulus());
        cert.trials_used = std::max(cert.trials_used, o.trials);
        cert.computed = std::max(cert.computed, o.computed);
        all_hit = all_hit && o.hit;
    }
    if (!all_hit)
        cert.status = Status::Inconclusive;
    else
        cert.status = exceptional ? Status::ExceptionalMatch : Status::Certified;
    return cert;
}

Certificate certify_generic(const PrimeField& field, int d, int s, const Extras& extras, int trials,
                            std::uint64_t seed) {
    return certify_generic(std::vector<PrimeField>{field}, d, s, extras, trials, seed);
}

std::vector<std::pair<int, int>> sweep_rows(int d_max, SweepMode mode, int extra_length) {
    if (d_max < 1) throw std::invalid_argument("sweep: d_max must be at least 1");
    std::vector<std::pair<int, int>> rows;
    for (int d = 1; d <= d_max; ++d) {
        const SquareCountBounds b = s_star_bounds(d, extra_length);
        if (mode == SweepMode::Critical) {
            for (int s : {b.lower, b.upper})
                if (s >= 1 && (rows.empty() || rows.back() != std::pair{d, s})) rows.emplace_back(d, s);
        } else {
            for (int s = 1; s <= b.upper + 2; ++s) rows.emplace_back(d, s);
        }
    }
    return rows;
}

std::vector<Certificate> sweep(const std::vector<PrimeField>& fields, int d_max, SweepMode mode, const Extras& extras,
                               int trials, std::uint64_t seed, unsigned jobs) {
    const auto rows = sweep_rows(d_max, mode, extras.length());
    std::vector<Certificate> out(rows.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));

    // largest rows first keeps the threads busy until the end
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows[a].first * 1000 + rows[a].second > rows[b].first * 1000 + rows[b].second;
    });

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < order.size();) {
            const auto [d, s] = rows[order[k]];
            out[order[k]] = certify_generic(fields, d, s, extras, trials, seed);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace superfat
