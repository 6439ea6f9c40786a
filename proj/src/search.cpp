#include "gbent/search.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "gbent/classify.hpp"
#include "gbent/errors.hpp"
#include "gbent/report.hpp"
#include "gbent/theorems.hpp"
#include "gbent/transform.hpp"

namespace gbent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool predicate_matches(const SearchSpec& spec, const GbfTable& f) {
    switch (spec.predicate) {
        case SearchPredicate::gbent:
            return is_gbent(f);
        case SearchPredicate::gsemibent:
            return plateau_level(f).plateaued(1);
        case SearchPredicate::plateaued:
            return plateau_level(f).plateaued(spec.plateau_s);
        case SearchPredicate::theorem_discrepancy:
            return theorem_discrepancy(f);
    }
    return false;
}

// Random permutation of [0, 2^m) from a seeded split stream.
std::vector<std::uint32_t> random_perm(int m, std::uint64_t seed) {
    std::vector<std::uint32_t> perm(std::size_t{1} << m);
    std::iota(perm.begin(), perm.end(), 0u);
    std::uint64_t state = seed;
    for (std::size_t i = perm.size() - 1; i > 0; --i) {
        state = splitmix64(state);
        std::swap(perm[i], perm[state % (i + 1)]);
    }
    return perm;
}

BoolTable random_bool(int n, std::uint64_t seed) {
    BoolTable t(n);
    std::uint64_t state = seed;
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        state = splitmix64(state);
        t.set(x, state & 1);
    }
    return t;
}

GbfTable construct_candidate(const SearchSpec& spec, std::uint64_t index) {
    const std::uint64_t s = splitmix64(spec.seed ^ splitmix64(index + 1));
    if (spec.family == "sparse") {
        if (spec.n % 2 != 0) {
            throw std::invalid_argument("construct family 'sparse' requires even n");
        }
        const int m = spec.n / 2;
        const BoolTable ak = mm_bent(m, random_perm(m, s), random_bool(m, splitmix64(s ^ 1)));
        // Affine a1 keeps a1 ^ ak bent, so the construction lands gbent.
        const BoolTable a1 = BoolTable::linear(
            spec.n, static_cast<std::uint32_t>(splitmix64(s ^ 2) & ((1u << spec.n) - 1)),
            (splitmix64(s ^ 3) & 1) != 0);
        return sparse_gbent(a1, ak, spec.k, /*strict=*/false);
    }
    if (spec.family == "mm") {
        if (spec.n % 2 != 0) {
            throw std::invalid_argument("construct family 'mm' requires even n");
        }
        const int m = spec.n / 2;
        const BoolTable b = mm_bent(m, random_perm(m, s), random_bool(m, splitmix64(s ^ 1)));
        return sparse_gbent(BoolTable(spec.n), b, spec.k, /*strict=*/false);
    }
    throw std::invalid_argument("unknown construct family: " + spec.family);
}

struct ChunkResult {
    std::uint64_t tested = 0;
    std::uint64_t matched = 0;
    std::string lines;
};

}  // namespace

std::uint64_t exhaustive_span(int n, int k) {
    return std::uint64_t{1} << (static_cast<unsigned>(k) << n);
}

GbfTable exhaustive_candidate(int n, int k, std::uint64_t index) {
    const std::uint32_t points = std::uint32_t{1} << n;
    const std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    std::vector<std::uint8_t> values(points);
    for (std::uint32_t x = 0; x < points; ++x) {
        const unsigned shift = static_cast<unsigned>(k) * (points - 1 - x);
        values[x] = static_cast<std::uint8_t>((index >> shift) & mask);
    }
    return GbfTable(n, k, std::move(values));
}

unsigned effective_thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GBENT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

BoolTable mm_bent(int m, std::span<const std::uint32_t> perm, const BoolTable& h) {
    const std::uint32_t side = std::uint32_t{1} << m;
    if (h.vars() != m) throw std::invalid_argument("mm_bent: h must be on m variables");
    if (perm.size() != side) throw std::invalid_argument("mm_bent: permutation has wrong size");
    std::vector<bool> seen(side, false);
    for (const std::uint32_t p : perm) {
        if (p >= side || seen[p]) throw std::invalid_argument("mm_bent: not a permutation");
        seen[p] = true;
    }
    BoolTable f(2 * m);
    for (std::uint32_t y = 0; y < side; ++y) {
        const std::uint32_t py = perm[y];
        const bool hy = h.get(y);
        for (std::uint32_t x = 0; x < side; ++x) {
            f.set((y << m) | x, (dot2(x, py) ^ (hy ? 1 : 0)) != 0);
        }
    }
    return f;
}

GbfTable sparse_gbent(const BoolTable& a1, const BoolTable& ak, int k, bool strict) {
    if (a1.vars() != ak.vars()) throw std::invalid_argument("sparse_gbent: mismatched n");
    if (k < 2) throw std::invalid_argument("sparse_gbent requires k >= 2");
    if (strict) {
        if (a1.vars() % 2 != 0) {
            throw std::invalid_argument("sparse_gbent strict: n must be even");
        }
        if (!boolean_class(ak).is_bent() || !boolean_class(a1 ^ ak).is_bent()) {
            throw std::invalid_argument("sparse_gbent strict: ak and a1^ak must be bent");
        }
    }
    GbfTable f(a1.vars(), k);
    const std::uint8_t top = static_cast<std::uint8_t>(1u << (k - 1));
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        f.set_value(x, static_cast<std::uint8_t>((a1.get(x) ? 1 : 0) + (ak.get(x) ? top : 0)));
    }
    return f;
}

GbfTable random_gbf(int n, int k, std::uint64_t seed) {
    GbfTable f(n, k);
    const std::uint8_t mask = static_cast<std::uint8_t>((1u << k) - 1);
    std::uint64_t state = splitmix64(seed ^ 0x6a09e667f3bcc908ULL);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        state = splitmix64(state);
        f.set_value(x, static_cast<std::uint8_t>(state & mask));
    }
    return f;
}

SearchSummary run_search(const SearchSpec& spec) {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    switch (spec.mode) {
        case SearchMode::exhaustive: {
            if (static_cast<std::uint64_t>(spec.k) << spec.n > 20) {
                throw InfeasibleError("exhaustive search requires k * 2^n <= 20");
            }
            end = exhaustive_span(spec.n, spec.k);
            break;
        }
        case SearchMode::random:
        case SearchMode::construct:
            end = spec.count;
            break;
    }
    if (spec.range) {
        begin = spec.range->first;
        end = std::min(end, spec.range->second);
        if (begin > end) begin = end;
    }

    auto candidate = [&spec](std::uint64_t index) {
        switch (spec.mode) {
            case SearchMode::exhaustive:
                return exhaustive_candidate(spec.n, spec.k, index);
            case SearchMode::random:
                return random_gbf(spec.n, spec.k, splitmix64(spec.seed ^ splitmix64(index + 1)));
            case SearchMode::construct:
            default:
                return construct_candidate(spec, index);
        }
    };

    std::ofstream sink;
    if (!spec.out_path.empty()) {
        sink.open(spec.out_path, std::ios::out | std::ios::trunc);
        if (!sink) throw std::runtime_error("cannot open sink: " + spec.out_path);
    }

    SearchSummary summary;
    const std::uint64_t total = end - begin;
    const unsigned threads =
        static_cast<unsigned>(std::min<std::uint64_t>(effective_thread_count(spec.threads),
                                                      std::max<std::uint64_t>(total, 1)));
    constexpr std::uint64_t kChunk = 1024;

    if (threads <= 1 || total < 2 * kChunk) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const GbfTable f = candidate(i);
            ++summary.tested;
            if (predicate_matches(spec, f)) {
                ++summary.matched;
                if (sink.is_open()) {
                    sink << search_record(f).dump() << '\n';
                    ++summary.written;
                }
            }
        }
        return summary;
    }

    // Disjoint chunks claimed by an atomic ticket; the sink is the only
    // shared state and chunks commit strictly in index order.
    std::atomic<std::uint64_t> next_chunk{0};
    const std::uint64_t chunk_count = (total + kChunk - 1) / kChunk;
    std::mutex mu;
    std::map<std::uint64_t, ChunkResult> pending;
    std::uint64_t next_commit = 0;
    std::exception_ptr error;

    auto worker = [&]() {
        try {
            while (true) {
                const std::uint64_t c = next_chunk.fetch_add(1);
                if (c >= chunk_count) return;
                const std::uint64_t lo = begin + c * kChunk;
                const std::uint64_t hi = std::min(end, lo + kChunk);
                ChunkResult res;
                for (std::uint64_t i = lo; i < hi; ++i) {
                    const GbfTable f = candidate(i);
                    ++res.tested;
                    if (predicate_matches(spec, f)) {
                        ++res.matched;
                        if (sink.is_open()) {
                            res.lines += search_record(f).dump();
                            res.lines += '\n';
                        }
                    }
                }
                std::unique_lock<std::mutex> lock(mu);
                pending.emplace(c, std::move(res));
                while (!pending.empty() && pending.begin()->first == next_commit) {
                    ChunkResult& front = pending.begin()->second;
                    summary.tested += front.tested;
                    summary.matched += front.matched;
                    if (sink.is_open() && !front.lines.empty()) {
                        sink << front.lines;
                        summary.written += front.matched;
                    }
                    pending.erase(pending.begin());
                    ++next_commit;
                }
            }
        } catch (...) {
            std::unique_lock<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return summary;
}

}  // namespace gbent
