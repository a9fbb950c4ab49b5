#include "multirank/rank.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <unordered_map>

namespace multirank {
namespace {

// Nonzero rows and columns of a sparse matrix, renumbered densely in order.
struct Compression {
    std::unordered_map<std::uint64_t, std::size_t> row;
    std::unordered_map<std::uint64_t, std::size_t> col;

    explicit Compression(const SparseMatrix& m) {
        std::vector<std::uint64_t> rows, cols;
        for (const auto& [pos, v] : m.entries()) {
            rows.push_back(pos.first);
            cols.push_back(pos.second);
        }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (std::size_t k = 0; k < rows.size(); ++k) row.emplace(rows[k], k);
        for (std::size_t k = 0; k < cols.size(); ++k) col.emplace(cols[k], k);
    }

    std::size_t rows() const { return row.size(); }
    std::size_t cols() const { return col.size(); }
    std::size_t bound() const { return std::min(rows(), cols()); }
};

// ---- fraction-free elimination over Z[i] ----

std::size_t bareiss_rank(std::vector<std::vector<GaussianInteger>> a, std::size_t ncols) {
    const std::size_t nrows = a.size();
    std::size_t r = 0;
    GaussianInteger prev{1, 0};
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        const GaussianInteger& pivot = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j)
                a[i][j] = exact_divide(mul_sub(pivot, a[i][j], a[i][c], a[r][j]), prev);
            a[i][c] = GaussianInteger{};
        }
        prev = pivot;
        ++r;
    }
    return r;
}

// ---- GF(p)[i] arithmetic; p < 2^32 so products fit in 64 bits ----

struct Fp2 {
    std::uint64_t re = 0;
    std::uint64_t im = 0;
    bool is_zero() const { return re == 0 && im == 0; }
};

class Fp2Field {
public:
    explicit Fp2Field(std::uint64_t p) : p_(p) {}

    std::uint64_t prime() const { return p_; }

    Fp2 add(Fp2 a, Fp2 b) const { return {(a.re + b.re) % p_, (a.im + b.im) % p_}; }
    Fp2 sub(Fp2 a, Fp2 b) const { return {(a.re + p_ - b.re) % p_, (a.im + p_ - b.im) % p_}; }
    Fp2 mul(Fp2 a, Fp2 b) const {
        const std::uint64_t rr = (a.re * b.re) % p_;
        const std::uint64_t ii = (a.im * b.im) % p_;
        const std::uint64_t ri = (a.re * b.im) % p_;
        const std::uint64_t ir = (a.im * b.re) % p_;
        return {(rr + p_ - ii) % p_, (ri + ir) % p_};
    }
    Fp2 inverse(Fp2 a) const {
        // (a + bi)^-1 = (a - bi) / (a^2 + b^2); a^2 + b^2 != 0 since -1 is a non-residue.
        const std::uint64_t n = (a.re * a.re % p_ + a.im * a.im % p_) % p_;
        const std::uint64_t inv = pow(n, p_ - 2);
        return {a.re * inv % p_, (p_ - a.im) % p_ * inv % p_};
    }

    std::uint64_t reduce(const mpq_class& q) const {
        const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
        if (den == 0) throw PrimeDividesDenominator(p_);
        const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
        return num * pow(den, p_ - 2) % p_;
    }
    Fp2 reduce(const GaussianRational& z) const { return {reduce(z.real()), reduce(z.imag())}; }

private:
    std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
        std::uint64_t r = 1;
        b %= p_;
        while (e > 0) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    std::uint64_t p_;
};

std::size_t modular_elimination_rank(std::vector<std::vector<Fp2>> a, std::size_t ncols, const Fp2Field& f) {
    const std::size_t nrows = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        const Fp2 inv = f.inverse(a[r][c]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (a[i][c].is_zero()) continue;
            const Fp2 factor = f.mul(a[i][c], inv);
            for (std::size_t j = c; j < ncols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        ++r;
    }
    return r;
}

void require_admissible(std::uint64_t p) {
    if (!is_admissible_prime(p)) {
        throw PolicyError("modulus " + std::to_string(p) + " must be a prime p = 3 (mod 4) below 2^32");
    }
}

void require_gaussian(const SparseMatrix& m, const char* what) {
    if (m.is_parametric()) {
        throw PolicyError(std::string(what) + " needs numeric amplitudes; use the generic policy for parameters");
    }
}

// Reduces c_0 + sum_k c_k a_k at the sampled parameter values.
Fp2 evaluate(const Amplitude& amp, const Fp2Field& f, const std::unordered_map<std::string, Fp2>& values) {
    Fp2 acc = f.reduce(amp.constant());
    for (const auto& [name, coeff] : amp.parameters()) acc = f.add(acc, f.mul(f.reduce(coeff), values.at(name)));
    return acc;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw PolicyError("invalid " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::string to_string(RankMode mode) {
    switch (mode) {
        case RankMode::exact: return "exact";
        case RankMode::modular: return "modular";
        case RankMode::generic: return "generic";
    }
    return "?";
}

std::string to_string(Certainty certainty) {
    return certainty == Certainty::exact ? "exact" : "probabilistic";
}

const std::array<std::uint64_t, 20>& admissible_primes() {
    static constexpr std::array<std::uint64_t, 20> primes = {
        2147483647, 2147483587, 2147483579, 2147483563, 2147483543, 2147483423, 2147483399,
        2147483323, 2147483179, 2147483171, 2147483123, 2147483059, 2147482951, 2147482943,
        2147482867, 2147482859, 2147482819, 2147482811, 2147482763, 2147482739};
    return primes;
}

bool is_admissible_prime(std::uint64_t p) {
    if (p < 3 || p % 4 != 3 || p >= (std::uint64_t{1} << 32)) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 of the (master, index) pair
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

RankResult exact_rank(const SparseMatrix& matrix) {
    require_gaussian(matrix, "exact rank");
    const Compression cmp(matrix);
    if (cmp.bound() == 0) return RankResult{};

    std::vector<std::vector<GaussianRational>> rows(cmp.rows(), std::vector<GaussianRational>(cmp.cols()));
    for (const auto& [pos, v] : matrix.entries()) rows[cmp.row.at(pos.first)][cmp.col.at(pos.second)] = v.constant();

    std::vector<std::vector<GaussianInteger>> ints(cmp.rows(), std::vector<GaussianInteger>(cmp.cols()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        mpz_class scale = 1;
        for (const auto& z : rows[r]) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), z.real().get_den_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), z.imag().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const mpq_class re = rows[r][c].real() * scale;
            const mpq_class im = rows[r][c].imag() * scale;
            ints[r][c] = GaussianInteger{re.get_num(), im.get_num()};
        }
    }
    RankResult out;
    out.value = bareiss_rank(std::move(ints), cmp.cols());
    return out;
}

RankResult modular_rank(const SparseMatrix& matrix, std::uint64_t p) {
    require_admissible(p);
    require_gaussian(matrix, "modular rank");
    const Fp2Field field(p);
    const Compression cmp(matrix);
    std::vector<std::vector<Fp2>> a(cmp.rows(), std::vector<Fp2>(cmp.cols()));
    for (const auto& [pos, v] : matrix.entries())
        a[cmp.row.at(pos.first)][cmp.col.at(pos.second)] = field.reduce(v.constant());
    RankResult out;
    out.value = modular_elimination_rank(std::move(a), cmp.cols(), field);
    out.mode = RankMode::modular;
    out.prime = p;
    return out;
}

RankResult generic_rank(const SparseMatrix& matrix, std::size_t trials, std::uint64_t p, std::uint64_t seed) {
    require_admissible(p);
    if (trials < 1) throw PolicyError("generic rank needs at least one trial");
    const Fp2Field field(p);
    const Compression cmp(matrix);

    std::vector<std::string> names;
    for (const auto& [pos, v] : matrix.entries())
        for (const auto& [name, c] : v.parameters()) names.push_back(name);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> uniform(0, p - 1);
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::unordered_map<std::string, Fp2> values;
        for (const auto& name : names) {
            const std::uint64_t re = uniform(rng);
            const std::uint64_t im = uniform(rng);
            values.emplace(name, Fp2{re, im});
        }
        std::vector<std::vector<Fp2>> a(cmp.rows(), std::vector<Fp2>(cmp.cols()));
        for (const auto& [pos, v] : matrix.entries())
            a[cmp.row.at(pos.first)][cmp.col.at(pos.second)] = evaluate(v, field, values);
        best = std::max(best, modular_elimination_rank(std::move(a), cmp.cols(), field));
    }

    RankResult out;
    out.value = best;
    out.mode = RankMode::generic;
    out.certainty = Certainty::probabilistic;
    out.prime = p;
    out.trials = trials;
    const double per_trial =
        std::min(1.0, static_cast<double>(std::min(matrix.rows(), matrix.cols())) / static_cast<double>(p));
    out.failure_bound = std::pow(per_trial, static_cast<double>(trials));
    return out;
}

RankPolicy RankPolicy::parse(std::string_view text) {
    if (text == "exact") return exact();
    if (text == "fast" || text == "fast-then-verify") return fast_then_verify();
    if (text.starts_with("mod:")) {
        const std::uint64_t p = parse_u64(text.substr(4), "modulus");
        require_admissible(p);
        return modular_only(p);
    }
    if (text.starts_with("generic:")) {
        const std::string_view args = text.substr(8);
        const std::size_t comma = args.find(',');
        const std::uint64_t trials = parse_u64(args.substr(0, comma), "trial count");
        if (trials < 1) throw PolicyError("generic rank needs at least one trial");
        std::uint64_t p = admissible_primes().front();
        if (comma != std::string_view::npos) p = parse_u64(args.substr(comma + 1), "modulus");
        require_admissible(p);
        return generic(trials, p);
    }
    throw PolicyError("unknown rank policy '" + std::string(text) +
                      "' (expected exact, fast, mod:<p> or generic:<trials>,<p>)");
}

std::string RankPolicy::to_string() const {
    switch (kind) {
        case Kind::exact: return "exact";
        case Kind::fast_then_verify: return "fast";
        case Kind::modular_only: return "mod:" + std::to_string(prime);
        case Kind::generic: return "generic:" + std::to_string(trials) + "," + std::to_string(prime);
    }
    return "?";
}

RankResult rank_dispatch(const SparseMatrix& matrix, const RankPolicy& policy, std::uint64_t seed) {
    switch (policy.kind) {
        case RankPolicy::Kind::exact:
            return exact_rank(matrix);
        case RankPolicy::Kind::modular_only:
            return modular_rank(matrix, policy.prime);
        case RankPolicy::Kind::generic:
            return generic_rank(matrix, policy.trials, policy.prime, seed);
        case RankPolicy::Kind::fast_then_verify:
            break;
    }
    require_gaussian(matrix, "fast rank");
    const std::size_t bound = Compression(matrix).bound();
    if (bound == 0) return RankResult{};
    const auto& primes = admissible_primes();
    const std::size_t start = std::mt19937_64(seed)() % primes.size();
    for (std::size_t k = 0; k < primes.size(); ++k) {
        try {
            RankResult r = modular_rank(matrix, primes[(start + k) % primes.size()]);
            if (r.value == bound) return r;
            break;
        } catch (const PrimeDividesDenominator&) {
            continue;
        }
    }
    return exact_rank(matrix);
}

// ---- oracle ----

namespace {

GaussianRational laplace_det(const DenseMatrix& m, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return m(rows[0], cols[0]);
    GaussianRational det;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < k; ++c) {
        const GaussianRational& lead = m(rows[0], cols[c]);
        if (lead.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t x = 0; x < k; ++x)
            if (x != c) sub_cols.push_back(cols[x]);
        const GaussianRational term = lead * laplace_det(m, sub_rows, sub_cols);
        if (c % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

// Calls fn on every increasing k-subset of {0..n-1}; stops when fn returns true.
template <typename Fn>
bool any_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        if (fn(s)) return true;
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

std::size_t oracle_rank_minors(const DenseMatrix& matrix) {
    if (matrix.rows() > 6 || matrix.cols() > 6) throw DomainError("oracle_rank_minors is limited to 6x6 matrices");
    for (std::size_t k = std::min(matrix.rows(), matrix.cols()); k > 0; --k) {
        const bool found = any_subset(matrix.rows(), k, [&](const std::vector<std::size_t>& rows) {
            return any_subset(matrix.cols(), k, [&](const std::vector<std::size_t>& cols) {
                return !laplace_det(matrix, rows, cols).is_zero();
            });
        });
        if (found) return k;
    }
    return 0;
}

}  // namespace multirank
