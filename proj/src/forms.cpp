#include "hecke/forms.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/primes.hpp"
#include "hecke/series.hpp"

namespace hecke {

std::uint64_t EigenForm::check_index(std::uint64_t n) const {
    if (n == 0 || n > bound_)
        throw Error(ErrorKind::usage,
                    "coefficient index " + std::to_string(n) + " outside table [1, " +
                        std::to_string(bound_) + "]");
    return n;
}

const BigInt& EigenForm::a(std::uint64_t n) const {
    return a_[check_index(n)];
}

Eigenvalue EigenForm::lambda(std::uint64_t n) const {
    std::uint64_t i = check_index(n);
    return Eigenvalue{lambda_[i], sign_[i]};
}

long double EigenForm::lambda_ext(std::uint64_t n) const {
    std::uint64_t i = check_index(n);
    return a_[i].to_long_double() /
           std::pow(static_cast<long double>(n), (weight_ - 1) / 2.0L);
}

bool EigenForm::coprime_to_level(std::uint64_t n) const {
    for (std::uint64_t p : level_primes_) {
        if (n % p == 0) return false;
    }
    return true;
}

std::string EigenForm::describe() const {
    std::ostringstream os;
    os << "k=" << weight_ << " N=" << level_ << " bound=" << bound_;
    return os.str();
}

EigenForm EigenForm::from_parts(int weight, std::uint64_t level,
                                std::vector<BigInt> table, FormSource source) {
    if (weight < 2 || weight % 2 != 0)
        throw Error(ErrorKind::usage, "weight must be a positive even integer");
    if (level == 0 || !is_squarefree(level))
        throw Error(ErrorKind::invalid_level,
                    "level " + std::to_string(level) + " is not squarefree");
    if (table.size() < 2)
        throw Error(ErrorKind::usage, "coefficient table must contain a(1)");
    if (table[1] != BigInt(1))
        throw Error(ErrorKind::invariant_violation, "a(1) must equal 1");

    EigenForm f;
    f.weight_ = weight;
    f.level_ = level;
    f.bound_ = table.size() - 1;
    f.source_ = source;
    f.a_ = std::move(table);
    f.level_primes_ = prime_factors_of(level);

    f.lambda_.resize(f.a_.size());
    f.sign_.resize(f.a_.size());
    const double half = (weight - 1) / 2.0;
    for (std::uint64_t n = 1; n <= f.bound_; ++n) {
        f.sign_[n] = static_cast<std::int8_t>(f.a_[n].sign());
        f.lambda_[n] = f.a_[n].to_double() / std::pow(static_cast<double>(n), half);
    }
    return f;
}

EigenForm from_level1(int weight, std::uint64_t bound) {
    if (bound < 1) throw Error(ErrorKind::usage, "bound must be >= 1");
    TruncatedSeries s = level1_eigenform(weight, bound + 1);
    std::vector<BigInt> table(bound + 1);
    for (std::uint64_t n = 1; n <= bound; ++n) table[n] = s[n];
    return EigenForm::from_parts(weight, 1, std::move(table), FormSource::level1);
}

std::vector<BigInt> hecke_extend(const std::vector<std::pair<std::uint64_t, BigInt>>& a_on_primes,
                                 int weight, std::uint64_t level, std::uint64_t bound) {
    std::vector<BigInt> a(bound + 1);
    if (bound == 0) return a;
    a[1] = BigInt(1);

    auto spf = smallest_prime_factors(bound);
    std::vector<char> have(bound + 1, 0);
    for (const auto& [p, ap] : a_on_primes) {
        if (p <= bound) {
            a[p] = ap;
            have[p] = 1;
        }
    }
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (spf[n] == n && !have[n])
            throw Error(ErrorKind::usage, "missing a(p) for prime p=" + std::to_string(n));
    }

    for (std::uint64_t n = 2; n <= bound; ++n) {
        std::uint64_t p = spf[n];
        if (p == n) continue;  // prime, already present
        std::uint64_t pe = p, m = n / p;
        while (m % p == 0) { pe *= p; m /= p; }
        if (m > 1) {
            a[n] = a[pe] * a[m];  // coprime split
            continue;
        }
        // n = p^e with e >= 2; a[pe/p] and (for good p) a[pe/p^2] are done.
        if (level % p == 0) {
            a[n] = a[p] * a[n / p];
        } else {
            a[n] = a[p] * a[n / p] - BigInt::pow(p, static_cast<unsigned>(weight - 1)) * a[n / (p * p)];
        }
    }
    return a;
}

std::optional<std::uint64_t> verify_deligne(const EigenForm& f, std::uint64_t bound) {
    if (bound > f.bound())
        throw Error(ErrorKind::usage, "Deligne check bound exceeds table");
    auto d = divisor_counts(bound);
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (!f.coprime_to_level(n)) continue;
        BigInt lhs = f.a(n) * f.a(n);
        BigInt rhs = BigInt(static_cast<long long>(d[n])) *
                     BigInt(static_cast<long long>(d[n])) *
                     BigInt::pow(n, static_cast<unsigned>(f.weight() - 1));
        if (lhs > rhs) return n;
    }
    return std::nullopt;
}

std::uint64_t least_negative_prime(const EigenForm& f) {
    for (std::uint64_t n = 2; n <= f.bound(); ++n) {
        if (!is_prime(n)) continue;
        if (f.level() % n == 0) continue;
        if (f.sign_a(n) < 0) return n;
    }
    throw Error(ErrorKind::search_exhausted,
                "no prime p with a(p) < 0 within bound " + std::to_string(f.bound()) +
                    "; enlarge the table");
}

int epsilon(const EigenForm& f, std::uint64_t p) {
    if (p == 0 || f.level() % p != 0 || !is_prime(p))
        throw Error(ErrorKind::usage,
                    std::to_string(p) + " is not a prime dividing the level " +
                        std::to_string(f.level()));
    const BigInt& ap = f.a(p);
    BigInt expected = BigInt::pow(p, static_cast<unsigned>(f.weight() - 2));
    if (ap * ap != expected)
        throw Error(ErrorKind::invariant_violation,
                    "a(p)^2 != p^{k-2} at level prime p=" + std::to_string(p));
    return ap.sign();
}

// ---- coefficient file format -------------------------------------------

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void load_fail(const std::string& origin, const std::string& what) {
    throw Error(ErrorKind::load, origin + ": " + what);
}

void validate_table(const std::vector<BigInt>& a, int weight, std::uint64_t level,
                    const std::string& origin) {
    const std::uint64_t bound = a.size() - 1;
    if (bound < 1 || a[1] != BigInt(1)) load_fail(origin, "a(1) = 1 is required");

    auto spf = smallest_prime_factors(bound);
    for (std::uint64_t n = 2; n <= bound; ++n) {
        std::uint64_t p = spf[n];
        if (p == n) continue;
        std::uint64_t pe = p, m = n / p;
        while (m % p == 0) { pe *= p; m /= p; }
        if (m > 1) {
            if (a[n] != a[pe] * a[m])
                load_fail(origin, "table is not multiplicative at n=" + std::to_string(n));
        } else if (level % p == 0) {
            // level primes obey a(p^v) = a(p)^v
            if (a[n] != a[p] * a[n / p])
                load_fail(origin,
                          "level-prime relation a(p^v)=a(p)^v fails at n=" + std::to_string(n));
        }
    }
    for (std::uint64_t p : prime_factors_of(level)) {
        if (p > bound) continue;
        BigInt expected = BigInt::pow(p, static_cast<unsigned>(weight - 2));
        if (a[p] * a[p] != expected)
            load_fail(origin, "a(p)^2 != p^{k-2} at level prime p=" + std::to_string(p));
    }
}

}  // namespace

EigenForm read_coefficients(std::istream& in, const std::string& origin) {
    std::string line;
    int weight = 0;
    std::uint64_t level = 0;
    bool have_header = false;
    std::vector<BigInt> a;
    a.emplace_back();  // index 0 unused
    std::uint64_t expect = 1;

    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (!have_header) {
            unsigned long long n_val = 0;
            if (std::sscanf(s.c_str(), "k=%d N=%llu", &weight, &n_val) != 2)
                load_fail(origin, "line " + std::to_string(lineno) +
                                      ": expected header `k=<int> N=<int>`");
            level = n_val;
            if (weight < 2 || weight % 2 != 0)
                load_fail(origin, "weight must be a positive even integer");
            if (level == 0 || !is_squarefree(level))
                load_fail(origin, "level must be a squarefree positive integer");
            have_header = true;
            continue;
        }
        std::istringstream ls(s);
        std::uint64_t n;
        std::string value;
        if (!(ls >> n >> value))
            load_fail(origin, "line " + std::to_string(lineno) + ": expected `<n> <a(n)>`");
        if (n != expect)
            load_fail(origin, "line " + std::to_string(lineno) + ": expected n=" +
                                  std::to_string(expect) + ", got n=" + std::to_string(n));
        try {
            a.push_back(BigInt::from_decimal(value));
        } catch (const Error&) {
            load_fail(origin, "line " + std::to_string(lineno) + ": bad integer `" + value + "`");
        }
        ++expect;
    }
    if (!have_header) load_fail(origin, "missing header line");
    if (a.size() < 2) load_fail(origin, "no coefficients");

    validate_table(a, weight, level, origin);
    return EigenForm::from_parts(weight, level, std::move(a), FormSource::file);
}

EigenForm from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::load, "cannot open " + path);
    return read_coefficients(in, path);
}

void write_coefficients(const EigenForm& f, std::ostream& out) {
    out << "k=" << f.weight() << " N=" << f.level() << "\n";
    for (std::uint64_t n = 1; n <= f.bound(); ++n)
        out << n << " " << f.a(n).to_decimal() << "\n";
}

void save_coefficients(const EigenForm& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::usage, "cannot write " + path);
    write_coefficients(f, out);
}

}  // namespace hecke
