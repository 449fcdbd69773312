#include "plbranch/local_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

namespace plbranch {

namespace {

// Columns are the monomials of total degree < D, ordered like MonoLess.
std::uint32_t column_of(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a + b;
    return d * (d + 1) / 2 + a;
}

std::uint32_t column_count(std::uint32_t degree) {
    return degree * (degree + 1) / 2;
}

using Entry = std::pair<std::uint32_t, mpz_class>;
using Row = std::vector<Entry>;  // sorted by column, nonzero values

// Divides out the content and makes the pivot entry positive.
void normalize(Row& row) {
    if (row.empty()) return;
    mpz_class g(0);
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 1) {
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

// r*s0 - s*r0 where r0, s0 are the shared-pivot coefficients; the pivot
// column cancels, so the result starts strictly later.
Row eliminate(const Row& r, const Row& s) {
    assert(!r.empty() && !s.empty() && r.front().first == s.front().first);
    mpz_class rc = r.front().second, sc = s.front().second;
    mpz_class g(0);
    mpz_gcd(g.get_mpz_t(), rc.get_mpz_t(), sc.get_mpz_t());
    mpz_class mr = sc / g, ms = rc / g;
    Row out;
    out.reserve(r.size() + s.size());
    std::size_t i = 1, j = 1;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.emplace_back(r[i].first, r[i].second * mr);
            ++i;
        } else if (i == r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, -(s[j].second * ms));
            ++j;
        } else {
            mpz_class v = r[i].second * mr - s[j].second * ms;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    normalize(out);
    return out;
}

// Row space with one stored row per pivot column, pivot being the least
// monomial of the row. Any nonzero combination of such rows has its least
// monomial among the pivots, so reduction by pivots decides membership.
class EchelonSpan {
  public:
    explicit EchelonSpan(std::uint32_t degree) : rows_(column_count(degree)) {}

    void insert(Row row) {
        while (!row.empty()) {
            Row& slot = rows_[row.front().first];
            if (slot.empty()) {
                normalize(row);
                slot = std::move(row);
                ++rank_;
                return;
            }
            row = eliminate(row, slot);
        }
    }

    bool contains(Row row) const {
        while (!row.empty()) {
            const Row& slot = rows_[row.front().first];
            if (slot.empty()) return false;
            row = eliminate(row, slot);
        }
        return true;
    }

    std::size_t rank() const { return rank_; }

  private:
    std::vector<Row> rows_;
    std::size_t rank_ = 0;
};

// Generator scaled to coprime integer coefficients, terms in MonoLess order.
struct IntegerPoly {
    std::vector<std::pair<Mono, mpz_class>> terms;
    std::uint32_t order = 0;
};

IntegerPoly integerize(const Poly& p) {
    IntegerPoly out;
    mpz_class den_lcm(1);
    for (const auto& [m, v] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (const auto& [m, v] : p.terms()) {
        out.terms.emplace_back(m, mpz_class(v.get_num() * (den_lcm / v.get_den())));
    }
    mpz_class g(0);
    for (const auto& [m, v] : out.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
        for (auto& [m, v] : out.terms) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    out.order = p.order().value();
    return out;
}

// x^da * y^db * g, truncated below the cut degree. Shifting preserves the
// term order, and the dropped tail is a suffix.
Row shifted_row(const IntegerPoly& g, std::uint32_t da, std::uint32_t db, std::uint32_t cut) {
    Row row;
    row.reserve(g.terms.size());
    for (const auto& [m, v] : g.terms) {
        std::uint32_t a = m.a + da, b = m.b + db;
        if (a + b >= cut) break;
        row.emplace_back(column_of(a, b), v);
    }
    return row;
}

std::vector<Poly> nonzero_gens(std::span<const Poly> gens) {
    std::vector<Poly> out;
    for (const auto& g : gens) {
        if (!g.is_zero()) out.push_back(g);
    }
    return out;
}

}  // namespace

namespace detail {

TruncationStep truncated_colength(std::span<const Poly> gens, unsigned degree) {
    const std::uint32_t cut = degree;
    EchelonSpan span(cut);
    std::vector<IntegerPoly> igens;
    for (const auto& g : gens) {
        if (!g.is_zero()) igens.push_back(integerize(g));
    }
    assert(!igens.empty());
    // Insert shifts by ascending pivot degree so most rows land without
    // reductions.
    for (std::uint32_t t = 0; t < cut; ++t) {
        for (const auto& g : igens) {
            if (g.order > t) continue;
            std::uint32_t s = t - g.order;
            for (std::uint32_t da = 0; da <= s; ++da) {
                span.insert(shifted_row(g, da, s - da, cut));
            }
        }
    }
    TruncationStep step;
    step.dimension = column_count(cut) - span.rank();
    step.certified = true;
    for (std::uint32_t a = 0; a < cut && step.certified; ++a) {
        step.certified = span.contains(Row{{column_of(a, cut - 1 - a), mpz_class(1)}});
    }
    return step;
}

}  // namespace detail

ColengthResult colength(std::span<const Poly> gens, unsigned cap) {
    if (cap > 65536) throw std::invalid_argument("colength: cap too large (max 65536)");
    std::vector<Poly> gs = nonzero_gens(gens);
    if (gs.empty()) {
        throw std::invalid_argument(gens.empty() ? "colength: empty generator list"
                                                 : "colength: all generators are zero");
    }
    std::uint32_t min_order = UINT32_MAX;
    for (const auto& g : gs) min_order = std::min(min_order, g.order().value());

    ColengthResult result;
    result.cap = cap;
    for (unsigned long degree = 2ul * min_order + 2; degree <= cap; degree *= 2) {
        auto step = detail::truncated_colength(gs, static_cast<unsigned>(degree));
        if (step.certified) {
            result.value = step.dimension;
            result.certified_degree = static_cast<unsigned>(degree);
            return result;
        }
    }
    return result;
}

ColengthResult colength(std::initializer_list<Poly> gens, unsigned cap) {
    return colength(std::span<const Poly>(gens.begin(), gens.size()), cap);
}

namespace {

void require_curve_germ(const Poly& f, const char* where) {
    if (f.is_zero()) throw std::invalid_argument(std::string(where) + ": zero polynomial");
    if (f.at_origin() != 0) {
        throw std::invalid_argument(std::string(where) + ": curve does not pass through the origin");
    }
}

}  // namespace

bool is_isolated(const Poly& f) {
    require_curve_germ(f, "is_isolated");
    Poly h = gcd(gcd(partial(f, Var::x), partial(f, Var::y)), f);
    return h.at_origin() != 0;
}

unsigned long milnor(const Poly& f, unsigned cap) {
    if (!is_isolated(f)) throw NonIsolatedError("milnor: non-isolated singularity");
    auto r = colength({partial(f, Var::x), partial(f, Var::y)}, cap);
    if (!r.value) throw CapExceededError("milnor: colength cap " + std::to_string(cap) + " exhausted");
    return *r.value;
}

unsigned long tjurina(const Poly& f, unsigned cap) {
    if (!is_isolated(f)) throw NonIsolatedError("tjurina: non-isolated singularity");
    auto r = colength({f, partial(f, Var::x), partial(f, Var::y)}, cap);
    if (!r.value) throw CapExceededError("tjurina: colength cap " + std::to_string(cap) + " exhausted");
    return *r.value;
}

std::optional<unsigned long> intersection_multiplicity(const Poly& g, const Poly& h, unsigned cap) {
    if (g.is_zero() && h.is_zero()) return std::nullopt;
    Poly w = gcd(g, h);
    if (w.at_origin() == 0) return std::nullopt;  // common branch through the origin
    auto r = colength({g, h}, cap);
    if (!r.value) {
        throw CapExceededError("intersection_multiplicity: colength cap " + std::to_string(cap) +
                               " exhausted");
    }
    return *r.value;
}

std::optional<TangentLine> tangent_line(const Poly& f) {
    require_curve_germ(f, "tangent_line");
    std::uint32_t nu = f.order().value();
    Poly jet = homogeneous_component(f, nu);
    Rational lead = jet.coeff(0, nu);  // coefficient of y^nu
    if (lead == 0) return std::nullopt;
    Rational eps = jet.coeff(1, nu - 1) / (lead * nu);
    Poly line = Poly::variable(Var::y) + eps * Poly::variable(Var::x);
    if (!(jet == lead * pow(line, nu))) return std::nullopt;
    return TangentLine{eps, nu};
}

BlowupResult strict_transform(const Poly& f) {
    auto line = tangent_line(f);
    if (!line) {
        throw NotSingleLineError("strict_transform: tangent cone is not a power of a single line");
    }
    Poly x = Poly::variable(Var::x);
    Poly y = Poly::variable(Var::y);
    Poly pulled = substitute(f, x, x * y);
    auto divided = exact_divide(pulled, pow(x, line->multiplicity));
    assert(divided.has_value());  // x^nu is the exact exceptional multiplicity
    Poly recentred = substitute(*divided, x, y - Poly(line->epsilon));
    return BlowupResult{std::move(recentred), *line};
}

}  // namespace plbranch
