#include "perazzo/resolution.hpp"

#include "perazzo/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace perazzo {

std::int64_t BettiTable::at(int i, int j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::int64_t value) {
    if (value == 0)
        entries.erase({i, j});
    else
        entries[{i, j}] = value;
}

std::vector<std::int64_t> BettiTable::totals() const {
    std::vector<std::int64_t> out(nvars + 1, 0);
    for (const auto& [ij, b] : entries)
        out.at(static_cast<std::size_t>(ij.first)) += b;
    return out;
}

bool BettiTable::is_self_dual(int socle_degree) const {
    const int n = static_cast<int>(nvars);
    for (const auto& [ij, b] : entries)
        if (at(n - ij.first, socle_degree + n - ij.second) != b)
            return false;
    return true;
}

namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> subsets(std::size_t n, std::size_t k) {
    std::vector<Subset> out;
    if (k > n)
        return out;
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i)
        s[i] = i;
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++s[i - 1];
        for (std::size_t t = i; t < k; ++t)
            s[t] = s[t - 1] + 1;
    }
    return out;
}

}  // namespace

template <Field F>
std::size_t koszul_dimension(const GradedModule<F>& module, int i, int j) {
    if (i < 0 || static_cast<std::size_t>(i) > module.nvars || j - i < 0)
        return 0;
    return subsets(module.nvars, static_cast<std::size_t>(i)).size() * module.dim(static_cast<std::size_t>(j - i));
}

template <Field F>
Matrix<F> koszul_differential(const GradedModule<F>& module, int i, int j) {
    const F& field = module.field;
    if (i < 1 || static_cast<std::size_t>(i) > module.nvars || j - i < 0)
        return Matrix<F>(field, 0, 0);
    const auto src_deg = static_cast<std::size_t>(j - i);
    const auto src = subsets(module.nvars, static_cast<std::size_t>(i));
    const auto dst = subsets(module.nvars, static_cast<std::size_t>(i - 1));
    const std::size_t w_src = module.dim(src_deg);
    const std::size_t w_dst = module.dim(src_deg + 1);
    Matrix<F> out(field, dst.size() * w_dst, src.size() * w_src);
    if (w_src == 0 || w_dst == 0)
        return out;
    std::map<Subset, std::size_t> dst_pos;
    for (std::size_t k = 0; k < dst.size(); ++k)
        dst_pos.emplace(dst[k], k);
    const auto minus_one = field.neg(field.one());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto& s = src[c];
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
            Subset rest = s;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            const std::size_t r = dst_pos.at(rest);
            const auto& m = module.mult[s[pos]][src_deg];
            const bool negate = pos % 2 == 1;
            for (std::size_t a = 0; a < w_dst; ++a)
                for (std::size_t b = 0; b < w_src; ++b)
                    out(r * w_dst + a, c * w_src + b) = negate ? field.mul(minus_one, m(a, b)) : m(a, b);
        }
    }
    return out;
}

template <Field F>
BettiTable betti(const GradedModule<F>& module) {
    BettiTable t;
    t.nvars = module.nvars;
    const int n = static_cast<int>(module.nvars);
    const int top = static_cast<int>(module.top_degree());
    // rank of d_i in degree j, cached for reuse as the incoming map of i-1
    std::map<std::pair<int, int>, std::size_t> ranks;
    const auto rank_of = [&](int i, int j) -> std::size_t {
        if (i < 1 || i > n || j - i < 0 || j - i > top)
            return 0;
        auto [it, fresh] = ranks.try_emplace({i, j}, 0);
        if (fresh)
            it->second = rank(koszul_differential(module, i, j));
        return it->second;
    };
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= i + top; ++j) {
            const auto dim = koszul_dimension(module, i, j);
            if (dim == 0)
                continue;
            const auto kernel = dim - rank_of(i, j);
            t.set(i, j, static_cast<std::int64_t>(kernel - rank_of(i + 1, j)));
        }
    return t;
}

template <Field F>
bool koszul_squares_to_zero(const GradedModule<F>& module) {
    const int n = static_cast<int>(module.nvars);
    const int top = static_cast<int>(module.top_degree());
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= i + top; ++j) {
            const auto outer = koszul_differential(module, i - 1, j);
            const auto inner = koszul_differential(module, i, j);
            if (outer.empty() || inner.empty())
                continue;
            if (!(outer * inner).is_zero())
                return false;
        }
    return true;
}

template <Field F>
bool koszul_euler_balanced(const GradedModule<F>& module, const BettiTable& table) {
    const int n = static_cast<int>(module.nvars);
    const int top = static_cast<int>(module.top_degree());
    for (int j = 0; j <= n + top; ++j) {
        std::int64_t terms = 0;
        std::int64_t homology = 0;
        for (int i = 0; i <= n; ++i) {
            const std::int64_t sign = i % 2 == 0 ? 1 : -1;
            terms += sign * static_cast<std::int64_t>(koszul_dimension(module, i, j));
            homology += sign * table.at(i, j);
        }
        if (terms != homology)
            return false;
    }
    return true;
}

BettiTable expected_betti_min_p4(int d) {
    if (d < 5)
        throw PreconditionError("the closed-form table needs d >= 5");
    BettiTable t;
    t.nvars = 5;
    const auto add = [&](int i, int j, std::int64_t b) { t.set(i, j, t.at(i, j) + b); };
    add(0, 0, 1);
    const std::int64_t row1[] = {9, 17, 12, 3};
    const std::int64_t row2[] = {1, 3, 3, 1};
    const std::int64_t rowdm1[] = {3, 12, 17, 9};
    for (int i = 1; i <= 4; ++i) {
        add(i, i + 1, row1[i - 1]);
        add(i, i + 2, row2[i - 1]);
        add(i, i + d - 2, row2[i - 1]);
        add(i, i + d - 1, rowdm1[i - 1]);
    }
    add(5, d + 5, 1);
    return t;
}

template <Field F>
TorReport check_tor_vanishing(const GradedModule<F>& module, const LinearForm<F>& ell) {
    const auto b = quotient_module(module, ell);
    TorReport r;
    r.table = betti(b);
    r.h = b.dims;
    r.vanishes = true;
    for (const auto& [ij, beta] : r.table.entries)
        if (ij.second > ij.first + 2)
            r.vanishes = false;
    return r;
}

std::string render_m2(const BettiTable& table) {
    const int n = static_cast<int>(table.nvars);
    int lo = 0;
    int hi = 0;
    bool any = false;
    for (const auto& [ij, b] : table.entries) {
        const int row = ij.second - ij.first;
        lo = any ? std::min(lo, row) : row;
        hi = any ? std::max(hi, row) : row;
        any = true;
    }
    const auto totals = table.totals();
    const auto cell = [&](int i, int row) {
        const auto b = table.at(i, i + row);
        return b == 0 ? std::string(".") : std::to_string(b);
    };

    std::vector<std::size_t> width(static_cast<std::size_t>(n + 1), 1);
    for (int i = 0; i <= n; ++i) {
        auto& w = width[static_cast<std::size_t>(i)];
        w = std::max({w, std::to_string(i).size(), std::to_string(totals[static_cast<std::size_t>(i)]).size()});
        for (int row = lo; any && row <= hi; ++row)
            w = std::max(w, cell(i, row).size());
    }
    std::size_t shared = 1;
    for (int i = 1; i <= n; ++i)
        shared = std::max(shared, width[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= n; ++i)
        width[static_cast<std::size_t>(i)] = shared;

    std::vector<std::string> labels;
    for (int row = lo; any && row <= hi; ++row)
        labels.push_back(std::to_string(row) + ":");
    std::size_t label_width = std::string("total:").size();
    for (const auto& l : labels)
        label_width = std::max(label_width, l.size());

    const auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
    const auto line = [&](const std::string& label, auto&& value) {
        std::string out = pad(label, label_width);
        for (int i = 0; i <= n; ++i)
            out += " " + pad(value(i), width[static_cast<std::size_t>(i)]);
        return out;
    };

    std::vector<std::string> body;
    body.push_back(line("", [](int i) { return std::to_string(i); }));
    body.push_back(line("total:", [&](int i) { return std::to_string(totals[static_cast<std::size_t>(i)]); }));
    for (int row = lo; any && row <= hi; ++row)
        body.push_back(line(std::to_string(row) + ":", [&](int i) { return cell(i, row); }));

    const std::string border = "+" + std::string(body.front().size(), '-') + "+\n";
    std::string out = border;
    for (const auto& b : body)
        out += "|" + b + "|\n";
    return out + border;
}

#define PERAZZO_INSTANTIATE_RESOLUTION(F)                                                \
    template Matrix<F> koszul_differential(const GradedModule<F>&, int, int);            \
    template std::size_t koszul_dimension(const GradedModule<F>&, int, int);             \
    template BettiTable betti(const GradedModule<F>&);                                   \
    template bool koszul_squares_to_zero(const GradedModule<F>&);                        \
    template bool koszul_euler_balanced(const GradedModule<F>&, const BettiTable&);      \
    template TorReport check_tor_vanishing(const GradedModule<F>&, const LinearForm<F>&);

PERAZZO_INSTANTIATE_RESOLUTION(PrimeField)
PERAZZO_INSTANTIATE_RESOLUTION(RationalField)

#undef PERAZZO_INSTANTIATE_RESOLUTION

}  // namespace perazzo
