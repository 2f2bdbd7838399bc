#include "gpc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "gpc/error.hpp"

namespace gpc {

namespace {

void collect_residue(long bound, unsigned residue, unsigned stride, std::vector<CirclePoint>& out) {
    const Integer limit = bound;
    for (long p = residue; 2 * p * p <= bound; p += stride) {
        for (long q = std::max(p, 1L); p * p + q * q <= bound; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const long c = p * p + q * q;
            const Rational x(Integer(2 * p * q), Integer(c));
            const Rational y(Integer(q * q - p * p), Integer(c));
            if (height(x) > limit || height(y) > limit) continue;
            for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
                out.emplace_back(a, b);
                out.emplace_back(-a, b);
                out.emplace_back(a, -b);
                out.emplace_back(-a, -b);
            }
        }
    }
}

std::vector<Rational> chain(const Rational& start, const Rational& ratio, int length) {
    std::vector<Rational> xs{start};
    for (int i = 1; i < length; ++i) xs.push_back(xs.back() * ratio);
    return xs;
}

} // namespace

PointInventory enumerate(long bound, unsigned threads) {
    if (bound < 1) throw Error(ErrorKind::DegenerateParameter, "bound must be positive");
    threads = std::max(1U, threads);
    std::vector<std::vector<CirclePoint>> parts(threads);
    if (threads == 1) {
        collect_residue(bound, 0, 1, parts[0]);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < threads; ++i) {
            workers.emplace_back([&, i] { collect_residue(bound, i, threads, parts[i]); });
        }
    }
    PointInventory inv{bound, {}};
    for (auto& part : parts) {
        inv.points.insert(inv.points.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(inv.points.begin(), inv.points.end());
    inv.points.erase(std::unique(inv.points.begin(), inv.points.end()), inv.points.end());
    return inv;
}

std::vector<GPSequence> search_gp(long bound, int length, const std::optional<Rational>& ratio, unsigned threads) {
    if (length < 2 || length > 4) throw Error(ErrorKind::DegenerateParameter, "search length must be 2, 3 or 4");
    PointInventory inv = enumerate(bound, threads);

    // One canonical (y >= 0) point per nonzero abscissa, sorted by x.
    std::vector<CirclePoint> canon;
    for (const auto& p : inv.points) {
        if (!p.x().is_zero() && p.y().sign() >= 0) canon.push_back(p);
    }
    auto lookup = [&](const Rational& x) -> const CirclePoint* {
        auto it = std::lower_bound(canon.begin(), canon.end(), x,
                                   [](const CirclePoint& p, const Rational& v) { return p.x() < v; });
        return it != canon.end() && it->x() == x ? &*it : nullptr;
    };
    auto try_chain = [&](const Rational& start, const Rational& r, std::vector<GPSequence>& out) {
        std::vector<CirclePoint> pts;
        for (const auto& x : chain(start, r, length)) {
            const CirclePoint* p = lookup(x);
            if (!p) return;
            pts.push_back(*p);
        }
        out.emplace_back(std::move(pts));
    };

    std::vector<GPSequence> out;
    if (ratio) {
        if (ratio->is_zero() || *ratio == Rational(1) || *ratio == Rational(-1)) return out;
        for (const auto& p : canon) try_chain(p.x(), *ratio, out);
        return out;
    }
    for (const auto& first : canon) {
        for (const auto& second : canon) {
            Rational r = second.x() / first.x();
            if (r == Rational(1) || r == Rational(-1)) continue;
            try_chain(first.x(), r, out);
        }
    }
    return out;
}

bool cross_check(const GPSequence& seq) {
    Integer h = seq.max_height();
    if (!h.fits_slong_p()) return false;
    auto hits = search_gp(h.get_si(), static_cast<int>(seq.size()), seq.ratio());
    const auto target = seq.abscissae();
    return std::any_of(hits.begin(), hits.end(), [&](const GPSequence& s) { return s.abscissae() == target; });
}

} // namespace gpc
