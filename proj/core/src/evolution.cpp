#include "qwalk/evolution.hpp"

#include <algorithm>
#include <string>

namespace qwalk {

class Stepper {
public:
    template <class Pred>
    static AmplitudeField run(const AmplitudeField& field, const CoinOperator& coin,
                              Pred&& is_broken) {
        const SupportRect& sup = field.support_rect();
        const int radius = field.radius();
        const Site origin = field.origin();

        AmplitudeField next(radius, origin, field.time() + 1);
        if (sup.empty()) return next;

        if (sup.m_min < origin.m - radius + 2 || sup.m_max > origin.m + radius - 2 ||
            sup.n_min < origin.n - radius + 2 || sup.n_max > origin.n + radius - 2)
            throw SupportTouchesBoundary("support reaches within one cell of the box edge at t = " +
                                         std::to_string(field.time()));

        // Pass 1: apply the coin at every occupied site.
        std::vector<Complex> rotated(field.data().size(), Complex{0.0, 0.0});
        const Eigen::Matrix4cd& c = coin.entries();
        for (int m = sup.m_min; m <= sup.m_max; ++m) {
            for (int n = sup.n_min; n <= sup.n_max; ++n) {
                const Site s{m, n};
                if (!even_parity(s)) continue;
                const std::size_t base = field.index(s, 0);
                const Complex* a = field.data().data() + base;
                if (a[0] == zero && a[1] == zero && a[2] == zero && a[3] == zero) continue;
                Complex* out = rotated.data() + base;
                for (int r = 0; r < 4; ++r)
                    out[r] = c(r, 0) * a[0] + c(r, 1) * a[1] + c(r, 2) * a[2] + c(r, 3) * a[3];
            }
        }

        // Pass 2: move each rotated component across its edge (or reflect it
        // in place with the component flipped when the edge is broken).
        // Targets live at most one cell outside the old support.
        for (int m = sup.m_min - 1; m <= sup.m_max + 1; ++m) {
            for (int n = sup.n_min - 1; n <= sup.n_max + 1; ++n) {
                const Site target{m, n};
                if (!even_parity(target)) continue;
                bool occupied = false;
                for (CoinIndex comp : all_coins()) {
                    const Site source{m - comp.dm(), n - comp.dn()};
                    Complex value;
                    if (!is_broken(target, comp.flipped())) {
                        value = rotated[field.index(source, comp.flat())];
                    } else {
                        value = rotated[field.index(target, comp.flipped().flat())];
                    }
                    if (value != zero) {
                        next.data_[next.index(target, comp.flat())] = value;
                        occupied = true;
                    }
                }
                if (occupied) next.support_.include(target);
            }
        }
        return next;
    }

private:
    static constexpr Complex zero{0.0, 0.0};
};

AmplitudeField step(const AmplitudeField& field, const CoinOperator& coin, const LinkSet& links) {
    return Stepper::run(field, coin,
                        [&links](Site s, CoinIndex d) { return links.is_broken(s, d); });
}

AmplitudeField step_with_predicate(const AmplitudeField& field, const CoinOperator& coin,
                                   const EdgePredicate& is_broken) {
    return Stepper::run(field, coin, is_broken);
}

AmplitudeField evolve(const AmplitudeField& field, const CoinOperator& coin, const LinkSet& links,
                      int steps, const std::vector<StepObserver>& observers) {
    if (steps < 0) throw Error("steps must be nonnegative");

    const SupportRect& sup = field.support_rect();
    if (!sup.empty()) {
        const Site o = field.origin();
        const int extent = std::max({std::abs(sup.m_min - o.m), std::abs(sup.m_max - o.m),
                                     std::abs(sup.n_min - o.n), std::abs(sup.n_max - o.n)});
        if (field.radius() < extent + steps + 2)
            throw SupportTouchesBoundary(
                "radius " + std::to_string(field.radius()) + " cannot hold support extent " +
                std::to_string(extent) + " evolved for " + std::to_string(steps) + " steps");
    }

    AmplitudeField current = field;
    for (int i = 0; i < steps; ++i) {
        current = step(current, coin, links);
        for (const StepObserver& observer : observers) observer(current.time(), current);
    }
    return current;
}

}  // namespace qwalk
