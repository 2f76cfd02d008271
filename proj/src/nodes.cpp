#include "wlil/nodes.hpp"

#include <cmath>
#include <string>

namespace wlil {

NodeSystem make_system(SystemKind kind, std::vector<double> nodes) {
    if (nodes.size() < 2) throw error("make_system: need at least two nodes");
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i] < nodes[i + 1]))
            throw error("make_system: nodes must increase strictly (x[" +
                        std::to_string(i) + "] = " + std::to_string(nodes[i]) +
                        " >= x[" + std::to_string(i + 1) + "])");
    }
    for (double t : nodes)
        if (!std::isfinite(t)) throw error("make_system: nodes must be finite");
    if ((kind == SystemKind::YnHalfline || kind == SystemKind::Hybrid) &&
        nodes.front() != 0.0)
        throw error("make_system: halfline systems pin x_0 = 0");
    NodeSystem xs;
    xs.system = kind;
    xs.x = std::move(nodes);
    return xs;
}

Interval interval_bounds(const NodeSystem& xs, int i) {
    const int n = xs.n();
    const double inf = std::numeric_limits<double>::infinity();
    if (i < 0 || i > n + 1) throw error("interval_bounds: index out of range");
    if (i == 0) return {-inf, xs.x.front()};
    if (i == n + 1) return {xs.x.back(), inf};
    return {xs.x[i - 1], xs.x[i]};
}

int first_interval(const NodeSystem& xs) {
    return xs.system == SystemKind::HermiteLine ? 0 : 1;
}

int last_interval(const NodeSystem& xs) {
    return xs.system == SystemKind::FiniteInterval ? xs.n() : xs.n() + 1;
}

int interval_of(const NodeSystem& xs, double t) {
    const int n = xs.n();
    int i = 0;
    while (i <= n && t > xs.x[i]) ++i;  // i = first node index with t <= x_i
    if (i > n) i = n + 1;
    if (i < first_interval(xs)) i = first_interval(xs);
    if (i > last_interval(xs)) i = last_interval(xs);
    return i;
}

}  // namespace wlil
