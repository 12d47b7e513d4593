#include "gadgets/planarity.hpp"

#include <algorithm>
#include <numeric>

namespace gadgets {

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool check_planarity(const SystemOfGadgets& sys) {
    if (sys.rotation.empty())
        throw ValidationError("planarity check needs rotation data");
    auto bad = validate(sys);
    if (!bad.empty()) throw ValidationError("invalid system: " + bad.front());

    const int n = static_cast<int>(sys.instances.size());
    const int m = static_cast<int>(sys.connections.size());

    // Dart 2e leaves connections[e].first, dart 2e+1 leaves .second.
    // darts_at[v] lists darts leaving v in clockwise rotation order.
    std::vector<std::vector<int>> darts_at(n);
    std::vector<std::vector<int>> dart_of_loc(n);
    for (int v = 0; v < n; ++v)
        dart_of_loc[v].assign(sys.instances[v].gadget.num_locations(), -1);
    for (int e = 0; e < m; ++e) {
        const auto& [a, b] = sys.connections[e];
        dart_of_loc[a.instance][a.location] = 2 * e;
        dart_of_loc[b.instance][b.location] = 2 * e + 1;
    }
    for (int v = 0; v < n; ++v) {
        const auto& inst = sys.instances[v];
        auto it = sys.rotation.find(inst.id);
        const std::vector<std::string>& order =
            it != sys.rotation.end() ? it->second : inst.gadget.rotation();
        for (const std::string& label : order) {
            int loc = inst.gadget.location_index(label);
            if (dart_of_loc[v][loc] >= 0) darts_at[v].push_back(dart_of_loc[v][loc]);
        }
    }

    // next[d] = dart after d clockwise around its vertex.
    std::vector<int> next(2 * m, -1);
    for (int v = 0; v < n; ++v) {
        const auto& ds = darts_at[v];
        for (size_t i = 0; i < ds.size(); ++i) next[ds[i]] = ds[(i + 1) % ds.size()];
    }

    // Face tracing: phi(d) = next[twin(d)].
    auto twin = [](int d) { return d ^ 1; };
    std::vector<char> seen(2 * m, 0);
    std::vector<int> face_count_of_comp;  // indexed by DSU root later

    DSU dsu(n);
    for (const auto& [a, b] : sys.connections) dsu.join(a.instance, b.instance);

    std::vector<int> faces(n, 0), edges(n, 0), verts(n, 0);
    for (int e = 0; e < m; ++e) edges[dsu.find(sys.connections[e].first.instance)]++;
    for (int v = 0; v < n; ++v) verts[dsu.find(v)]++;

    for (int d = 0; d < 2 * m; ++d) {
        if (seen[d]) continue;
        int comp = dsu.find(sys.connections[d / 2].first.instance);
        int cur = d;
        do {
            seen[cur] = 1;
            cur = next[twin(cur)];
        } while (cur != d);
        faces[comp]++;
    }

    for (int v = 0; v < n; ++v) {
        if (dsu.find(v) != v) continue;
        int F = edges[v] == 0 ? 1 : faces[v];
        if (verts[v] - edges[v] + F != 2) return false;
    }
    return true;
}

}  // namespace gadgets
