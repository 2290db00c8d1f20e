#include "drg/graph.hpp"

#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace drg {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<size_t>(u)].for_each([&](int v) {
            if (u < v) es.emplace_back(u, v);
        });
    return es;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    dist[static_cast<size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        g.row(u).for_each([&](int v) {
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
        });
    }
    return dist;
}

std::vector<std::vector<std::uint8_t>> all_pairs_distances(const Graph& g) {
    if (g.n() > 20000) throw std::invalid_argument("all_pairs_distances: graph too large");
    std::vector<std::vector<std::uint8_t>> table(static_cast<size_t>(g.n()));
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> d = bfs_distances(g, s);
        std::vector<std::uint8_t>& row = table[static_cast<size_t>(s)];
        row.resize(static_cast<size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            row[static_cast<size_t>(v)] =
                d[static_cast<size_t>(v)] < 0 ? 255 : static_cast<std::uint8_t>(d[static_cast<size_t>(v)]);
    }
    return table;
}

std::string DrgWitness::to_string() const {
    std::ostringstream os;
    os << what << " at pair (" << x << "," << y << "), distance " << dist << ": expected "
       << expected << ", got " << got;
    return os.str();
}

DrgCheckResult check_distance_regular(const Graph& g) {
    DrgCheckResult res;
    const int n = g.n();
    if (n == 0) {
        res.witness = DrgWitness{-1, -1, -1, "empty graph", 0, 0};
        return res;
    }
    // First pass from vertex 0 fixes diameter and the reference counts.
    std::vector<int> d0 = bfs_distances(g, 0);
    int diam = 0;
    for (int v = 0; v < n; ++v) {
        if (d0[static_cast<size_t>(v)] < 0) {
            res.witness = DrgWitness{0, v, -1, "disconnected", -1, -1};
            return res;
        }
        diam = std::max(diam, d0[static_cast<size_t>(v)]);
    }
    res.diameter = diam;

    std::vector<long> c_ref(static_cast<size_t>(diam) + 1, -1);
    std::vector<long> b_ref(static_cast<size_t>(diam) + 1, -1);
    b_ref[0] = g.degree(0);
    c_ref[0] = 0;

    std::vector<Bitset> sphere(static_cast<size_t>(diam) + 1, Bitset(n));
    for (int x = 0; x < n; ++x) {
        std::vector<int> dist = (x == 0) ? d0 : bfs_distances(g, x);
        for (Bitset& s : sphere) s.clear();
        int ecc = 0;
        for (int v = 0; v < n; ++v) {
            int dv = dist[static_cast<size_t>(v)];
            if (dv < 0) {
                res.witness = DrgWitness{x, v, -1, "disconnected", -1, -1};
                return res;
            }
            if (dv > diam) {
                res.witness = DrgWitness{x, v, dv, "eccentricity exceeds diameter", diam, dv};
                return res;
            }
            sphere[static_cast<size_t>(dv)].set(v);
            ecc = std::max(ecc, dv);
        }
        if (ecc != diam) {
            res.witness = DrgWitness{x, -1, ecc, "eccentricity below diameter", diam, ecc};
            return res;
        }
        for (int y = 0; y < n; ++y) {
            int i = dist[static_cast<size_t>(y)];
            long ci = (i >= 1) ? Bitset::and_count(g.row(y), sphere[static_cast<size_t>(i - 1)]) : 0;
            long bi = (i <= diam - 1)
                          ? Bitset::and_count(g.row(y), sphere[static_cast<size_t>(i + 1)])
                          : 0;
            if (i >= 1) {
                if (c_ref[static_cast<size_t>(i)] < 0) c_ref[static_cast<size_t>(i)] = ci;
                if (ci != c_ref[static_cast<size_t>(i)]) {
                    res.witness = DrgWitness{x, y, i, "c-count varies",
                                             c_ref[static_cast<size_t>(i)], ci};
                    return res;
                }
            }
            if (i <= diam - 1) {
                if (b_ref[static_cast<size_t>(i)] < 0) b_ref[static_cast<size_t>(i)] = bi;
                if (bi != b_ref[static_cast<size_t>(i)]) {
                    res.witness = DrgWitness{x, y, i, "b-count varies",
                                             b_ref[static_cast<size_t>(i)], bi};
                    return res;
                }
            }
        }
    }

    IntersectionArray arr;
    arr.D = diam;
    for (int i = 0; i <= diam - 1; ++i) arr.b_seq.push_back(Rat(b_ref[static_cast<size_t>(i)]));
    for (int i = 1; i <= diam; ++i) arr.c_seq.push_back(Rat(c_ref[static_cast<size_t>(i)]));
    arr.k = arr.b_seq.empty() ? Rat(0) : arr.b_seq[0];
    for (int i = 1; i <= diam; ++i)
        arr.a_seq.push_back(arr.k - (i < diam ? arr.b(i) : Rat(0)) - arr.c(i));
    arr.k_dist.push_back(1);
    arr.kdist_ok = true;
    for (int i = 1; i <= diam; ++i)
        arr.k_dist.push_back(arr.k_dist.back() * arr.b(i - 1) / arr.c(i));
    arr.n = 0;
    for (const Rat& ki : arr.k_dist) arr.n += ki;
    res.array = std::move(arr);
    return res;
}

std::string write_graph_text(const GraphFile& gf) {
    std::ostringstream os;
    os << "{\n";
    os << "\"n\": " << gf.graph.n() << ",\n";
    os << "\"edges\": [";
    auto es = gf.graph.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        os << (i ? ",\n" : "\n");
        os << "[" << es[i].first << ", " << es[i].second << "]";
    }
    os << "\n]";
    if (!gf.graph.labels.empty()) {
        os << ",\n\"labels\": [";
        for (size_t i = 0; i < gf.graph.labels.size(); ++i) {
            os << (i ? ",\n" : "\n");
            os << nlohmann::json(gf.graph.labels[i]).dump();
        }
        os << "\n]";
    }
    if (!gf.family.empty()) {
        os << ",\n\"family\": " << nlohmann::json(gf.family).dump();
        os << ",\n\"args\": [";
        for (size_t i = 0; i < gf.args.size(); ++i) os << (i ? ", " : "") << gf.args[i];
        os << "]";
    }
    os << "\n}\n";
    return os.str();
}

Fallible<GraphFile> read_graph_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) return Fallible<GraphFile>::failure("graph file: invalid JSON");
    if (!j.contains("n") || !j["n"].is_number_integer())
        return Fallible<GraphFile>::failure("graph file: missing integer field 'n'");
    long n = j["n"].get<long>();
    if (n < 0 || n > 5'000'000) return Fallible<GraphFile>::failure("graph file: bad vertex count");
    GraphFile gf;
    gf.graph = Graph(static_cast<int>(n));
    if (!j.contains("edges") || !j["edges"].is_array())
        return Fallible<GraphFile>::failure("graph file: missing array field 'edges'");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            return Fallible<GraphFile>::failure("graph file: edge entries must be [u, v]");
        long u = e[0].get<long>(), v = e[1].get<long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            return Fallible<GraphFile>::failure("graph file: edge endpoint out of range");
        gf.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (j.contains("labels")) {
        for (const auto& s : j["labels"]) gf.graph.labels.push_back(s.get<std::string>());
        if (gf.graph.labels.size() != static_cast<size_t>(n))
            return Fallible<GraphFile>::failure("graph file: labels length mismatch");
    }
    if (j.contains("family")) gf.family = j["family"].get<std::string>();
    if (j.contains("args"))
        for (const auto& a : j["args"]) gf.args.push_back(a.get<long>());
    return Fallible<GraphFile>::success(std::move(gf));
}

Fallible<GraphFile> load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return Fallible<GraphFile>::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph_text(buf.str());
}

Fallible<bool> save_graph_file(const GraphFile& gf, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return Fallible<bool>::failure("cannot write " + path);
    out << write_graph_text(gf);
    return Fallible<bool>::success(true);
}

}  // namespace drg
