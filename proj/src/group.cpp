#include "raglab/group.hpp"

#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace raglab {

GroupSpec GroupSpec::hypercube(int d) {
    if (d < 1 || d > 1 << 20) throw std::invalid_argument("hypercube: bad dimension");
    GroupSpec s;
    s.kind = Kind::Hypercube;
    s.d = d;
    s.order = d < 64 ? (std::uint64_t(1) << d) : 0;  // 0 marks >= 2^64
    if (d >= 64) s.order = UINT64_MAX;               // effectively non-enumerable
    return s;
}

GroupSpec GroupSpec::cyclic_product(std::vector<std::uint64_t> moduli) {
    if (moduli.empty()) throw std::invalid_argument("cyclic_product: empty moduli");
    GroupSpec s;
    s.kind = Kind::CyclicProduct;
    std::uint64_t ord = 1;
    for (auto m : moduli) {
        if (m < 2) throw std::invalid_argument("cyclic_product: modulus must be >= 2");
        if (ord > UINT64_MAX / m) {
            ord = UINT64_MAX;
            break;
        }
        ord *= m;
    }
    s.moduli = std::move(moduli);
    s.order = ord;
    return s;
}

GroupSpec GroupSpec::table(std::vector<std::vector<std::uint32_t>> op,
                           std::vector<std::uint32_t> inv) {
    const std::size_t n = op.size();
    if (n == 0 || inv.size() != n)
        throw std::invalid_argument("table group: size mismatch");
    // Latin square check plus inverse consistency; identity must be index 0.
    std::vector<bool> seen(n);
    for (std::size_t g = 0; g < n; ++g) {
        if (op[g].size() != n) throw std::invalid_argument("table group: ragged op");
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t h = 0; h < n; ++h) {
            std::uint32_t v = op[g][h];
            if (v >= n || seen[v]) throw std::invalid_argument("table group: op row not a permutation");
            seen[v] = true;
        }
        if (op[g][0] != g || op[0][g] != g)
            throw std::invalid_argument("table group: index 0 is not the identity");
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t g = 0; g < n; ++g) {
            std::uint32_t v = op[g][c];
            if (seen[v]) throw std::invalid_argument("table group: op column not a permutation");
            seen[v] = true;
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (inv[g] >= n || inv[inv[g]] != g)
            throw std::invalid_argument("table group: inv is not an involution");
        if (op[g][inv[g]] != 0)
            throw std::invalid_argument("table group: inv inconsistent with op");
    }
    GroupSpec s;
    s.kind = Kind::Table;
    s.op = std::move(op);
    s.inv_table = std::move(inv);
    s.order = n;
    return s;
}

int GroupSpec::words_per_element() const {
    switch (kind) {
        case Kind::Hypercube: return (d + 63) / 64;
        case Kind::CyclicProduct: return int(moduli.size());
        case Kind::Table: return 1;
    }
    return 1;
}

GroupElement identity(const GroupSpec& spec) {
    GroupElement e;
    e.w.assign(spec.words_per_element(), 0);
    return e;
}

bool is_valid(const GroupSpec& spec, const GroupElement& x) {
    if (int(x.w.size()) != spec.words_per_element()) return false;
    switch (spec.kind) {
        case GroupSpec::Kind::Hypercube: {
            const int rem = spec.d % 64;
            if (rem != 0) {
                std::uint64_t mask = ~((std::uint64_t(1) << rem) - 1);
                if (x.w.back() & mask) return false;
            }
            return true;
        }
        case GroupSpec::Kind::CyclicProduct:
            for (std::size_t i = 0; i < spec.moduli.size(); ++i)
                if (x.w[i] >= spec.moduli[i]) return false;
            return true;
        case GroupSpec::Kind::Table:
            return x.w[0] < spec.order;
    }
    return false;
}

GroupElement mul(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
    GroupElement r;
    r.w.resize(x.w.size());
    switch (spec.kind) {
        case GroupSpec::Kind::Hypercube:
            for (std::size_t i = 0; i < x.w.size(); ++i) r.w[i] = x.w[i] ^ y.w[i];
            return r;
        case GroupSpec::Kind::CyclicProduct:
            for (std::size_t i = 0; i < spec.moduli.size(); ++i) {
                std::uint64_t s = x.w[i] + y.w[i];
                if (s >= spec.moduli[i]) s -= spec.moduli[i];
                r.w[i] = s;
            }
            return r;
        case GroupSpec::Kind::Table: {
            if (x.w[0] >= spec.order || y.w[0] >= spec.order)
                throw std::out_of_range("table mul: element index out of range");
            r.w[0] = spec.op[x.w[0]][y.w[0]];
            return r;
        }
    }
    return r;
}

GroupElement inv(const GroupSpec& spec, const GroupElement& x) {
    switch (spec.kind) {
        case GroupSpec::Kind::Hypercube:
            return x;  // every element has order <= 2
        case GroupSpec::Kind::CyclicProduct: {
            GroupElement r;
            r.w.resize(x.w.size());
            for (std::size_t i = 0; i < spec.moduli.size(); ++i)
                r.w[i] = x.w[i] == 0 ? 0 : spec.moduli[i] - x.w[i];
            return r;
        }
        case GroupSpec::Kind::Table: {
            if (x.w[0] >= spec.order)
                throw std::out_of_range("table inv: element index out of range");
            GroupElement r;
            r.w = {spec.inv_table[x.w[0]]};
            return r;
        }
    }
    return x;
}

int hamming_class(const GroupSpec& spec, const GroupElement& x) {
    if (spec.kind != GroupSpec::Kind::Hypercube)
        throw std::invalid_argument("hamming_class: hypercube elements only");
    int c = 0;
    for (auto w : x.w) c += std::popcount(w);
    return c;
}

GroupElement element_from_index(const GroupSpec& spec, std::uint64_t idx) {
    if (idx >= spec.order) throw std::out_of_range("element_from_index");
    GroupElement e = identity(spec);
    switch (spec.kind) {
        case GroupSpec::Kind::Hypercube:
            e.w[0] = idx;  // enumerable implies d <= 24, one word
            return e;
        case GroupSpec::Kind::CyclicProduct:
            for (std::size_t i = 0; i < spec.moduli.size(); ++i) {
                e.w[i] = idx % spec.moduli[i];
                idx /= spec.moduli[i];
            }
            return e;
        case GroupSpec::Kind::Table:
            e.w[0] = idx;
            return e;
    }
    return e;
}

std::uint64_t index_of_element(const GroupSpec& spec, const GroupElement& x) {
    switch (spec.kind) {
        case GroupSpec::Kind::Hypercube:
            return x.w[0];
        case GroupSpec::Kind::CyclicProduct: {
            std::uint64_t idx = 0;
            for (std::size_t i = spec.moduli.size(); i-- > 0;)
                idx = idx * spec.moduli[i] + x.w[i];
            return idx;
        }
        case GroupSpec::Kind::Table:
            return x.w[0];
    }
    return 0;
}

GroupElement random_element(const GroupSpec& spec, RngStream& rng) {
    GroupElement e = identity(spec);
    switch (spec.kind) {
        case GroupSpec::Kind::Hypercube: {
            const int full = spec.d / 64, rem = spec.d % 64;
            for (int i = 0; i < full; ++i) e.w[i] = rng.next_u64();
            if (rem != 0) e.w[full] = rng.next_u64() & ((std::uint64_t(1) << rem) - 1);
            return e;
        }
        case GroupSpec::Kind::CyclicProduct:
            for (std::size_t i = 0; i < spec.moduli.size(); ++i)
                e.w[i] = rng.next_below(spec.moduli[i]);
            return e;
        case GroupSpec::Kind::Table:
            e.w[0] = rng.next_below(spec.order);
            return e;
    }
    return e;
}

OrbitPartition orbit_partition(const GroupSpec& spec, std::uint64_t cap) {
    if (!spec.enumerable(cap))
        throw std::invalid_argument("orbit_partition: group order exceeds enumeration cap");
    OrbitPartition part;
    const std::uint64_t n = spec.order;
    std::vector<bool> done(n, false);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        GroupElement g = element_from_index(spec, i);
        std::uint64_t j = index_of_element(spec, inv(spec, g));
        done[i] = true;
        if (j == i) {
            part.orbits.push_back({i});
        } else {
            done[j] = true;
            part.orbits.push_back({i, j});
        }
    }
    return part;
}

std::string GroupSpec::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::Hypercube:
            j["kind"] = "hypercube";
            j["d"] = d;
            break;
        case Kind::CyclicProduct:
            j["kind"] = "cyclic_product";
            j["moduli"] = moduli;
            break;
        case Kind::Table:
            j["kind"] = "table";
            j["op"] = op;
            j["inv"] = inv_table;
            break;
    }
    return j.dump();
}

GroupSpec GroupSpec::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hypercube") return hypercube(j.at("d").get<int>());
    if (kind == "cyclic_product")
        return cyclic_product(j.at("moduli").get<std::vector<std::uint64_t>>());
    if (kind == "table")
        return table(j.at("op").get<std::vector<std::vector<std::uint32_t>>>(),
                     j.at("inv").get<std::vector<std::uint32_t>>());
    throw std::invalid_argument("GroupSpec::from_json: unknown kind " + kind);
}

}  // namespace raglab
