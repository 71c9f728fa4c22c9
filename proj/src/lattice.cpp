#include "mpg/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mpg {

std::size_t SubgameStore::VecHash::operator()(const std::vector<Level>& v) const
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Level x : v) {
        h ^= std::hash<Level>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<Level> SubgameStore::key(const EnergyFunction& f)
{
    std::vector<Level> k;
    k.reserve(f.size());
    for (EnergyValue x : f.values()) k.push_back(x.is_top() ? -1 : x.level());
    return k;
}

std::pair<std::size_t, bool> SubgameStore::insert(const SubgameMask& m)
{
    ++subgame_attempts_;
    auto [it, fresh] = subgames_.emplace(m.bits(), subgames_.size());
    return {it->second, fresh};
}

std::pair<std::size_t, bool> SubgameStore::insert(const EnergyFunction& f)
{
    ++sepm_attempts_;
    auto [it, fresh] = sepms_.emplace(key(f), sepms_.size());
    return {it->second, fresh};
}

std::optional<std::size_t> SubgameStore::find(const SubgameMask& m) const
{
    auto it = subgames_.find(m.bits());
    if (it == subgames_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> SubgameStore::find(const EnergyFunction& f) const
{
    auto it = sepms_.find(key(f));
    if (it == sepms_.end()) return std::nullopt;
    return it->second;
}

std::vector<ArcId> incompatible_arcs(const Arena& a, const EnergyFunction& f, VertexId u)
{
    std::vector<ArcId> out;
    for (ArcId e = a.out_begin(u); e < a.out_end(u); ++e) {
        if (!is_compatible(a, f, e)) out.push_back(e);
    }
    return out;
}

namespace {

class Enumerator
{
public:
    Enumerator(EnumerationResult& res, const EnumerationObserver* obs) : res_(res), obs_(obs) {}

    void run()
    {
        const Arena& root = res_.reweighted;
        SubgameMask full = SubgameMask::full(root);
        EnergyFunction f = least_sepm(root, {.cap = res_.cap});
        ++res_.sepm_computations;
        if (!f.all_finite())
            throw std::invalid_argument("arena is not " + res_.nu.str() +
                                        "-valued: Player 0 does not win everywhere after reweighting");
        store_.insert(full);
        std::size_t sepm = record_sepm(f);
        std::size_t id = record_subgame(full, sepm, std::nullopt);
        visit(id, root, f);
    }

private:
    struct Child
    {
        std::size_t id;
        EnergyFunction sepm;
    };

    void visit(std::size_t node, const Arena& sub, const EnergyFunction& f)
    {
        const Arena& root = res_.reweighted;
        std::vector<Child> stack;

        for (VertexId u = 0; u < sub.num_vertices(); ++u) {
            if (sub.owner(u) != Player::Zero) continue;
            std::vector<ArcId> bad = incompatible_arcs(sub, f, u);
            if (bad.empty()) continue;

            std::vector<ArcId> keep;
            for (ArcId e : bad) keep.push_back(*root.find_arc(u, sub.arc(e).dst));
            SubgameMask mask = res_.subgames.nodes[node].mask;
            mask.restrict_vertex(root, u, keep);

            if (auto seen = store_.find(mask)) {
                auto& parents = res_.subgames.nodes[*seen].parent_ids;
                if (std::find(parents.begin(), parents.end(), node) == parents.end()) parents.push_back(node);
                continue;
            }

            EnergyFunction child = least_sepm(apply_mask(root, mask), {.seed = &f, .cap = res_.cap});
            ++res_.sepm_computations;
            if (!child.all_finite()) {
                ++res_.pruned_children;
                continue;
            }
            store_.insert(mask);
            std::size_t sepm = record_sepm(child);
            std::size_t id = record_subgame(std::move(mask), sepm, node);
            res_.edges.push_back({node, id});
            stack.push_back({id, std::move(child)});
        }

        while (!stack.empty()) {
            Child c = std::move(stack.back());
            stack.pop_back();
            Arena child_arena = apply_mask(root, res_.subgames.nodes[c.id].mask);
            visit(c.id, child_arena, c.sepm);
        }
    }

    std::size_t record_sepm(const EnergyFunction& f)
    {
        auto [id, fresh] = store_.insert(f);
        if (fresh) {
            res_.energy.elements.push_back(f);
            if (obs_ != nullptr && obs_->on_sepm) obs_->on_sepm(id, f);
        }
        return id;
    }

    std::size_t record_subgame(SubgameMask mask, std::size_t sepm, std::optional<std::size_t> parent)
    {
        BasicSubgame node;
        node.id = res_.subgames.nodes.size();
        for (ArcId e = 0; e < mask.size(); ++e) {
            if (!mask.retains(e)) node.removed_arcs.push_back(e);
        }
        node.mask = std::move(mask);
        node.sepm_id = sepm;
        node.parent = parent;
        if (parent) node.parent_ids.push_back(*parent);
        res_.subgames.nodes.push_back(node);
        if (obs_ != nullptr && obs_->on_subgame) obs_->on_subgame(res_.subgames.nodes.back());
        return node.id;
    }

    EnumerationResult& res_;
    const EnumerationObserver* obs_;
    SubgameStore store_;
};

// Odometer over per-vertex choice lists; the last Player-0 vertex varies
// fastest, giving lexicographic order.
template <typename Fn>
void for_each_choice(const Arena& a, const std::vector<std::vector<ArcId>>& options, Fn&& fn)
{
    std::vector<VertexId> p0;
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) == Player::Zero) {
            if (options[u].empty()) return;
            p0.push_back(u);
        }
    }
    std::vector<std::size_t> digit(p0.size(), 0);
    PositionalStrategy s(a.num_vertices());
    for (;;) {
        for (std::size_t i = 0; i < p0.size(); ++i) s.set(p0[i], a.arc(options[p0[i]][digit[i]]).dst);
        if (!fn(s)) return;
        std::size_t i = p0.size();
        while (i > 0) {
            --i;
            if (++digit[i] < options[p0[i]].size()) break;
            digit[i] = 0;
            if (i == 0) return;
        }
        if (p0.empty()) return;
    }
}

std::uint64_t product(const Arena& a, const std::vector<std::vector<ArcId>>& options)
{
    std::uint64_t total = 1;
    for (VertexId u = 0; u < a.num_vertices(); ++u) {
        if (a.owner(u) != Player::Zero) continue;
        if (__builtin_mul_overflow(total, options[u].size(), &total)) return std::numeric_limits<std::uint64_t>::max();
    }
    return total;
}

} // namespace

EnumerationResult enumerate(const Arena& a, const Rational& nu, const EnumerationObserver* observer)
{
    EnumerationResult res;
    res.nu = nu;
    res.reweighted = reweight(a, nu);
    res.cap = energy_cap(res.reweighted);
    Enumerator(res, observer).run();
    return res;
}

std::vector<DeltaBlock> decompose(const Arena& a, const Rational& nu, const EnergyLattice& x,
                                  const DecomposeOptions& opts)
{
    const Arena rw = reweight(a, nu);
    const Level cap = energy_cap(rw);
    const EnergyFunction least = least_sepm(rw, {.cap = cap});

    std::vector<DeltaBlock> out;
    for (std::size_t id = 0; id < x.elements.size(); ++id) {
        const EnergyFunction& f = x.elements[id];
        const bool is_least = f == least;

        // Every member of Delta(f) picks an arc that is tight for f at each
        // Player-0 vertex; for the least SEPM every compatible arc is tight.
        std::vector<std::vector<ArcId>> options(rw.num_vertices());
        for (VertexId u = 0; u < rw.num_vertices(); ++u) {
            if (rw.owner(u) != Player::Zero) continue;
            for (ArcId e = rw.out_begin(u); e < rw.out_end(u); ++e) {
                const Arc& arc = rw.arc(e);
                EnergyValue need = ominus(f[arc.dst], arc.weight, f.cap());
                if (is_least ? f[u] >= need : f[u] == need) options[u].push_back(e);
            }
        }

        DeltaBlock block;
        block.sepm_id = id;
        if (is_least) {
            block.count = product(rw, options);
            for_each_choice(rw, options, [&](const PositionalStrategy& s) {
                if (block.strategies.size() >= opts.max_listed) return false;
                block.strategies.push_back(s);
                return true;
            });
        } else {
            std::uint64_t candidates = product(rw, options);
            if (candidates > opts.max_candidates)
                throw std::length_error("Delta decomposition: " + std::to_string(candidates) +
                                        " candidate strategies exceed the guard");
            for_each_choice(rw, options, [&](const PositionalStrategy& s) {
                if (delta_membership(rw, f, s)) {
                    ++block.count;
                    if (block.strategies.size() < opts.max_listed) block.strategies.push_back(s);
                }
                return true;
            });
        }
        out.push_back(std::move(block));
    }
    return out;
}

} // namespace mpg
