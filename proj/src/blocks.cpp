#include "mpsym/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mpsym/error.hpp"
#include "mpsym/symbols.hpp"
#include "mpsym/tau.hpp"

namespace mpsym {

int BlockPartition::class_of(int item) const {
    for (size_t c = 0; c < classes.size(); ++c)
        for (int i : classes[c])
            if (i == item) return static_cast<int>(c);
    return -1;
}

std::string BlockPartition::item_label(int item) const {
    return multipartition_str(items[static_cast<size_t>(item)]);
}

std::string BlockPartition::class_label(int cls) const {
    std::string out = "{";
    bool first = true;
    for (int i : classes[static_cast<size_t>(cls)]) {
        if (!first) out += ",";
        first = false;
        out += item_label(i);
    }
    return out + "}";
}

namespace {

// groups item indices by key, classes ordered by their minimal member
template <typename Key>
std::vector<std::vector<int>> fibers(const std::vector<Key>& keys) {
    std::map<Key, std::vector<int>> by_key;
    for (size_t i = 0; i < keys.size(); ++i)
        by_key[keys[i]].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> classes;
    classes.reserve(by_key.size());
    for (auto& kv : by_key) classes.push_back(std::move(kv.second));
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return classes;
}

}  // namespace

BlockPartition cm_blocks_regular(int l, long long n) {
    BlockPartition bp;
    bp.items = enumerate_multipartitions(l, n);
    bp.classes.reserve(bp.items.size());
    for (size_t i = 0; i < bp.items.size(); ++i)
        bp.classes.push_back({static_cast<int>(i)});
    return bp;
}

BlockPartition cm_blocks_l2(long long n, const Charge& m, int s) {
    if (m.size() != 2) fail("WrongLevel", "expected a weight with two components");
    BlockPartition bp;
    bp.items = enumerate_multipartitions(2, n);
    std::vector<std::vector<Rat>> keys;
    keys.reserve(bp.items.size());
    for (const Multipartition& mp : bp.items) keys.push_back(kappa(mp, m, s));
    bp.classes = fibers(keys);
    return bp;
}

BlockPartition cm_blocks_jclass(int l, long long n, const Charge& s,
                                const std::set<int>& J) {
    BlockPartition bp;
    bp.items = enumerate_multipartitions(l, n);
    std::vector<Partition> keys;
    keys.reserve(bp.items.size());
    for (const Multipartition& mp : bp.items)
        keys.push_back(j_heart(tau(s, transpose_multi(mp)), l, J));
    bp.classes = fibers(keys);
    return bp;
}

std::vector<Rat> afc_on_blocks(const BlockPartition& bp,
                               const std::function<Rat(const Multipartition&)>& f) {
    std::vector<Rat> out;
    out.reserve(bp.classes.size());
    for (const std::vector<int>& cls : bp.classes) {
        Rat v = f(bp.items[static_cast<size_t>(cls.front())]);
        for (int i : cls)
            if (f(bp.items[static_cast<size_t>(i)]) != v)
                fail("ConstancyViolation",
                     "value differs inside block " + bp.class_label(bp.class_of(i)));
        out.push_back(v);
    }
    return out;
}

namespace {

void check_divisor(int l, int e) {
    if (e < 1 || l < 1 || l % e != 0)
        fail("BadDivisor", "e must be a positive divisor of l");
}

}  // namespace

Multipartition rotate_components(const Multipartition& mp, int e) {
    int l = static_cast<int>(mp.size());
    check_divisor(l, e);
    int p = l / e;
    Multipartition out(mp.size());
    for (int i = 0; i < l; ++i) out[static_cast<size_t>(i)] = mp[static_cast<size_t>((i + p) % l)];
    return out;
}

int stabilizer_order(const Multipartition& mp, int e) {
    check_divisor(static_cast<int>(mp.size()), e);
    Multipartition cur = rotate_components(mp, e);
    int k = 1;
    while (cur != mp) {
        cur = rotate_components(cur, e);
        ++k;
    }
    return e / k;
}

bool is_stuttering(const Multipartition& mp, int e) { return stabilizer_order(mp, e) > 1; }

std::string GlenLabel::to_string() const {
    return multipartition_str(rep) + "#" + std::to_string(index);
}

std::vector<GlenLabel> irr_glen_labels(int l, int e, long long n) {
    check_divisor(l, e);
    std::vector<Multipartition> ground = enumerate_multipartitions(l, n);
    std::vector<GlenLabel> out;
    std::set<Multipartition> seen;
    for (const Multipartition& mp : ground) {
        if (seen.count(mp)) continue;
        Multipartition rep = mp;
        Multipartition cur = mp;
        int orbit = 0;
        do {
            seen.insert(cur);
            rep = std::min(rep, cur);
            cur = rotate_components(cur, e);
            ++orbit;
        } while (cur != mp);
        int stab = e / orbit;
        for (int j = 0; j < stab; ++j) out.push_back(GlenLabel{rep, j});
    }
    return out;
}

std::string GlenBlocks::class_label(int cls) const {
    std::string out = "{";
    bool first = true;
    for (int i : classes[static_cast<size_t>(cls)]) {
        if (!first) out += ",";
        first = false;
        out += items[static_cast<size_t>(i)].to_string();
    }
    return out + "}";
}

GlenBlocks glen_blocks(int l, int e, long long n, const BlockPartition& wblocks) {
    check_divisor(l, e);
    size_t ni = wblocks.items.size();
    std::map<Multipartition, int> index_of;
    for (size_t i = 0; i < ni; ++i) index_of[wblocks.items[i]] = static_cast<int>(i);

    std::vector<int> gidx(ni), blk(ni, -1);
    for (size_t i = 0; i < ni; ++i) {
        auto it = index_of.find(rotate_components(wblocks.items[i], e));
        if (it == index_of.end())
            fail("NotCeStable", "rotation leaves the ground set; blocks must cover all "
                                "multipartitions of n");
        gidx[i] = it->second;
    }
    for (size_t c = 0; c < wblocks.classes.size(); ++c)
        for (int i : wblocks.classes[c]) blk[static_cast<size_t>(i)] = static_cast<int>(c);
    for (size_t i = 0; i < ni; ++i)
        if (blk[i] == -1)
            fail("NotCeStable", "blocks do not cover the ground set");

    size_t nc = wblocks.classes.size();
    std::vector<int> bmap(nc, -1);
    for (size_t c = 0; c < nc; ++c) {
        for (int i : wblocks.classes[c]) {
            int target = blk[static_cast<size_t>(gidx[static_cast<size_t>(i)])];
            if (bmap[c] == -1) bmap[c] = target;
            if (bmap[c] != target)
                fail("NotCeStable", "rotation splits block " + wblocks.class_label(static_cast<int>(c)));
        }
    }
    std::vector<char> hit(nc, 0);
    for (size_t c = 0; c < nc; ++c) {
        if (hit[static_cast<size_t>(bmap[c])])
            fail("NotCeStable", "rotation merges distinct blocks");
        hit[static_cast<size_t>(bmap[c])] = 1;
    }

    // cycle decomposition of the induced block permutation
    std::vector<int> orbit_id(nc, -1);
    std::vector<std::vector<int>> worbits;
    for (size_t c = 0; c < nc; ++c) {
        if (orbit_id[c] != -1) continue;
        int oid = static_cast<int>(worbits.size());
        std::vector<int> members;
        int cur = static_cast<int>(c);
        while (orbit_id[static_cast<size_t>(cur)] == -1) {
            orbit_id[static_cast<size_t>(cur)] = oid;
            members.push_back(cur);
            cur = bmap[static_cast<size_t>(cur)];
        }
        std::sort(members.begin(), members.end());
        worbits.push_back(std::move(members));
    }

    GlenBlocks gb;
    gb.items = irr_glen_labels(l, e, n);
    gb.worbits = worbits;
    std::map<std::pair<Multipartition, int>, int> label_index;
    for (size_t i = 0; i < gb.items.size(); ++i)
        label_index[{gb.items[i].rep, gb.items[i].index}] = static_cast<int>(i);

    struct Pending {
        std::vector<int> members;
        char split;
        int worbit;
    };
    std::vector<Pending> pending;
    for (size_t o = 0; o < worbits.size(); ++o) {
        // multipartitions covered by this orbit of blocks
        std::set<Multipartition> covered;
        for (int c : worbits[o])
            for (int i : wblocks.classes[static_cast<size_t>(c)])
                covered.insert(wblocks.items[static_cast<size_t>(i)]);
        std::set<int> labels;
        for (const Multipartition& mp : covered) {
            Multipartition rep = mp;
            Multipartition cur = mp;
            do {
                rep = std::min(rep, cur);
                cur = rotate_components(cur, e);
            } while (cur != mp);
            int stab = stabilizer_order(mp, e);
            for (int j = 0; j < stab; ++j) labels.insert(label_index.at({rep, j}));
        }
        bool split = worbits[o].size() == 1 &&
                     wblocks.classes[static_cast<size_t>(worbits[o][0])].size() == 1 &&
                     labels.size() > 1;
        if (split) {
            for (int li : labels)
                pending.push_back(Pending{{li}, 1, static_cast<int>(o)});
        } else {
            pending.push_back(
                Pending{std::vector<int>(labels.begin(), labels.end()), 0, static_cast<int>(o)});
        }
    }
    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
        return a.members.front() < b.members.front();
    });
    for (Pending& p : pending) {
        gb.classes.push_back(std::move(p.members));
        gb.split.push_back(p.split);
        gb.worbit_of_class.push_back(p.worbit);
    }
    return gb;
}

FinitePoset glen_block_order(int l, int e, long long n,
                             const BlockPartition& wblocks,
                             const FinitePoset& worder) {
    if (static_cast<size_t>(worder.size()) != wblocks.classes.size())
        throw std::invalid_argument("order and block partition have different sizes");
    GlenBlocks gb = glen_blocks(l, e, n, wblocks);
    size_t nc = gb.classes.size();
    std::vector<std::string> labels;
    labels.reserve(nc);
    for (size_t c = 0; c < nc; ++c) labels.push_back(gb.class_label(static_cast<int>(c)));
    std::vector<std::vector<char>> rel(nc, std::vector<char>(nc, 0));
    for (size_t i = 0; i < nc; ++i)
        for (size_t j = 0; j < nc; ++j) {
            if (i == j) {
                rel[i][j] = 1;
                continue;
            }
            int oi = gb.worbit_of_class[i], oj = gb.worbit_of_class[j];
            if (oi == oj) continue;  // split siblings stay incomparable
            for (int c1 : gb.worbits[static_cast<size_t>(oi)]) {
                for (int c2 : gb.worbits[static_cast<size_t>(oj)])
                    if (worder.leq(c1, c2)) {
                        rel[i][j] = 1;
                        break;
                    }
                if (rel[i][j]) break;
            }
        }
    return poset_from_closed(std::move(labels), std::move(rel));
}

}  // namespace mpsym
