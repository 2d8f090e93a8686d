#include "wreathstab/wreath_group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace wreathstab {

WreathElement wreath_identity(int k, int n) {
    WreathElement e;
    e.k = k;
    e.alpha.assign(n, Permutation::identity(k));
    e.pi = Permutation::identity(n);
    return e;
}

WreathElement multiply(const WreathElement& x, const WreathElement& y) {
    if (x.k != y.k || x.n() != y.n())
        throw std::invalid_argument("multiply: ambient wreath products differ");
    WreathElement out;
    out.k = x.k;
    out.alpha.resize(x.n());
    Permutation pi_inv = x.pi.inverse();
    for (int i = 0; i < x.n(); ++i) out.alpha[i] = x.alpha[i] * y.alpha[pi_inv(i)];
    out.pi = x.pi * y.pi;
    return out;
}

WreathElement inverse(const WreathElement& x) {
    WreathElement out;
    out.k = x.k;
    out.alpha.resize(x.n());
    for (int i = 0; i < x.n(); ++i) out.alpha[i] = x.alpha[x.pi(i)].inverse();
    out.pi = x.pi.inverse();
    return out;
}

std::vector<std::pair<int, Permutation>> cycle_products(const WreathElement& x) {
    std::vector<std::pair<int, Permutation>> out;
    Permutation pi_inv = x.pi.inverse();
    for (const auto& cycle : x.pi.cycles()) {
        int leader = cycle[0];
        Permutation g = x.alpha[leader];
        int j = leader;
        for (size_t step = 1; step < cycle.size(); ++step) {
            j = pi_inv(j);
            g = g * x.alpha[j];
        }
        out.emplace_back(static_cast<int>(cycle.size()), g);
    }
    return out;
}

int TypeMatrix::count_of(const Partition& g_class, int length) const {
    for (const auto& e : entries)
        if (e.g_class == g_class && e.length == length) return e.count;
    return 0;
}

std::string TypeMatrix::to_string() const {
    if (entries.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += '+';
        const auto& parts = entries[i].g_class.parts();
        for (size_t j = 0; j < parts.size(); ++j) {
            if (j) s += '.';
            s += std::to_string(parts[j]);
        }
        s += '@' + std::to_string(entries[i].length) + 'x' + std::to_string(entries[i].count);
    }
    return s;
}

std::string TypeMatrix::to_json() const {
    std::string s = "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += "{\"gClass\":[";
        const auto& parts = entries[i].g_class.parts();
        for (size_t j = 0; j < parts.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(parts[j]);
        }
        s += "],\"cycleLength\":" + std::to_string(entries[i].length) +
             ",\"count\":" + std::to_string(entries[i].count) + '}';
    }
    s += ']';
    return s;
}

TypeMatrix type_of(const WreathElement& x) {
    std::map<std::pair<Partition, int>, int> counts;
    for (const auto& [len, g] : cycle_products(x)) ++counts[{g.cycle_type(), len}];
    TypeMatrix t;
    t.k = x.k;
    t.n = x.n();
    for (const auto& [key, count] : counts) t.entries.push_back({key.first, key.second, count});
    return t;
}

TypeMatrix identity_type(int k, int n) {
    return type_of(wreath_identity(k, n));
}

WreathElement element_with_type(const TypeMatrix& t) {
    int n = t.n;
    int total = 0;
    for (const auto& e : t.entries) total += e.length * e.count;
    if (total != n) throw std::invalid_argument("element_with_type: entries do not sum to n");

    std::vector<int> pi_img(n);
    WreathElement out;
    out.k = t.k;
    out.alpha.assign(n, Permutation::identity(t.k));
    int next = 0;
    for (const auto& e : t.entries) {
        // a representative of the S_k class: one cycle per part, consecutive
        std::vector<int> g_img(t.k);
        for (int i = 0; i < t.k; ++i) g_img[i] = i;
        int base = 0;
        for (int part : e.g_class.parts()) {
            for (int i = 0; i < part; ++i) g_img[base + i] = base + (i + 1) % part;
            base += part;
        }
        Permutation g(g_img);
        for (int copy = 0; copy < e.count; ++copy) {
            // an m-cycle on slots next..next+m-1 carrying g at its leader
            for (int i = 0; i < e.length; ++i)
                pi_img[next + i] = next + (i + 1) % e.length;
            out.alpha[next] = g;
            next += e.length;
        }
    }
    out.pi = Permutation(pi_img);
    return out;
}

namespace {

// centralizer order in S_k of the class with the given cycle type:
// prod m^(count of parts m) * (count of parts m)!
BigInt sk_centralizer(const Partition& cycle_type) {
    BigInt z = 1;
    const auto& parts = cycle_type.parts();
    int run = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        z *= parts[i];
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
            ++run;
        } else {
            z *= factorial(run);
            run = 1;
        }
    }
    return z;
}

}  // namespace

BigInt centralizer_order(const TypeMatrix& t) {
    BigInt z = 1;
    for (const auto& e : t.entries) {
        BigInt base = BigInt(e.length) * sk_centralizer(e.g_class);
        BigInt pw = 1;
        for (int i = 0; i < e.count; ++i) pw *= base;
        z *= factorial(e.count) * pw;
    }
    return z;
}

BigInt wreath_group_order(int k, int n) {
    BigInt order = factorial(n);
    BigInt kf = factorial(k);
    for (int i = 0; i < n; ++i) order *= kf;
    return order;
}

std::vector<Partition> sk_class_list(int k) {
    auto list = partitions_of(k);
    std::reverse(list.begin(), list.end());  // identity class (1^k) first
    return list;
}

WreathGroup::WreathGroup(int k, int n, long long max_order) : k_(k), n_(n) {
    if (k < 1 || n < 0) throw std::invalid_argument("WreathGroup: need k >= 1, n >= 0");
    BigInt order = wreath_group_order(k, n);
    if (order > max_order)
        throw CapExceeded("group order " + order.str() + " exceeds cap " +
                          std::to_string(max_order));
    order_ = static_cast<long long>(order);
    sk_ = all_permutations(k);
}

WreathElement WreathGroup::element(long long index) const {
    WreathElement e;
    e.k = k_;
    e.alpha.resize(n_);
    long long kf = static_cast<long long>(sk_.size());
    for (int i = 0; i < n_; ++i) {
        e.alpha[i] = sk_[index % kf];
        index /= kf;
    }
    // remaining index selects pi in lexicographic rank
    std::vector<int> pool(n_);
    for (int i = 0; i < n_; ++i) pool[i] = i;
    std::vector<int> img(n_);
    for (int i = n_; i >= 1; --i) {
        long long f = 1;
        for (int j = 2; j < i; ++j) f *= j;
        long long pick = index / f;
        index %= f;
        img[n_ - i] = pool[pick];
        pool.erase(pool.begin() + pick);
    }
    e.pi = Permutation(img);
    return e;
}

int ClassTable::index_of(const TypeMatrix& t) const {
    auto it = index_by_type.find(t);
    if (it == index_by_type.end()) throw std::invalid_argument("ClassTable: unknown type");
    return it->second;
}

int ClassTable::identity_index() const { return index_of(identity_type(k, n)); }

ClassTable conjugacy_classes(int k, int n, long long max_order) {
    WreathGroup group(k, n, max_order);
    std::map<TypeMatrix, std::pair<BigInt, long long>> buckets;  // type -> (size, first index)
    for (long long i = 0; i < group.order(); ++i) {
        TypeMatrix t = type_of(group.element(i));
        auto [it, fresh] = buckets.emplace(std::move(t), std::make_pair(BigInt(0), i));
        ++it->second.first;
        (void)fresh;
    }
    ClassTable table;
    table.k = k;
    table.n = n;
    table.group_order = wreath_group_order(k, n);
    for (const auto& [type, data] : buckets) {
        table.index_by_type[type] = static_cast<int>(table.classes.size());
        table.classes.push_back({type, data.first, group.element(data.second)});
    }
    return table;
}

std::shared_ptr<const ClassTable> class_table(int k, int n, long long max_order) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const ClassTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({k, n}); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<const ClassTable>(conjugacy_classes(k, n, max_order));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(k, n), std::move(table));
    (void)inserted;
    return it->second;
}

BigInt class_count_formula(int s, int n) {
    if (s < 1 || n < 0) throw std::invalid_argument("class_count_formula: need s >= 1, n >= 0");
    // f(j, m) = sum over compositions of m into j parts of prod p(part)
    std::vector<BigInt> row(n + 1, 0);
    for (int m = 0; m <= n; ++m) row[m] = partition_count(m);
    for (int j = 2; j <= s; ++j) {
        std::vector<BigInt> next(n + 1, 0);
        for (int m = 0; m <= n; ++m)
            for (int last = 0; last <= m; ++last) next[m] += row[m - last] * partition_count(last);
        row = std::move(next);
    }
    return row[n];
}

std::string class_table_to_csv(const ClassTable& table) {
    std::string s = "type,size,centralizer\n";
    for (const auto& c : table.classes)
        s += c.type.to_string() + ',' + c.size.str() + ',' + centralizer_order(c.type).str() + '\n';
    return s;
}

}  // namespace wreathstab
