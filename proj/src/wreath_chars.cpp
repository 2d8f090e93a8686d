#include "wreathstab/wreath_chars.hpp"

#include <mutex>
#include <stdexcept>

#include "wreathstab/combinatorics.hpp"
#include "wreathstab/tableaux.hpp"

namespace wreathstab {

std::vector<Partition> sk_irrep_list(int k) { return partitions_of(k); }

void validate_label(int k, int n, const Multipartition& label) {
    size_t expected = partitions_of(k).size();
    if (label.components.size() != expected)
        throw std::invalid_argument("label needs one component per irreducible of S_" +
                                    std::to_string(k));
    if (label.total() != n)
        throw std::invalid_argument("label total " + std::to_string(label.total()) +
                                    " does not equal n = " + std::to_string(n));
}

namespace {

void labels_rec(const std::vector<std::vector<std::vector<Partition>>>& by_size, size_t comp,
                int remaining, std::vector<Partition>& acc, std::vector<Multipartition>& out) {
    if (comp + 1 == by_size.size()) {
        for (const auto& p : by_size[comp][remaining]) {
            acc.push_back(p);
            out.push_back(Multipartition(acc));
            acc.pop_back();
        }
        return;
    }
    for (int size = remaining; size >= 0; --size) {
        for (const auto& p : by_size[comp][size]) {
            acc.push_back(p);
            labels_rec(by_size, comp + 1, remaining - size, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<Multipartition> all_irrep_labels(int k, int n) {
    size_t comps = partitions_of(k).size();
    std::vector<std::vector<Partition>> partitions_by_size(n + 1);
    for (int s = 0; s <= n; ++s) partitions_by_size[s] = partitions_of(s);
    std::vector<std::vector<std::vector<Partition>>> by_size(comps, partitions_by_size);
    std::vector<Multipartition> out;
    std::vector<Partition> acc;
    labels_rec(by_size, 0, n, acc, out);
    return out;
}

BigInt irrep_dimension(int k, const Multipartition& label) {
    auto irreps = sk_irrep_list(k);
    validate_label(k, label.total(), label);
    std::vector<int> sizes;
    BigInt dim = 1;
    for (size_t i = 0; i < irreps.size(); ++i) {
        int ni = label.components[i].sum();
        sizes.push_back(ni);
        BigInt base_dim = irreps[i].standard_tableaux_count();
        for (int j = 0; j < ni; ++j) dim *= base_dim;
        dim *= label.components[i].standard_tableaux_count();
    }
    return dim * multinomial(label.total(), sizes);
}

namespace {

// Explicit model of the induced module for one label: representation
// matrices of the base irreducibles on each tensor slot, plus the
// symmetric-group representations of the component shapes.
class IrrepEvaluator {
public:
    IrrepEvaluator(int k, int n, const Multipartition& label) : k_(k), n_(n) {
        auto irreps = sk_irrep_list(k);
        size_t comps = irreps.size();
        block_start_.resize(comps);
        block_size_.resize(comps);
        int pos = 0;
        for (size_t i = 0; i < comps; ++i) {
            block_start_[i] = pos;
            block_size_[i] = label.components[i].sum();
            pos += block_size_[i];
        }

        // base-group matrices for each slot's irreducible, all k! elements
        std::vector<std::map<Permutation, IntMatrix>> rep_by_comp(comps);
        auto sk = all_permutations(k);
        for (size_t i = 0; i < comps; ++i) {
            if (block_size_[i] == 0) continue;
            auto gens = natural_rep_generators(irreps[i]);
            int dim = static_cast<int>(irreps[i].standard_tableaux_count());
            for (const auto& p : sk) rep_by_comp[i][p] = natural_rep_matrix(gens, dim, p);
        }
        for (size_t i = 0; i < comps; ++i) {
            for (int s = 0; s < block_size_[i]; ++s) {
                slot_comp_.push_back(static_cast<int>(i));
                slot_dim_.push_back(static_cast<int>(irreps[i].standard_tableaux_count()));
            }
            if (block_size_[i] > 0) {
                factor_gens_.push_back(block_size_[i] >= 2
                                           ? natural_rep_generators(label.components[i])
                                           : std::vector<IntMatrix>{});
                factor_dim_.push_back(
                    static_cast<int>(label.components[i].standard_tableaux_count()));
                factor_block_.push_back(static_cast<int>(i));
            }
        }
        slot_rep_ = std::move(rep_by_comp);

        tensor_dim_ = 1;
        for (int d : slot_dim_) tensor_dim_ *= d;

        inertia_order_ = 1;
        BigInt kf = factorial(k);
        for (int i = 0; i < n; ++i) inertia_order_ *= kf;
        for (size_t i = 0; i < comps; ++i) inertia_order_ *= factorial(block_size_[i]);
    }

    bool in_inertia(const WreathElement& y) const {
        for (size_t i = 0; i < block_start_.size(); ++i) {
            int lo = block_start_[i], hi = lo + block_size_[i];
            for (int s = lo; s < hi; ++s) {
                int image = y.pi(s);
                if (image < lo || image >= hi) return false;
            }
        }
        return true;
    }

    // Trace of the twisted tensor action on the inertia group: the full
    // operator matrix is assembled slot by slot and traced.
    long long twisted_tensor_trace(const WreathElement& y) const {
        if (tensor_dim_ == 0) return 0;
        Permutation pi_inv = y.pi.inverse();
        IntMatrix op(tensor_dim_, tensor_dim_);
        std::vector<int> out_idx(n_, 0), in_idx(n_, 0);
        for (int r = 0; r < tensor_dim_; ++r) {
            decode(r, out_idx);
            for (int c = 0; c < tensor_dim_; ++c) {
                decode(c, in_idx);
                long long v = 1;
                for (int s = 0; s < n_ && v != 0; ++s) {
                    const IntMatrix& m = slot_rep_[slot_comp_[s]].at(y.alpha[s]);
                    v *= m.at(out_idx[s], in_idx[pi_inv(s)]);
                }
                op.at(r, c) = v;
            }
        }
        return op.trace();
    }

    // Trace of the pullback of the product of symmetric-group irreducibles
    // along (alpha, pi) -> pi; pi must preserve the blocks.
    long long factor_trace(const WreathElement& y) const {
        long long t = 1;
        for (size_t f = 0; f < factor_block_.size(); ++f) {
            int i = factor_block_[f];
            int lo = block_start_[i], size = block_size_[i];
            std::vector<int> img(size);
            for (int s = 0; s < size; ++s) img[s] = y.pi(lo + s) - lo;
            t *= natural_rep_matrix(factor_gens_[f], factor_dim_[f], Permutation(img)).trace();
        }
        return t;
    }

    BigInt inertia_character(const WreathElement& y) const {
        return BigInt(twisted_tensor_trace(y)) * BigInt(factor_trace(y));
    }

    const BigInt& inertia_order() const { return inertia_order_; }

private:
    void decode(int index, std::vector<int>& digits) const {
        for (int s = n_ - 1; s >= 0; --s) {
            digits[s] = index % slot_dim_[s];
            index /= slot_dim_[s];
        }
    }

    int k_, n_;
    std::vector<int> block_start_, block_size_;
    std::vector<int> slot_comp_, slot_dim_;
    std::vector<std::map<Permutation, IntMatrix>> slot_rep_;
    std::vector<std::vector<IntMatrix>> factor_gens_;
    std::vector<int> factor_dim_;
    std::vector<int> factor_block_;
    int tensor_dim_ = 1;
    BigInt inertia_order_;
};

}  // namespace

ClassFunction irreducible_character(int k, int n, const Multipartition& label,
                                    long long max_order) {
    validate_label(k, n, label);
    auto table = class_table(k, n, max_order);
    WreathGroup group(k, n, max_order);
    IrrepEvaluator eval(k, n, label);

    std::vector<BigRat> values;
    values.reserve(table->classes.size());
    for (const auto& cls : table->classes) {
        const WreathElement& g = cls.representative;
        BigInt acc = 0;
        for (long long i = 0; i < group.order(); ++i) {
            WreathElement x = group.element(i);
            WreathElement y = multiply(multiply(inverse(x), g), x);
            if (eval.in_inertia(y)) acc += eval.inertia_character(y);
        }
        BigRat value = BigRat(acc) / BigRat(eval.inertia_order());
        if (!is_integer(value))
            throw std::logic_error("irreducible_character: non-integral value");
        values.push_back(value);
    }
    return ClassFunction(table, std::move(values));
}

std::shared_ptr<const CharacterTable> character_table(int k, int n, long long max_order) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const CharacterTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({k, n}); it != cache.end()) return it->second;
    }
    auto out = std::make_shared<CharacterTable>();
    out->classes = class_table(k, n, max_order);
    out->labels = all_irrep_labels(k, n);
    for (const auto& label : out->labels)
        out->characters.push_back(irreducible_character(k, n, label, max_order));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(k, n),
                                        std::shared_ptr<const CharacterTable>(std::move(out)));
    (void)inserted;
    return it->second;
}

std::map<Multipartition, BigInt> decompose(const ClassFunction& f, long long max_order) {
    auto table = character_table(f.k(), f.n(), max_order);
    std::map<Multipartition, BigInt> out;
    BigInt dim_sum = 0;
    for (size_t i = 0; i < table->labels.size(); ++i) {
        BigRat mult = inner_product(f, table->characters[i]);
        if (!is_integer(mult) || mult < 0)
            throw std::domain_error("decompose: input is not a character (multiplicity " +
                                    mult.str() + " for " + table->labels[i].to_string() + ")");
        BigInt m = numerator(mult);
        if (m != 0) out[table->labels[i]] = m;
        dim_sum += m * irrep_dimension(f.k(), table->labels[i]);
    }
    if (BigRat(dim_sum) != f.at_identity())
        throw std::domain_error("decompose: multiplicities do not add up to the degree");
    return out;
}

std::vector<Multipartition> pieri_labels(int k, int d, const Multipartition& delta, int n) {
    validate_label(k, d, delta);
    if (n < d) throw std::invalid_argument("pieri_labels: need n >= d");
    std::vector<Multipartition> out;
    for (const auto& top : horizontal_strip_additions(delta.components[0], n - d)) {
        Multipartition label = delta;
        label.components[0] = top;
        out.push_back(std::move(label));
    }
    return out;
}

std::string character_table_to_csv(const CharacterTable& table) {
    std::string s = "label,dimension";
    for (const auto& cls : table.classes->classes) s += ',' + cls.type.to_string();
    s += '\n';
    int k = table.classes->k;
    for (size_t i = 0; i < table.labels.size(); ++i) {
        s += '"' + table.labels[i].to_string() + "\"," + irrep_dimension(k, table.labels[i]).str();
        for (const auto& v : table.characters[i].values()) s += ',' + v.str();
        s += '\n';
    }
    return s;
}

}  // namespace wreathstab
