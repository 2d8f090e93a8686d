#include "wreathstab/class_functions.hpp"

#include <stdexcept>

namespace wreathstab {

ClassFunction::ClassFunction(std::shared_ptr<const ClassTable> table, std::vector<BigRat> values)
    : table_(std::move(table)), values_(std::move(values)) {
    if (values_.size() != table_->classes.size())
        throw std::invalid_argument("ClassFunction: one value per class required");
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const ClassTable> table) {
    std::vector<BigRat> values(table->classes.size(), 1);
    return ClassFunction(std::move(table), std::move(values));
}

ClassFunction ClassFunction::regular(std::shared_ptr<const ClassTable> table) {
    std::vector<BigRat> values(table->classes.size(), 0);
    values[table->identity_index()] = BigRat(table->group_order);
    return ClassFunction(std::move(table), std::move(values));
}

const BigRat& ClassFunction::value_at(const TypeMatrix& type) const {
    return values_[table_->index_of(type)];
}

const BigRat& ClassFunction::at_identity() const { return values_[table_->identity_index()]; }

bool ClassFunction::integer_valued() const {
    for (const auto& v : values_)
        if (!is_integer(v)) return false;
    return true;
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
    if (k() != rhs.k() || n() != rhs.n())
        throw std::invalid_argument("ClassFunction: ambient mismatch");
    std::vector<BigRat> values(values_);
    for (size_t i = 0; i < values.size(); ++i) values[i] += rhs.values_[i];
    return ClassFunction(table_, std::move(values));
}

ClassFunction ClassFunction::operator-(const ClassFunction& rhs) const {
    if (k() != rhs.k() || n() != rhs.n())
        throw std::invalid_argument("ClassFunction: ambient mismatch");
    std::vector<BigRat> values(values_);
    for (size_t i = 0; i < values.size(); ++i) values[i] -= rhs.values_[i];
    return ClassFunction(table_, std::move(values));
}

ClassFunction ClassFunction::scaled(const BigRat& c) const {
    std::vector<BigRat> values(values_);
    for (auto& v : values) v *= c;
    return ClassFunction(table_, std::move(values));
}

BigRat inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.k() != g.k() || f.n() != g.n())
        throw std::invalid_argument("inner_product: ambient mismatch");
    BigRat sum = 0;
    const ClassTable& table = f.table();
    for (size_t c = 0; c < table.classes.size(); ++c)
        sum += BigRat(table.classes[c].size) * f.value(static_cast<int>(c)) *
               g.value(static_cast<int>(c));
    return sum / BigRat(table.group_order);
}

ClassFunction induce_with_trivial(const ClassFunction& f, int n, long long max_order) {
    int k = f.k();
    int d = f.n();
    if (n < d) throw std::invalid_argument("induce_with_trivial: need n >= d");
    auto big_table = class_table(k, n, max_order);
    WreathGroup group(k, n, max_order);
    BigRat sub_order = BigRat(wreath_group_order(k, d) * wreath_group_order(k, n - d));

    std::vector<BigRat> values;
    values.reserve(big_table->classes.size());
    for (const auto& cls : big_table->classes) {
        const WreathElement& g = cls.representative;
        BigRat sum = 0;
        for (long long i = 0; i < group.order(); ++i) {
            WreathElement x = group.element(i);
            WreathElement conj = multiply(multiply(inverse(x), g), x);
            // membership in (S_k wr S_d) x (S_k wr S_{n-d}): pi preserves the
            // first d slots
            bool in_sub = true;
            for (int s = 0; s < d; ++s)
                if (conj.pi(s) >= d) {
                    in_sub = false;
                    break;
                }
            if (!in_sub) continue;
            // value of f boxtimes trivial at (first block, second block)
            WreathElement first;
            first.k = k;
            first.alpha.assign(conj.alpha.begin(), conj.alpha.begin() + d);
            std::vector<int> img(d);
            for (int s = 0; s < d; ++s) img[s] = conj.pi(s);
            first.pi = Permutation(img);
            sum += f.value_at(type_of(first));
        }
        values.push_back(sum / sub_order);
    }
    return ClassFunction(big_table, std::move(values));
}

}  // namespace wreathstab
