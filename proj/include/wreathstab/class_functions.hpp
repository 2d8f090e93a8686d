#pragma once

#include <memory>
#include <vector>

#include "wreathstab/numbers.hpp"
#include "wreathstab/wreath_group.hpp"

namespace wreathstab {

// An exact-rational class function on S_k wr S_n, total on all classes.
// Values are aligned with the class order of the shared table.
class ClassFunction {
public:
    ClassFunction(std::shared_ptr<const ClassTable> table, std::vector<BigRat> values);

    static ClassFunction trivial(std::shared_ptr<const ClassTable> table);
    static ClassFunction regular(std::shared_ptr<const ClassTable> table);

    int k() const { return table_->k; }
    int n() const { return table_->n; }
    const ClassTable& table() const { return *table_; }
    std::shared_ptr<const ClassTable> table_ptr() const { return table_; }

    const BigRat& value(int class_index) const { return values_[class_index]; }
    const BigRat& value_at(const TypeMatrix& type) const;
    const BigRat& at_identity() const;
    const std::vector<BigRat>& values() const { return values_; }

    bool integer_valued() const;

    ClassFunction operator+(const ClassFunction& rhs) const;
    ClassFunction operator-(const ClassFunction& rhs) const;
    ClassFunction scaled(const BigRat& c) const;

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.k() == b.k() && a.n() == b.n() && a.values_ == b.values_;
    }

private:
    std::shared_ptr<const ClassTable> table_;
    std::vector<BigRat> values_;
};

// (1/|G|) sum over classes of size * f * g. All values are rational, so no
// conjugation enters.
BigRat inner_product(const ClassFunction& f, const ClassFunction& g);

// Character of the representation induced from
// (S_k wr S_d) x (S_k wr S_{n-d}) with the second factor acting trivially,
// computed by the element-sum induction formula over the full group.
ClassFunction induce_with_trivial(const ClassFunction& f, int n,
                                  long long max_order = kDefaultMaxGroupOrder);

}  // namespace wreathstab
