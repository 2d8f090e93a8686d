#include "wreathstab/tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wreathstab {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols != rhs.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            long long a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

long long IntMatrix::trace() const {
    long long t = 0;
    for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
}

namespace {

void tableaux_rec(const Partition& shape, int next, int m, std::vector<int>& fill,
                  Tableau& t, std::vector<Tableau>& out) {
    if (next > m) {
        out.push_back(t);
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int c = fill[r];
        if (c >= shape.part(r)) continue;
        if (r > 0 && fill[r - 1] <= c) continue;  // column must grow downward
        t[r].push_back(next);
        ++fill[r];
        tableaux_rec(shape, next + 1, m, fill, t, out);
        --fill[r];
        t[r].pop_back();
    }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    Tableau t(shape.length());
    std::vector<int> fill(shape.length(), 0);
    tableaux_rec(shape, 1, shape.sum(), fill, t, out);
    return out;
}

namespace {

// First-column hook lengths (beta numbers) with a fixed padding length.
std::vector<int> beta_numbers(const Partition& shape, int len) {
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = shape.part(i) + (len - 1 - i);
    return beta;
}

using MnKey = std::pair<std::vector<int>, size_t>;

BigInt mn_rec(std::vector<int> beta, const std::vector<int>& parts, size_t next,
              std::map<MnKey, BigInt>& memo) {
    if (next == parts.size()) return 1;
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    MnKey key{beta, next};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int m = parts[next];
    BigInt total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int target = b - m;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (int other : beta) {
            if (other == target) occupied = true;
            if (other > target && other < b) ++crossings;
        }
        if (occupied) continue;
        std::vector<int> next_beta = beta;
        next_beta[i] = target;
        BigInt sub = mn_rec(std::move(next_beta), parts, next + 1, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

BigInt sn_character(const Partition& shape, const Partition& cycle_type) {
    if (shape.sum() != cycle_type.sum())
        throw std::invalid_argument("sn_character: |shape| != |cycle type|");
    if (shape.sum() == 0) return 1;
    std::map<MnKey, BigInt> memo;
    return mn_rec(beta_numbers(shape, shape.length()), cycle_type.parts(), 0, memo);
}

namespace {

// A tabloid is a tableau up to reordering within rows; canonical form has
// each row sorted.
using TabloidKey = std::vector<std::vector<int>>;

TabloidKey tabloid_of(const Tableau& t) {
    TabloidKey k = t;
    for (auto& row : k) std::sort(row.begin(), row.end());
    return k;
}

// Enumerates the subsets of `pool` of the given size, in index order.
void for_each_subset(const std::vector<int>& pool, int size,
                     const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
    std::vector<int> chosen, rest;
    std::function<void(size_t)> walk = [&](size_t i) {
        int missing = size - static_cast<int>(chosen.size());
        if (missing == 0) {
            std::vector<int> tail = rest;
            tail.insert(tail.end(), pool.begin() + i, pool.end());
            visit(chosen, tail);
            return;
        }
        if (pool.size() - i < static_cast<size_t>(missing)) return;
        chosen.push_back(pool[i]);
        walk(i + 1);
        chosen.pop_back();
        rest.push_back(pool[i]);
        walk(i + 1);
        rest.pop_back();
    };
    walk(0);
}

void tabloids_rec(const Partition& shape, int row, const std::vector<int>& remaining,
                  TabloidKey& acc, std::vector<TabloidKey>& out) {
    if (row == shape.length()) {
        out.push_back(acc);
        return;
    }
    for_each_subset(remaining, shape.part(row),
                    [&](const std::vector<int>& chosen, const std::vector<int>& rest) {
                        acc.push_back(chosen);
                        tabloids_rec(shape, row + 1, rest, acc, out);
                        acc.pop_back();
                    });
}

int perm_parity(const std::vector<int>& images) {
    std::vector<char> seen(images.size(), 0);
    int transpositions = 0;
    for (size_t s = 0; s < images.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        size_t i = s;
        do {
            seen[i] = 1;
            i = images[i];
            ++len;
        } while (i != s);
        transpositions += len - 1;
    }
    return transpositions % 2;
}

struct SpechtContext {
    Partition shape;
    std::vector<Tableau> basis_tableaux;
    std::vector<TabloidKey> tabloids;
    std::map<TabloidKey, int> tabloid_index;
    std::vector<int> col_len;

    explicit SpechtContext(const Partition& s) : shape(s) {
        basis_tableaux = standard_tableaux(shape);
        std::vector<int> entries(shape.sum());
        for (int i = 0; i < shape.sum(); ++i) entries[i] = i + 1;
        TabloidKey acc;
        tabloids_rec(shape, 0, entries, acc, tabloids);
        for (size_t i = 0; i < tabloids.size(); ++i) tabloid_index[tabloids[i]] = static_cast<int>(i);
        col_len.assign(shape.part(0), 0);
        for (int r = 0; r < shape.length(); ++r)
            for (int c = 0; c < shape.part(r); ++c) ++col_len[c];
    }

    // Coordinates of the polytabloid of t in the tabloid basis: the signed
    // sum over the column group of t.
    std::vector<long long> polytabloid(const Tableau& t) const {
        std::vector<long long> vec(tabloids.size(), 0);
        int ncols = shape.part(0);
        std::vector<std::vector<int>> col_perms(ncols);  // flattened, per-column image tables
        std::function<void(int, int)> walk = [&](int col, int sign) {
            if (col == ncols) {
                Tableau image(shape.length());
                for (int r = 0; r < shape.length(); ++r) image[r].resize(shape.part(r));
                for (int c = 0; c < ncols; ++c)
                    for (int r = 0; r < col_len[c]; ++r) image[col_perms[c][r]][c] = t[r][c];
                vec[tabloid_index.at(tabloid_of(image))] += sign;
                return;
            }
            std::vector<int> perm(col_len[col]);
            for (int i = 0; i < col_len[col]; ++i) perm[i] = i;
            do {
                col_perms[col] = perm;
                walk(col + 1, perm_parity(perm) == 0 ? sign : -sign);
            } while (std::next_permutation(perm.begin(), perm.end()));
        };
        walk(0, 1);
        return vec;
    }

    // Index of the tabloid obtained by applying a permutation of {1..m} to
    // every entry.
    int apply_to_tabloid(const Permutation& p, int idx) const {
        TabloidKey image = tabloids[idx];
        for (auto& row : image) {
            for (int& v : row) v = p(v - 1) + 1;
            std::sort(row.begin(), row.end());
        }
        return tabloid_index.at(image);
    }
};

}  // namespace

std::vector<IntMatrix> natural_rep_generators(const Partition& shape) {
    int m = shape.sum();
    if (m < 1) throw std::invalid_argument("natural_rep_generators: empty shape");
    SpechtContext ctx(shape);
    int f = static_cast<int>(ctx.basis_tableaux.size());
    int T = static_cast<int>(ctx.tabloids.size());
    int gens = m - 1;

    // Augmented system [B | s_1 B | ... | s_{m-1} B] over the rationals.
    std::vector<std::vector<BigRat>> aug(T, std::vector<BigRat>(f * (1 + gens), 0));
    for (int j = 0; j < f; ++j) {
        std::vector<long long> e = ctx.polytabloid(ctx.basis_tableaux[j]);
        for (int i = 0; i < T; ++i) aug[i][j] = e[i];
        for (int g = 0; g < gens; ++g) {
            Permutation s = Permutation::transposition(m, g, g + 1);
            for (int i = 0; i < T; ++i) {
                if (e[i] == 0) continue;
                aug[ctx.apply_to_tabloid(s, i)][f * (1 + g) + j] += e[i];
            }
        }
    }

    // Gaussian elimination on the first f columns.
    int width = f * (1 + gens);
    std::vector<int> pivot_row(f, -1);
    int row = 0;
    for (int col = 0; col < f && row < T; ++col) {
        int pr = -1;
        for (int i = row; i < T; ++i)
            if (aug[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr == -1) throw std::logic_error("natural_rep_generators: basis not independent");
        std::swap(aug[row], aug[pr]);
        BigRat inv = BigRat(1) / aug[row][col];
        for (int j = col; j < width; ++j) aug[row][j] *= inv;
        for (int i = 0; i < T; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            BigRat factor = aug[i][col];
            for (int j = col; j < width; ++j) aug[i][j] -= factor * aug[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (int i = row; i < T; ++i)
        for (int j = f; j < width; ++j)
            if (aug[i][j] != 0)
                throw std::logic_error("natural_rep_generators: image outside Specht span");

    std::vector<IntMatrix> out;
    for (int g = 0; g < gens; ++g) {
        IntMatrix mat(f, f);
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) {
                BigRat v = aug[pivot_row[i]][f * (1 + g) + j];
                if (!is_integer(v))
                    throw std::logic_error("natural_rep_generators: non-integral entry");
                mat.at(i, j) = static_cast<long long>(numerator(v));
            }
        out.push_back(std::move(mat));
    }
    return out;
}

IntMatrix natural_rep_matrix(const std::vector<IntMatrix>& generators, int dim,
                             const Permutation& p) {
    IntMatrix m = IntMatrix::identity(dim);
    for (int idx : adjacent_transposition_word(p)) m = m * generators[idx];
    return m;
}

}  // namespace wreathstab
