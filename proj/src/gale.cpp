#include "pglcensus/gale.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "pglcensus/errors.hpp"

namespace pglcensus {

CoordMatrix CoordMatrix::zero(FieldPtr field, size_t rows, size_t cols) {
    CoordMatrix m;
    m.field = field;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(rows * cols, field->zero());
    return m;
}

bool CoordMatrix::has_zero_column() const {
    for (size_t c = 0; c < cols; ++c) {
        bool all_zero = true;
        for (size_t r = 0; r < rows && all_zero; ++r)
            all_zero = at(r, c).is_zero();
        if (all_zero) return true;
    }
    return false;
}

CoordMatrix orbit_point_set(const ResidueVector& gen, const PrimeModulus& p,
                            const std::vector<Rat>& base) {
    return multi_orbit_point_set(gen, p, {base});
}

CoordMatrix multi_orbit_point_set(const ResidueVector& gen, const PrimeModulus& p,
                                  const std::vector<std::vector<Rat>>& bases) {
    const size_t d = gen.size();
    const long pv = p.value();
    auto field = std::make_shared<const CyclotomicField>(static_cast<unsigned>(pv));
    CoordMatrix m = CoordMatrix::zero(field, d, bases.size() * static_cast<size_t>(pv));

    size_t col0 = 0;
    for (const std::vector<Rat>& base_in : bases) {
        std::vector<Rat> base = base_in;
        if (base.empty()) base.assign(d, Rat(1));
        if (base.size() != d)
            throw std::domain_error("orbit_point_set: base point dimension mismatch");
        // the orbit is a genuine p-point orbit only when the generator
        // separates at least two non-zero coordinates of the base
        std::set<long> exps;
        for (size_t i = 0; i < d; ++i)
            if (base[i] != 0) exps.insert(p.reduce(gen[i]));
        if (exps.size() < 2)
            throw std::domain_error("orbit_point_set: degenerate (trivial) orbit");

        for (long j = 1; j <= pv; ++j)
            for (size_t i = 0; i < d; ++i)
                m.at(i, col0 + static_cast<size_t>(j - 1)) =
                    field->zeta(j * p.reduce(gen[i])) * field->from_rational(base[i]);
        col0 += static_cast<size_t>(pv);
    }
    return m;
}

AssociationWitness identity_witness(const CoordMatrix& A) {
    AssociationWitness w;
    w.lambda.assign(A.cols, A.field->one());
    return w;
}

bool association_check(const CoordMatrix& A, const CoordMatrix& B,
                       const AssociationWitness& witness) {
    if (A.cols != B.cols)
        throw std::domain_error("association_check: point counts differ");
    if (A.rows + B.rows != A.cols)
        throw std::domain_error("association_check: dimensions do not complement (rows_A + rows_B != n)");
    if (A.field->order() != B.field->order())
        throw std::domain_error("association_check: cyclotomic orders differ");
    if (witness.lambda.size() != A.cols)
        throw std::domain_error("association_check: witness length mismatch");
    for (const CyclotomicNumber& x : witness.lambda)
        if (x.is_zero())
            throw std::domain_error("association_check: witness has a zero entry");

    for (size_t r = 0; r < A.rows; ++r)
        for (size_t s = 0; s < B.rows; ++s) {
            CyclotomicNumber acc = A.field->zero();
            for (size_t j = 0; j < A.cols; ++j)
                acc += A.at(r, j) * witness.lambda[j] * B.at(s, j);
            if (!acc.is_zero()) return false;
        }
    return true;
}

namespace {

// Reduced row echelon form over the cyclotomic field; returns pivot
// columns.  rows is a list of length-width vectors.
std::vector<size_t> rref(std::vector<std::vector<CyclotomicNumber>>& rows, size_t width) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < width && rank < rows.size(); ++col) {
        size_t pr = rank;
        while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        CyclotomicNumber inv = rows[rank][col].inverse();
        for (size_t j = col; j < width; ++j) rows[rank][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            CyclotomicNumber f = rows[r][col];
            for (size_t j = col; j < width; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank, {});
    return pivots;
}

}  // namespace

std::optional<AssociationWitness> find_association_lambda(const CoordMatrix& A,
                                                          const CoordMatrix& B) {
    if (A.cols != B.cols)
        throw std::domain_error("find_association_lambda: point counts differ");
    if (A.rows + B.rows != A.cols)
        throw std::domain_error("find_association_lambda: dimensions do not complement");
    if (A.field->order() != B.field->order())
        throw std::domain_error("find_association_lambda: cyclotomic orders differ");

    const size_t n = A.cols;
    const CyclotomicField& F = *A.field;

    std::vector<std::vector<CyclotomicNumber>> sys;
    sys.reserve(A.rows * B.rows);
    for (size_t r = 0; r < A.rows; ++r)
        for (size_t s = 0; s < B.rows; ++s) {
            std::vector<CyclotomicNumber> row;
            row.reserve(n);
            for (size_t j = 0; j < n; ++j)
                row.push_back(A.at(r, j) * B.at(s, j));
            sys.push_back(std::move(row));
        }

    std::vector<size_t> pivots = rref(sys, n);

    // nullspace basis: one vector per free column
    std::vector<char> is_pivot(n, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<CyclotomicNumber>> basis;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<CyclotomicNumber> v(n, F.zero());
        v[fc] = F.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -sys[r][fc];
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return std::nullopt;

    // every coordinate must be reachable
    for (size_t j = 0; j < n; ++j) {
        bool touched = false;
        for (const auto& v : basis)
            if (!v[j].is_zero()) { touched = true; break; }
        if (!touched) return std::nullopt;
    }

    // generic combination by successive elimination of vanishing
    // coordinates
    std::vector<CyclotomicNumber> x = basis[0];
    for (size_t j = 0; j < n; ++j) {
        if (!x[j].is_zero()) continue;
        const std::vector<CyclotomicNumber>* fix = nullptr;
        for (const auto& v : basis)
            if (!v[j].is_zero()) { fix = &v; break; }
        // reachability was already verified
        for (long t = 1;; ++t) {
            CyclotomicNumber tt = F.from_rational(rat(t));
            bool good = true;
            for (size_t i = 0; i < n && good; ++i) {
                if (x[i].is_zero() && (*fix)[i].is_zero()) continue;
                if (i == j || !x[i].is_zero()) {
                    if ((x[i] + tt * (*fix)[i]).is_zero()) good = false;
                }
            }
            if (good) {
                for (size_t i = 0; i < n; ++i) x[i] += tt * (*fix)[i];
                break;
            }
        }
    }
    AssociationWitness w;
    w.lambda = std::move(x);
    return w;
}

CoordMatrix gale_transform(const CoordMatrix& points) {
    const size_t k1 = points.rows;
    const size_t n = points.cols;
    if (n < k1 + 2)
        throw std::domain_error("gale_transform: needs n >= k+3 points");
    const CyclotomicField& F = *points.field;

    // invert the frame of the first k+1 columns by Gauss-Jordan on
    // (C | M)
    std::vector<std::vector<CyclotomicNumber>> aug;
    for (size_t r = 0; r < k1; ++r) {
        std::vector<CyclotomicNumber> row;
        row.reserve(k1 + n);
        for (size_t c = 0; c < k1; ++c) row.push_back(points.at(r, c));
        for (size_t c = 0; c < n; ++c) row.push_back(points.at(r, c));
        aug.push_back(std::move(row));
    }
    std::vector<size_t> pivots = rref(aug, k1 + n);
    if (pivots.size() != k1 || pivots.back() != k1 - 1)
        throw std::domain_error("gale_transform: first k+1 points are linearly dependent");

    // aug now holds (I | C^{-1} M); columns k1..k1+n are the normalized
    // point set (I | A)
    CoordMatrix out = CoordMatrix::zero(points.field, n - k1, n);
    for (size_t r = 0; r < n - k1; ++r) {
        for (size_t c = 0; c < k1; ++c)
            out.at(r, c) = aug[c][k1 + k1 + r];  // A^T entry: A(c, k1 + r)
        out.at(r, k1 + r) = F.one();
    }
    return out;
}

CyclotomicNumber determinant(const CoordMatrix& square) {
    if (square.rows != square.cols)
        throw std::domain_error("determinant: matrix is not square");
    const size_t n = square.rows;
    const CyclotomicField& F = *square.field;
    if (n == 0) return F.one();

    // fraction-free Bareiss: entries stay in the subring generated by
    // the inputs; every division is exact
    std::vector<std::vector<CyclotomicNumber>> m(n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            m[r].push_back(square.at(r, c));

    CyclotomicNumber prev = F.one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return F.zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                CyclotomicNumber num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num * prev.inverse();
            }
            m[i][k] = F.zero();
        }
        prev = m[k][k];
    }
    CyclotomicNumber det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

namespace {

// Mapping of cyclotomic numbers into F_q with q = 1 (mod n): zeta goes
// to an element of exact order n, so polynomial identities transfer and
// a non-zero image proves the exact value non-zero.
struct PrimeFieldEmbedding {
    long q = 0;
    std::vector<long> zeta_powers;  // images of zeta^0 .. zeta^{deg-1}
    bool valid = false;
};

long pow_mod(long a, long e, long q) {
    long acc = 1 % q;
    a %= q;
    if (a < 0) a += q;
    while (e > 0) {
        if (e & 1) acc = acc * a % q;
        a = a * a % q;
        e >>= 1;
    }
    return acc;
}

PrimeFieldEmbedding make_embedding(const CyclotomicField& F) {
    PrimeFieldEmbedding emb;
    unsigned n = F.order();
    for (long q = 10007;; ++q) {
        if (!is_prime(q)) continue;
        if ((q - 1) % static_cast<long>(n) != 0) continue;
        // element of exact order n
        long omega = 0;
        for (long g = 2; g < q && omega == 0; ++g) {
            long cand = pow_mod(g, (q - 1) / static_cast<long>(n), q);
            if (cand == 1 && n > 1) continue;
            bool exact = true;
            for (unsigned d = 1; d < n && exact; ++d)
                if (n % d == 0 && pow_mod(cand, d, q) == 1) exact = false;
            if (exact) omega = cand;
        }
        if (omega == 0 && n == 1) omega = 1;
        if (omega == 0) continue;
        emb.q = q;
        emb.zeta_powers.resize(F.degree());
        for (unsigned i = 0; i < F.degree(); ++i) emb.zeta_powers[i] = pow_mod(omega, i, q);
        emb.valid = true;
        return emb;
    }
}

// Image of x in F_q, or false when a denominator vanishes mod q.
bool embed(const PrimeFieldEmbedding& emb, const CyclotomicNumber& x, long& out) {
    long acc = 0;
    const long q = emb.q;
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rat& c = x.coeffs()[i];
        if (c == 0) continue;
        long num = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), static_cast<unsigned long>(q)));
        long den = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), static_cast<unsigned long>(q)));
        if (den == 0) return false;
        long val = num * pow_mod(den, q - 2, q) % q;
        acc = (acc + val * emb.zeta_powers[i]) % q;
    }
    out = acc;
    return true;
}

// determinant of the selected columns mod q; false when the embedding
// fails on some entry.
bool det_mod_q(const CoordMatrix& m, const std::vector<size_t>& cols,
               const PrimeFieldEmbedding& emb, long& out) {
    const size_t n = cols.size();
    const long q = emb.q;
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (!embed(emb, m.at(r, cols[c]), a[r][c])) return false;
    long det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) { out = 0; return true; }
        if (piv != k) { std::swap(a[piv], a[k]); det = q - det; }
        det = det * a[k][k] % q;
        long inv = pow_mod(a[k][k], q - 2, q);
        for (size_t i = k + 1; i < n; ++i) {
            long f = a[i][k] * inv % q;
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j)
                a[i][j] = (a[i][j] - f * a[k][j] % q + q) % q;
        }
    }
    out = det % q;
    return true;
}

CoordMatrix select_columns(const CoordMatrix& m, const std::vector<size_t>& cols) {
    CoordMatrix out = CoordMatrix::zero(m.field, m.rows, cols.size());
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            out.at(r, c) = m.at(r, cols[c]);
    return out;
}

// Lexicographically next size-|c| subset of {0..m-1}; false at the end.
bool next_combination(std::vector<size_t>& c, size_t m) {
    size_t k = c.size();
    for (size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) <= m - 1) {
            ++c[i];
            for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool general_position_check(const CoordMatrix& points, bool use_prefilter) {
    const size_t k1 = points.rows;
    if (points.cols < k1) return true;  // no full subset to test

    PrimeFieldEmbedding emb;
    if (use_prefilter) emb = make_embedding(*points.field);

    std::vector<size_t> cols(k1);
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;

    do {
        bool nonzero = false;
        if (use_prefilter && emb.valid) {
            long d;
            if (det_mod_q(points, cols, emb, d) && d != 0) nonzero = true;
        }
        if (!nonzero && determinant(select_columns(points, cols)).is_zero())
            return false;
    } while (next_combination(cols, points.cols));
    return true;
}

std::optional<CoordMatrix> projective_equivalence(const CoordMatrix& A, const CoordMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::domain_error("projective_equivalence: dimension mismatch");
    if (A.field->order() != B.field->order())
        throw std::domain_error("projective_equivalence: cyclotomic orders differ");
    const size_t k1 = A.rows;
    const size_t n = A.cols;
    if (n < k1 + 1)
        throw std::domain_error("projective_equivalence: needs at least k+2 points");
    const CyclotomicField& F = *A.field;

    // barycentric coordinates of the (k+2)-th point in each frame
    auto frame_coeffs = [&](const CoordMatrix& M) {
        std::vector<std::vector<CyclotomicNumber>> aug;
        for (size_t r = 0; r < k1; ++r) {
            std::vector<CyclotomicNumber> row;
            for (size_t c = 0; c < k1; ++c) row.push_back(M.at(r, c));
            row.push_back(M.at(r, k1));
            aug.push_back(std::move(row));
        }
        std::vector<size_t> pivots = rref(aug, k1 + 1);
        if (pivots.size() != k1 || pivots.back() != k1 - 1)
            throw std::domain_error("projective_equivalence: degenerate frame (dependent points)");
        std::vector<CyclotomicNumber> d;
        for (size_t r = 0; r < k1; ++r) {
            if (aug[r][k1].is_zero())
                throw std::domain_error(
                    "projective_equivalence: degenerate frame (k+2-nd point in a face)");
            d.push_back(aug[r][k1]);
        }
        return d;
    };
    std::vector<CyclotomicNumber> dA = frame_coeffs(A);
    std::vector<CyclotomicNumber> dB = frame_coeffs(B);

    // T = B1 . diag(dB_i / dA_i) . A1^{-1}
    std::vector<std::vector<CyclotomicNumber>> aug;
    for (size_t r = 0; r < k1; ++r) {
        std::vector<CyclotomicNumber> row;
        for (size_t c = 0; c < k1; ++c) row.push_back(A.at(r, c));
        for (size_t c = 0; c < k1; ++c)
            row.push_back(r == c ? F.one() : F.zero());
        aug.push_back(std::move(row));
    }
    rref(aug, 2 * k1);  // A1 invertible since the frame was fine
    CoordMatrix T = CoordMatrix::zero(A.field, k1, k1);
    for (size_t r = 0; r < k1; ++r)
        for (size_t c = 0; c < k1; ++c) {
            CyclotomicNumber acc = F.zero();
            for (size_t m = 0; m < k1; ++m)
                acc += B.at(r, m) * dB[m] * dA[m].inverse() * aug[m][k1 + c];
            T.at(r, c) = acc;
        }

    // verify the remaining points map proportionally
    for (size_t j = 0; j < n; ++j) {
        std::vector<CyclotomicNumber> img(k1, F.zero());
        for (size_t r = 0; r < k1; ++r)
            for (size_t m = 0; m < k1; ++m)
                img[r] += T.at(r, m) * A.at(m, j);
        // img ~ B column j ?
        size_t lead = k1;
        for (size_t r = 0; r < k1; ++r)
            if (!B.at(r, j).is_zero()) { lead = r; break; }
        if (lead == k1)
            throw std::domain_error("projective_equivalence: zero column in B");
        if (img[lead].is_zero()) return std::nullopt;
        CyclotomicNumber scale = img[lead] * B.at(lead, j).inverse();
        for (size_t r = 0; r < k1; ++r)
            if (img[r] != scale * B.at(r, j)) return std::nullopt;
    }
    return T;
}

ResidueVector associated_generator(const IdVector& h, const PrimeModulus& p) {
    const long pv = p.value();
    if (h.entries.size() < 2 || static_cast<long>(h.entries.size()) > pv - 2)
        throw std::domain_error("associated_generator: requires 2 <= a <= p-2");
    std::vector<char> present(pv, 0);
    for (long e : h.entries) {
        long r = p.reduce(e);
        if (present[r])
            throw std::domain_error("associated_generator: h must have distinct entries");
        present[r] = 1;
    }
    ResidueVector out;
    for (long r = 0; r < pv; ++r)
        if (!present[r]) out.push_back(p.neg(r));
    std::sort(out.rbegin(), out.rend());
    return out;
}

BlockExpansion block_expand(const IdVector& h, const PrimeModulus& p, unsigned l,
                            const std::vector<std::vector<Rat>>& seeds) {
    if (l < 1) throw std::domain_error("block_expand: l must be >= 1");
    const long pv = p.value();
    const size_t a = h.entries.size();
    ResidueVector neg_complement = associated_generator(h, p);  // length p - a

    BlockExpansion out;
    // u = floor((l*p - a) / p) = l - 1 copies of z after t = l copies of -k
    const unsigned t = l;
    const unsigned u = l - 1;
    for (unsigned copy = 0; copy < t; ++copy)
        out.generator.insert(out.generator.end(), neg_complement.begin(), neg_complement.end());
    ResidueVector z;
    for (long e : h.entries) z.push_back(p.neg(e));
    for (unsigned copy = 0; copy < u; ++copy)
        out.generator.insert(out.generator.end(), z.begin(), z.end());

    // first-set seeds: identity point then either caller-provided or
    // default all-non-zero points
    out.first_bases.resize(l);
    out.first_bases[0].assign(a, Rat(1));
    for (unsigned i = 1; i < l; ++i) {
        if (i < seeds.size() + 1 && !seeds.empty()) {
            // caller supplies seeds for orbits 2..l in order
            const auto& s = seeds[i - 1];
            if (s.size() != a)
                throw std::domain_error("block_expand: seed dimension mismatch");
            out.first_bases[i] = s;
        } else {
            std::vector<Rat> s(a);
            for (size_t r = 0; r < a; ++r)
                s[r] = rat(static_cast<long>(i) * static_cast<long>(a - r) -
                           static_cast<long>(i) + 1);
            out.first_bases[i] = s;
        }
    }
    for (unsigned i = 1; i < l; ++i)
        for (const Rat& x : out.first_bases[i])
            if (x == 0)
                throw std::domain_error("block_expand: seeds must have all coordinates non-zero");

    // second-set base points: ones on the i-th copy of -k; the z blocks
    // carry the negated seeds (first point) or the all-ones marker
    const size_t dim2 = out.generator.size();
    const size_t mk = static_cast<size_t>(pv) - a;  // length of one -k block
    out.second_bases.assign(l, std::vector<Rat>(dim2, Rat(0)));
    for (unsigned i = 0; i < l; ++i)
        for (size_t j = 0; j < mk; ++j)
            out.second_bases[i][static_cast<size_t>(i) * mk + j] = Rat(1);
    for (unsigned q = 0; q < u; ++q) {
        size_t z0 = static_cast<size_t>(t) * mk + static_cast<size_t>(q) * a;
        for (size_t r = 0; r < a; ++r) {
            out.second_bases[0][z0 + r] = -out.first_bases[q + 1][r];
            out.second_bases[q + 1][z0 + r] = Rat(1);
        }
    }
    return out;
}

}  // namespace pglcensus
