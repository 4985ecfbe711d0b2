#include "sylow.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace syl {

const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::heisenberg: return "heisenberg";
        case FamilyTag::up_full: return "up";
        case FamilyTag::sp: return "sp";
        case FamilyTag::orth_even: return "orth-even";
        case FamilyTag::orth_odd: return "orth-odd";
        case FamilyTag::unitary_even: return "unitary-even";
        case FamilyTag::unitary_odd: return "unitary-odd";
    }
    return "?";
}

std::optional<FamilyTag> parse_family(const std::string& s) {
    if (s == "heisenberg") return FamilyTag::heisenberg;
    if (s == "up" || s == "gl" || s == "up-full") return FamilyTag::up_full;
    if (s == "sp") return FamilyTag::sp;
    if (s == "orth-even") return FamilyTag::orth_even;
    if (s == "orth-odd") return FamilyTag::orth_odd;
    if (s == "unitary-even") return FamilyTag::unitary_even;
    if (s == "unitary-odd") return FamilyTag::unitary_odd;
    return std::nullopt;
}

int ambient_dim(const FamilyParams& f) {
    switch (f.tag) {
        case FamilyTag::heisenberg:
        case FamilyTag::up_full: return f.size;
        case FamilyTag::sp:
        case FamilyTag::orth_even:
        case FamilyTag::unitary_even: return 2 * f.size;
        case FamilyTag::orth_odd:
        case FamilyTag::unitary_odd: return 2 * f.size + 1;
    }
    return 0;
}

bool is_special_case(const FamilyParams& f) { return f.tag == FamilyTag::sp && f.p == 2 && f.r == 1 && f.size == 2; }

bool validate_family(const FamilyParams& f) {
    require(f.p >= 2 && is_prime(uint64_t(f.p)), Errc::not_prime, std::to_string(f.p) + " is not prime");
    require(f.r >= 1, Errc::invalid_params, "r must be positive");
    require(f.r <= 8, Errc::degree_too_large, "r = " + std::to_string(f.r) + " exceeds the maximum degree 8");
    switch (f.tag) {
        case FamilyTag::heisenberg: require(f.size >= 3, Errc::invalid_params, "heisenberg needs n >= 3"); break;
        case FamilyTag::up_full: require(f.size >= 2, Errc::invalid_params, "up needs n >= 2"); break;
        case FamilyTag::sp: require(f.size >= 2, Errc::invalid_params, "sp needs n >= 2"); break;
        case FamilyTag::orth_even: require(f.size >= 2, Errc::invalid_params, "orth-even needs m >= 2"); break;
        case FamilyTag::orth_odd:
            require(f.p != 2, Errc::excluded_case,
                    "orth-odd with p = 2 is excluded: O(2m+1, 2^r) is isomorphic to Sp(2m, 2^r), use --family sp");
            require(f.size >= 2, Errc::invalid_params, "orth-odd needs m >= 2");
            break;
        case FamilyTag::unitary_even:
        case FamilyTag::unitary_odd: require(f.size >= 1, Errc::invalid_params, "unitary needs m >= 1"); break;
    }
    require(f.epsilon == 1 || f.epsilon == -1, Errc::invalid_params, "epsilon must be +1 or -1");
    return is_special_case(f);
}

// ------------------------------------------------------------------ cache

struct Presentation::Cache {
    std::once_flag once;
    bool have_actions = false;
    std::vector<FpMat> actions;
    bool have_table = false;
    std::vector<uint32_t> mul_table, inv_table;
};

// ------------------------------------------------------------------ build

int Presentation::slot_width(SlotKind k) const { return k == SlotKind::ext_full ? 2 * fam_.r : fam_.r; }

void Presentation::add_slot(SlotKind k, bool in_x, int i, int j, const std::string& name) {
    slots_.push_back({k, in_x, i, j});
    auto part = [&](const std::string& tag) {
        for (int c = 0; c < fam_.r; ++c) labels_.push_back(name + tag + ".c" + std::to_string(c));
    };
    if (k == SlotKind::base) part("");
    else if (k == SlotKind::ext_full) {
        part(".dot");
        part(".ddot");
    } else
        part(fam_.p == 2 ? ".dot" : ".ddot");
}

static std::string idx2(const char* n, int i, int j) {
    return std::string(n) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}
static std::string idx1(const char* n, int i) { return std::string(n) + "[" + std::to_string(i + 1) + "]"; }

Presentation Presentation::build(const FamilyParams& fam, const Caps& caps) {
    Presentation P;
    P.special_ = validate_family(fam);
    P.fam_ = fam;
    P.caps_ = caps;
    P.f_ = Field::make(fam.p, fam.r);
    bool unitary = fam.tag == FamilyTag::unitary_even || fam.tag == FamilyTag::unitary_odd;
    if (unitary) P.ext_ = std::make_shared<const QuadExt>(QuadExt::make(P.f_));
    int n = fam.size, m = fam.size, r = fam.r;
    auto full_upper = [&](int k) {
        P.l_size_ = k;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) P.l_free_.emplace_back(i, j);
    };
    switch (fam.tag) {
        case FamilyTag::heisenberg:
            P.xlen_ = n - 1;
            for (int i = 0; i < n - 2; ++i) P.add_slot(SlotKind::base, true, i, 0, idx1("v", i));
            P.add_slot(SlotKind::base, true, n - 2, 0, "x");
            P.l_size_ = n;
            for (int i = 1; i <= n - 2; ++i) P.l_free_.emplace_back(i, n - 1);
            for (int c = 0; c < r; ++c) P.center_.push_back(r * (n - 2) + c);
            break;
        case FamilyTag::up_full:
            P.xlen_ = n - 1;
            for (int i = 0; i < n - 1; ++i) P.add_slot(SlotKind::base, true, i, 0, idx1("c", i));
            full_upper(n - 1);
            for (int c = 0; c < r; ++c) P.center_.push_back(c);
            break;
        case FamilyTag::sp:
            P.bdim_ = n;
            P.sym_ = Sym::symmetric;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) P.add_slot(SlotKind::base, false, i, j, idx2("B", i, j));
            full_upper(n);
            for (int c = 0; c < (fam.p == 2 ? 2 * r : r); ++c) P.center_.push_back(c);
            break;
        case FamilyTag::orth_even:
            P.bdim_ = m;
            P.sym_ = Sym::antisymmetric;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) P.add_slot(SlotKind::base, false, i, j, idx2("B", i, j));
            full_upper(m);
            // m = 2 is abelian: the whole of L is central as well.
            for (int c = 0; c < r; ++c) P.center_.push_back(c);
            P.center_l_ = m == 2;
            break;
        case FamilyTag::orth_odd:
            P.xlen_ = m;
            P.bdim_ = m;
            P.sym_ = Sym::antisymmetric;
            for (int i = 0; i < m; ++i) P.add_slot(SlotKind::base, true, i, 0, idx1("x", i));
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) P.add_slot(SlotKind::base, false, i, j, idx2("B", i, j));
            full_upper(m);
            for (int c = 0; c < r; ++c) P.center_.push_back(c);
            for (int c = 0; c < r; ++c) P.center_.push_back(r * m + c);
            break;
        case FamilyTag::unitary_even:
        case FamilyTag::unitary_odd: {
            bool odd = fam.tag == FamilyTag::unitary_odd;
            P.bdim_ = m;
            P.sym_ = Sym::antihermitian;
            if (odd) {
                P.xlen_ = m;
                for (int i = 0; i < m; ++i) P.add_slot(SlotKind::ext_full, true, i, 0, idx1("x", i));
            }
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j)
                    P.add_slot(i == j ? SlotKind::ext_diag : SlotKind::ext_full, false, i, j, idx2("B", i, j));
            full_upper(m);
            int b0 = odd ? 2 * r * m : 0;
            if (odd)
                for (int c = 0; c < 2 * r; ++c) P.center_.push_back(c);
            for (int c = 0; c < r; ++c) P.center_.push_back(b0 + c);
            break;
        }
    }
    P.l_order_ = ipow(P.l_field_size(), P.l_free_.size());
    P.cache_ = std::make_shared<Cache>();
    return P;
}

Presentation Presentation::analysis_view() const {
    Presentation V = *this;
    V.cache_ = std::make_shared<Cache>();
    if (!center_l_) return V;
    V.abel_ = true;
    V.abel_free_ = l_free_;
    for (auto [i, j] : l_free_)
        for (int c = 0; c < fam_.r; ++c) V.labels_.push_back(idx2("A", i, j) + ".c" + std::to_string(c));
    V.abel_extra_ = int(l_free_.size()) * fam_.r;
    V.l_free_.clear();
    V.l_order_ = 1;
    V.center_.clear();
    for (int k = 0; k < V.delta_dim(); ++k) V.center_.push_back(k);
    V.center_l_ = false;
    return V;
}

// ------------------------------------------------------------------ sizes

uint64_t Presentation::delta_order() const { return ipow(p(), uint64_t(delta_dim())); }
uint64_t Presentation::group_order() const { return checked_mul(delta_order(), l_order_); }
uint64_t Presentation::l_field_size() const { return over_ext() ? uint64_t(ext_->size()) : uint64_t(f_.size()); }

uint64_t Presentation::expected_group_order() const {
    uint64_t p = fam_.p, r = fam_.r, n = fam_.size, m = fam_.size;
    switch (fam_.tag) {
        case FamilyTag::heisenberg: return ipow(p, r * (2 * n - 3));
        case FamilyTag::up_full: return ipow(p, r * n * (n - 1) / 2);
        case FamilyTag::sp: return ipow(p, r * n * n);
        case FamilyTag::orth_even: return ipow(p, r * m * (m - 1));
        case FamilyTag::orth_odd: return ipow(p, r * m * m);
        case FamilyTag::unitary_even:
        case FamilyTag::unitary_odd: {
            uint64_t N = uint64_t(ambient_dim(fam_));
            return ipow(p, r * N * (N - 1) / 2);
        }
    }
    return 0;
}

// ------------------------------------------------------------------ L

Mat Presentation::l_matrix(uint64_t idx) const {
    require(idx < l_order_, Errc::mismatch, "L index out of range");
    Mat a = syl::identity(l_size_);
    uint64_t Q = l_field_size();
    for (int k = int(l_free_.size()) - 1; k >= 0; --k) {
        a(l_free_[k].first, l_free_[k].second) = elem(idx % Q);
        idx /= Q;
    }
    return a;
}

uint64_t Presentation::l_index(const Mat& a) const {
    require(a.rows == l_size_ && a.cols == l_size_, Errc::mismatch, "matrix is not an element of L");
    Mat chk = syl::identity(l_size_);
    uint64_t idx = 0, Q = l_field_size();
    for (auto [i, j] : l_free_) {
        idx = idx * Q + a(i, j);
        chk(i, j) = a(i, j);
    }
    require(chk == a, Errc::mismatch, "matrix is not an element of L");
    return idx;
}

void Presentation::ensure_cache() const {
    std::call_once(cache_->once, [this] {
        Cache& c = *cache_;
        int d = delta_dim();
        if (l_order_ <= caps_.group && l_order_ * uint64_t(d) * uint64_t(d) <= (uint64_t(1) << 26)) {
            c.actions.resize(l_order_);
            for (uint64_t l = 0; l < l_order_; ++l) {
                Mat a = l_matrix(l);
                FpMat M(d);
                Vec e(d, 0);
                for (int k = 0; k < d; ++k) {
                    e[k] = 1;
                    Vec col = act_formula(a, e);
                    e[k] = 0;
                    for (int i = 0; i < d; ++i) M(i, k) = col[i];
                }
                c.actions[l] = std::move(M);
            }
            c.have_actions = true;
        }
        if (l_order_ <= 2048) {
            c.mul_table.resize(l_order_ * l_order_);
            c.inv_table.resize(l_order_);
            std::vector<Mat> mats(l_order_);
            for (uint64_t l = 0; l < l_order_; ++l) mats[l] = l_matrix(l);
            auto prod = [&](const Mat& a, const Mat& b) {
                return over_ext() ? syl::mul(*ext_, a, b) : syl::mul(f_, a, b);
            };
            for (uint64_t a = 0; a < l_order_; ++a)
                for (uint64_t b = 0; b < l_order_; ++b) {
                    uint64_t ab = l_index(prod(mats[a], mats[b]));
                    c.mul_table[a * l_order_ + b] = uint32_t(ab);
                    if (ab == 0) c.inv_table[a] = uint32_t(b);
                }
            c.have_table = true;
        }
    });
}

uint64_t Presentation::l_mul(uint64_t a, uint64_t b) const {
    ensure_cache();
    if (cache_->have_table) return cache_->mul_table[a * l_order_ + b];
    Mat A = l_matrix(a), B = l_matrix(b);
    return l_index(over_ext() ? syl::mul(*ext_, A, B) : syl::mul(f_, A, B));
}

uint64_t Presentation::l_inv(uint64_t a) const {
    ensure_cache();
    if (cache_->have_table) return cache_->inv_table[a];
    Mat A = l_matrix(a);
    return l_index(over_ext() ? unitriangular_inverse(*ext_, A) : unitriangular_inverse(f_, A));
}

// ------------------------------------------------------------------ chart

Presentation::DeltaVal Presentation::decode(const Vec& d) const {
    require(int(d.size()) == delta_dim(), Errc::dimension_mismatch, "Delta vector has the wrong length");
    DeltaVal v;
    v.x.assign(xlen_, 0);
    v.b = Mat(bdim_, bdim_);
    elem q = f_.size();
    int pos = 0;
    auto read = [&](int width) {
        elem val = 0, pw = 1;
        for (int c = 0; c < width; ++c) {
            val += d[pos + c] * pw;
            pw *= elem(fam_.p);
        }
        pos += width;
        return val;
    };
    for (const auto& s : slots_) {
        elem val;
        if (s.kind == SlotKind::base) val = read(fam_.r);
        else if (s.kind == SlotKind::ext_full) {
            elem dot = read(fam_.r);
            elem ddot = read(fam_.r);
            val = dot + q * ddot;
        } else {
            elem c = read(fam_.r);
            val = fam_.p == 2 ? c : q * c;
        }
        if (s.in_x) v.x[s.i] = val;
        else v.b(s.i, s.j) = val;
    }
    for (int i = 0; i < bdim_; ++i)
        for (int j = i + 1; j < bdim_; ++j) {
            elem u = v.b(i, j);
            switch (sym_) {
                case Sym::symmetric: v.b(j, i) = u; break;
                case Sym::antisymmetric: v.b(j, i) = f_.neg(u); break;
                case Sym::antihermitian: v.b(j, i) = ext_->neg(ext_->conj(u)); break;
                case Sym::none: break;
            }
        }
    return v;
}

Vec Presentation::encode(const DeltaVal& v) const {
    Vec d(delta_dim(), 0);
    elem q = f_.size();
    int pos = 0;
    auto write = [&](elem val) {
        for (int c = 0; c < fam_.r; ++c) {
            d[pos++] = val % elem(fam_.p);
            val /= elem(fam_.p);
        }
    };
    for (const auto& s : slots_) {
        elem val = s.in_x ? v.x[s.i] : v.b(s.i, s.j);
        if (s.kind == SlotKind::base) write(val);
        else if (s.kind == SlotKind::ext_full) {
            write(val % q);
            write(val / q);
        } else
            write(fam_.p == 2 ? val % q : val / q);
    }
    return d;
}

// ------------------------------------------------------------------ action

Vec Presentation::act_formula(const Mat& a, const Vec& d) const {
    if (abel_) return d;
    DeltaVal v = decode(d);
    const Field& F = f_;
    switch (fam_.tag) {
        case FamilyTag::heisenberg: {
            int n = fam_.size;
            elem x = v.x[n - 2];
            for (int i = 1; i <= n - 2; ++i) x = F.sub(x, F.mul(v.x[i - 1], a(i, n - 1)));
            v.x[n - 2] = x;
            break;
        }
        case FamilyTag::up_full:
        case FamilyTag::orth_odd: {
            std::vector<elem> y(xlen_, 0);
            for (int i = 0; i < xlen_; ++i)
                for (int j = 0; j < xlen_; ++j) y[i] = F.add(y[i], F.mul(a(i, j), v.x[j]));
            v.x = y;
            if (fam_.tag == FamilyTag::orth_odd) v.b = syl::mul(F, syl::mul(F, a, v.b), transpose(a));
            break;
        }
        case FamilyTag::sp:
        case FamilyTag::orth_even: v.b = syl::mul(F, syl::mul(F, a, v.b), transpose(a)); break;
        case FamilyTag::unitary_even:
        case FamilyTag::unitary_odd: {
            const QuadExt& K = *ext_;
            Mat ab = entrywise_conj(K, a);
            if (fam_.tag == FamilyTag::unitary_odd) {
                std::vector<elem> y(xlen_, 0);
                for (int i = 0; i < xlen_; ++i)
                    for (int j = 0; j < xlen_; ++j) y[i] = K.add(y[i], K.mul(ab(i, j), v.x[j]));
                v.x = y;
            }
            v.b = syl::mul(K, syl::mul(K, a, v.b), transpose(ab));
            break;
        }
    }
    return encode(v);
}

Vec Presentation::act_direct(uint64_t l, const Vec& d) const { return act_formula(l_matrix(l), d); }

FpMat Presentation::action_matrix(uint64_t l) const {
    ensure_cache();
    if (cache_->have_actions) return cache_->actions.at(l);
    int dd = delta_dim();
    Mat a = l_matrix(l);
    FpMat M(dd);
    Vec e(dd, 0);
    for (int k = 0; k < dd; ++k) {
        e[k] = 1;
        Vec col = act_formula(a, e);
        e[k] = 0;
        for (int i = 0; i < dd; ++i) M(i, k) = col[i];
    }
    return M;
}

Vec Presentation::act(uint64_t l, const Vec& d) const {
    if (l == 0) return d;
    ensure_cache();
    if (cache_->have_actions) return fp_apply(cache_->actions[l], d, p());
    return act_direct(l, d);
}

// ------------------------------------------------------------------ group law

void Presentation::check(const GroupElt& g) const {
    require(int(g.delta.size()) == delta_dim() && g.l < l_order_, Errc::mismatch,
            "element does not belong to this presentation");
    for (auto c : g.delta) require(c < p(), Errc::mismatch, "Delta coordinate outside [0, p)");
}

GroupElt Presentation::mul(const GroupElt& g, const GroupElt& h) const {
    check(g);
    check(h);
    return {fp_add(g.delta, act(g.l, h.delta), p()), l_mul(g.l, h.l)};
}

GroupElt Presentation::inv(const GroupElt& g) const {
    check(g);
    uint64_t li = l_inv(g.l);
    return {fp_neg(act(li, g.delta), p()), li};
}

GroupElt Presentation::pow(const GroupElt& g, uint64_t e) const {
    GroupElt acc = identity(), b = g;
    while (e) {
        if (e & 1) acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

GroupElt Presentation::element(uint64_t idx) const {
    uint64_t nd = delta_order();
    require(idx < group_order(), Errc::mismatch, "element index out of range");
    return {fp_decode(idx % nd, delta_dim(), p()), idx / nd};
}

std::vector<GroupElt> Presentation::generators() const {
    std::vector<GroupElt> gens;
    for (int k = 0; k < delta_dim(); ++k) {
        GroupElt g = identity();
        g.delta[k] = 1;
        gens.push_back(g);
    }
    // F_p-basis of the entry field: p^c for c < r (base) or < 2r (extension).
    int width = over_ext() ? 2 * fam_.r : fam_.r;
    for (auto [i, j] : l_free_)
        for (int c = 0; c < width; ++c) {
            Mat a = syl::identity(l_size_);
            a(i, j) = elem(ipow(p(), uint64_t(c)));
            gens.push_back({Vec(delta_dim(), 0), l_index(a)});
        }
    return gens;
}

// ------------------------------------------------------------------ embedding

std::optional<FormSpec> Presentation::form() const {
    int N = ambient_dim(fam_);
    switch (fam_.tag) {
        case FamilyTag::heisenberg:
        case FamilyTag::up_full: return std::nullopt;
        case FamilyTag::sp: return make_form(FormKind::symplectic_S, N);
        case FamilyTag::orth_even:
            return make_form(fam_.p == 2 ? FormKind::orth_char2_Qplus : FormKind::orth_plus_Aplus, N);
        case FamilyTag::orth_odd: return make_form(FormKind::orth_odd_L, N);
        case FamilyTag::unitary_even: return make_form(FormKind::hermitian_beta_even, N);
        case FamilyTag::unitary_odd: return make_form(FormKind::hermitian_beta_odd, N);
    }
    return std::nullopt;
}

bool Presentation::embedding_expected_valid() const {
    return fam_.tag != FamilyTag::orth_odd && fam_.tag != FamilyTag::unitary_odd;
}

bool Presentation::in_ambient_group(const Mat& m) const {
    auto fs = form();
    if (!fs) {
        // GL_n: unitriangular, hence invertible.
        return is_unitriangular(m);
    }
    return over_ext() ? is_form_member(*ext_, m, *fs) : is_form_member(f_, m, *fs);
}

Mat Presentation::embed(const GroupElt& g) const {
    check(g);
    Mat a;
    if (abel_) {
        a = syl::identity(l_size_);
        int pos = delta_dim() - abel_extra_;
        for (auto [i, j] : abel_free_) {
            elem val = 0, pw = 1;
            for (int c = 0; c < fam_.r; ++c, pw *= elem(fam_.p)) val += g.delta[pos + c] * pw;
            a(i, j) = val;
            pos += fam_.r;
        }
    } else
        a = l_matrix(g.l);
    DeltaVal v = decode(g.delta);
    int N = ambient_dim(fam_);
    switch (fam_.tag) {
        case FamilyTag::heisenberg: {
            int n = fam_.size;
            Mat h = syl::identity(n);
            for (int i = 1; i <= n - 2; ++i) h(0, i) = v.x[i - 1];
            h(0, n - 1) = v.x[n - 2];
            return syl::mul(f_, h, a);
        }
        case FamilyTag::up_full: {
            int n = fam_.size;
            Mat h = syl::identity(n);
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j) h(i, j) = a(i, j);
            for (int i = 0; i < n - 1; ++i) h(i, n - 1) = v.x[i];
            return h;
        }
        default: break;
    }
    bool odd = fam_.tag == FamilyTag::orth_odd || fam_.tag == FamilyTag::unitary_odd;
    int m = bdim_, off = odd ? 1 : 0;
    auto build = [&](const auto& K, bool herm) {
        Mat nb = syl::identity(N), o = syl::identity(N);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) nb(off + i, off + m + j) = v.b(i, j);
        Mat ainv = unitriangular_inverse(K, a);
        Mat low = transpose(herm ? entrywise_conj(K, ainv) : ainv);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                o(off + i, off + j) = a(i, j);
                o(off + m + i, off + m + j) = low(i, j);
            }
        Mat res = syl::mul(K, nb, o);
        if (odd) {
            Mat px = syl::identity(N);
            for (int i = 0; i < m; ++i) {
                px(0, off + m + i) = v.x[i];
                px(off + i, 0) = herm ? K.conj(v.x[i]) : v.x[i];
            }
            res = syl::mul(K, px, res);
        }
        return res;
    };
    if (over_ext()) return build(*ext_, true);
    return build(f_, false);
}

// ------------------------------------------------------------------ center

int Presentation::center_rank_closed() const {
    return int(center_.size()) + (center_l_ ? int(l_free_.size()) * fam_.r : 0);
}

bool Presentation::in_closed_center(const GroupElt& g) const {
    if (!center_l_ && g.l != 0) return false;
    std::vector<char> allowed(delta_dim(), 0);
    for (int c : center_) allowed[c] = 1;
    for (int k = 0; k < delta_dim(); ++k)
        if (g.delta[k] && !allowed[k]) return false;
    return true;
}

template <class Fn>
static void parallel_for(uint64_t total, unsigned workers, Fn fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || total < 4096) {
        fn(0, total, 0u);
        return;
    }
    std::vector<std::thread> pool;
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi, w);
    }
    for (auto& t : pool) t.join();
}

std::vector<GroupElt> center_bruteforce(const Presentation& pres) {
    uint64_t order = pres.group_order();
    require(order <= pres.caps().group, Errc::cap_exceeded,
            "group order " + std::to_string(order) + " exceeds the enumeration cap");
    auto gens = pres.generators();
    unsigned W = std::max(1u, pres.caps().workers);
    std::vector<std::vector<GroupElt>> parts(W);
    parallel_for(order, W, [&](uint64_t lo, uint64_t hi, unsigned w) {
        for (uint64_t i = lo; i < hi; ++i) {
            GroupElt g = pres.element(i);
            bool central = true;
            for (const auto& h : gens)
                if (!(pres.mul(g, h) == pres.mul(h, g))) {
                    central = false;
                    break;
                }
            if (central) parts[w].push_back(std::move(g));
        }
    });
    std::vector<GroupElt> z;
    for (auto& p : parts) z.insert(z.end(), p.begin(), p.end());
    std::sort(z.begin(), z.end());
    // Verify against every element when affordable.
    if (uint64_t(z.size()) * order <= (uint64_t(1) << 26)) {
        for (const auto& c : z)
            for (uint64_t i = 0; i < order; ++i) {
                GroupElt g = pres.element(i);
                require(pres.mul(c, g) == pres.mul(g, c), Errc::internal,
                        "element commuting with the generators is not central");
            }
    }
    return z;
}

std::vector<GroupElt> center_closed_form_elements(const Presentation& pres) {
    std::vector<GroupElt> z;
    const auto& cc = pres.center_coords();
    uint64_t nl = pres.center_includes_l() ? pres.l_order() : 1;
    uint64_t nz = ipow(pres.p(), cc.size());
    require(checked_mul(nz, nl) <= pres.caps().group, Errc::cap_exceeded, "closed-form center too large to list");
    for (uint64_t l = 0; l < nl; ++l)
        for (uint64_t t = 0; t < nz; ++t) {
            Vec v = fp_decode(t, int(cc.size()), pres.p());
            GroupElt g = pres.identity();
            g.l = l;
            for (size_t k = 0; k < cc.size(); ++k) g.delta[cc[k]] = v[k];
            z.push_back(g);
        }
    std::sort(z.begin(), z.end());
    return z;
}

SocleReport socle(const Presentation& pres) {
    SocleReport s;
    s.coords = pres.center_coords();
    s.elementary_abelian = true;
    for (const auto& z : center_closed_form_elements(pres))
        if (!(pres.pow(z, pres.p()) == pres.identity())) {
            s.elementary_abelian = false;
            break;
        }
    return s;
}

}  // namespace syl
