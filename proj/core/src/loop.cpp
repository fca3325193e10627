#include "hca/loop.hpp"

#include <random>
#include <stdexcept>

#include "hca/ring.hpp"

namespace hca {

void LoopElement::add(bool odd_sector, int x, long exp, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto& sector = odd_sector ? odd : even;
    auto [it, fresh] = sector.emplace(Key{x, exp}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) sector.erase(it);
    }
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
    for (const auto& [k, c] : o.even) add(false, k.first, k.second, c);
    for (const auto& [k, c] : o.odd) add(true, k.first, k.second, c);
    central += o.central;
    return *this;
}

std::string LoopElement::to_string(const SimpleLieAlgebra& g) const {
    std::string out;
    auto append = [&out](const std::string& body) {
        if (out.empty())
            out = body;
        else if (!body.empty() && body[0] == '-')
            out += " - " + body.substr(1);
        else
            out += " + " + body;
    };
    auto emit = [&](const std::map<Key, ParamPoly>& sector, bool odd_sector) {
        for (const auto& [key, c] : sector) {
            const auto& [x, e] = key;
            std::string mono = "t^" + std::to_string(e);
            if (e == 0) mono = "1";
            if (e == 1) mono = "t";
            if (odd_sector) mono = (e == 0) ? "u" : mono + "*u";
            std::string cs = c.to_factor_string();
            std::string body = g.label(x) + "@" + mono;
            if (cs == "-1")
                body = "-" + body;
            else if (cs != "1")
                body = cs + "*" + body;
            append(body);
        }
    };
    emit(even, false);
    emit(odd, true);
    if (!central.is_zero()) append(central.to_string());
    return out.empty() ? "0" : out;
}

LoopAlgebra::LoopAlgebra(SimpleLieAlgebra g, std::shared_ptr<const CoeffTables> tables)
    : g_(std::move(g)), tables_(std::move(tables)) {
    if (!tables_) throw std::invalid_argument("loop algebra needs coefficient tables");
}

LoopElement LoopAlgebra::generator(int x, long exp, bool odd_sector) const {
    if (x < 0 || x >= g_.dim()) throw std::invalid_argument("basis index out of range");
    LoopElement out(n());
    out.add(odd_sector, x, exp, ParamPoly(1));
    return out;
}

LoopElement LoopAlgebra::generator(const std::string& label, long exp, bool odd_sector) const {
    int x = g_.index_of(label);
    if (x < 0) throw std::invalid_argument("unknown basis label '" + label + "'");
    return generator(x, exp, odd_sector);
}

LoopElement LoopAlgebra::central_omega(int k) const {
    LoopElement out(n());
    out.central.omega(k) = ParamPoly(1);
    return out;
}

CentralVector LoopAlgebra::psi(long i, long j) const {
    CentralVector out(n());
    if (i + j >= -n() + 1) {
        for (int k = 1; k <= n(); ++k) out.omega(k) = tables_->p(i + j - 1, -k);
    } else {
        for (int k = 1; k <= n(); ++k) out.omega(k) = tables_->q(-i - j + 1, -k);
    }
    return out;
}

LoopElement LoopAlgebra::bracket(const LoopElement& a, const LoopElement& b) const {
    if (a.central.rank() != n() || b.central.rank() != n())
        throw std::invalid_argument("loop elements belong to a different curve");
    LoopElement out(n());
    const CurveSpec& spec = tables_->spec();

    auto lie_part = [&](int x, int y, const ParamPoly& w, long exp, bool odd_sector) {
        for (const auto& [z, c] : g_.bracket(x, y)) out.add(odd_sector, z, exp, w * c);
    };

    // even x even
    for (const auto& [ka, ca] : a.even)
        for (const auto& [kb, cb] : b.even) {
            const auto& [x, i] = ka;
            const auto& [y, j] = kb;
            ParamPoly w = ca * cb;
            lie_part(x, y, w, i + j, false);
            CentralVector cz = reduce_even_even(i, j, spec);
            cz.scale(w * g_.killing(x, y));
            out.central += cz;
        }
    // odd x odd: [x,y] ⊗ t^{i+j} p(t) plus the omega_0 term
    for (const auto& [ka, ca] : a.odd)
        for (const auto& [kb, cb] : b.odd) {
            const auto& [x, i] = ka;
            const auto& [y, j] = kb;
            ParamPoly w = ca * cb;
            for (long k = 0; k <= n(); ++k) {
                const ParamPoly& akk = spec.a(k);
                if (!akk.is_zero()) lie_part(x, y, w * akk, i + j + k, false);
            }
            CentralVector cz = reduce_odd_odd(i, j, spec);
            cz.scale(odd_odd_form_ ? w * g_.killing(x, y) : w);
            out.central += cz;
        }
    // odd x even and even x odd
    for (const auto& [ka, ca] : a.odd)
        for (const auto& [kb, cb] : b.even) {
            const auto& [x, i] = ka;
            const auto& [y, j] = kb;
            ParamPoly w = ca * cb;
            lie_part(x, y, w, i + j, true);
            CentralVector cz = reduce_odd_even(i, j, *tables_);
            cz.scale(w * g_.killing(x, y));
            out.central += cz;
        }
    for (const auto& [ka, ca] : a.even)
        for (const auto& [kb, cb] : b.odd) {
            const auto& [x, i] = ka;
            const auto& [y, j] = kb;
            ParamPoly w = ca * cb;
            lie_part(x, y, w, i + j, true);
            CentralVector cz = reduce_even_odd(i, j, *tables_);
            cz.scale(w * g_.killing(x, y));
            out.central += cz;
        }
    return out;
}

LoopAlgebra::JacobiReport LoopAlgebra::verify_jacobi(long trials, std::uint64_t seed,
                                                     long max_abs_exp) const {
    JacobiReport report;
    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (long t = 0; t < trials; ++t) {
        LoopElement elems[3];
        std::string desc;
        for (int s = 0; s < 3; ++s) {
            int x = static_cast<int>(pick(0, g_.dim() - 1));
            long e = pick(-max_abs_exp, max_abs_exp);
            bool odd_sector = pick(0, 1) == 1;
            elems[s] = generator(x, e, odd_sector);
            desc += (s ? ", " : "") + g_.label(x) + "@t^" + std::to_string(e) +
                    (odd_sector ? "*u" : "");
        }
        LoopElement sum = bracket(elems[0], bracket(elems[1], elems[2]));
        sum += bracket(elems[1], bracket(elems[2], elems[0]));
        sum += bracket(elems[2], bracket(elems[0], elems[1]));
        report.trials += 1;
        if (!sum.is_zero()) {
            report.failures += 1;
            if (report.first_failure.empty())
                report.first_failure = "(" + desc + ") -> " + sum.to_string(g_);
        }
    }
    return report;
}

std::vector<StructureRow> structure_table(const CoeffTables& tables, long lo, long hi,
                                          ParityFilter filter) {
    std::vector<StructureRow> rows;
    if (lo > hi) return rows;
    const CurveSpec& spec = tables.spec();
    auto keep = [filter](bool odd_sector) {
        if (filter == ParityFilter::even_only) return !odd_sector;
        if (filter == ParityFilter::odd_only) return odd_sector;
        return true;
    };
    for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
            if (!keep(pa == 1) || !keep(pb == 1)) continue;
            for (long i = lo; i <= hi; ++i)
                for (long j = lo; j <= hi; ++j) {
                    StructureRow row;
                    row.left_exp = i;
                    row.left_odd = pa == 1;
                    row.right_exp = j;
                    row.right_odd = pb == 1;
                    RingElement prod = ring_mul(RingElement::monomial(i, row.left_odd),
                                                RingElement::monomial(j, row.right_odd), spec);
                    for (const auto& [e, c] : prod.even.terms())
                        row.product.emplace_back(e, false, c);
                    for (const auto& [e, c] : prod.odd.terms())
                        row.product.emplace_back(e, true, c);
                    row.central = cocycle(RingElement::monomial(i, row.left_odd),
                                          RingElement::monomial(j, row.right_odd), tables);
                    rows.push_back(std::move(row));
                }
        }
    return rows;
}

}  // namespace hca
