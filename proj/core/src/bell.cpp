#include "hca/bell.hpp"

#include <map>
#include <stdexcept>

namespace hca {

namespace {

ParamPoly bell_rec(int n, int k, std::span<const ParamPoly> args,
                   std::map<std::pair<int, int>, ParamPoly>& memo) {
    if (n == 0 && k == 0) return ParamPoly(1);
    if (n == 0 || k == 0) return ParamPoly();
    if (k > n) return ParamPoly();
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    ParamPoly sum;
    for (int j = 1; j <= n - k + 1; ++j) {
        const ParamPoly& zj = args[static_cast<std::size_t>(j - 1)];
        if (zj.is_zero()) continue;
        ParamPoly term = bell_rec(n - j, k - 1, args, memo);
        if (term.is_zero()) continue;
        term *= zj;
        term *= Rational(binomial(n - 1, j - 1));
        sum += term;
    }
    memo.emplace(std::make_pair(n, k), sum);
    return sum;
}

}  // namespace

ParamPoly bell_partial(int n, int k, std::span<const ParamPoly> args) {
    if (n < 0 || k < 0) throw std::invalid_argument("Bell polynomial needs n, k >= 0");
    if (n > 0 && k > 0 && static_cast<int>(args.size()) < n - k + 1)
        throw std::invalid_argument("Bell polynomial needs at least n-k+1 arguments");
    std::map<std::pair<int, int>, ParamPoly> memo;
    return bell_rec(n, k, args, memo);
}

}  // namespace hca
