#include <doctest.h>

#include <vector>

#include "hca/bell.hpp"
#include "hca/parse.hpp"

using namespace hca;

namespace {

// Independent oracle: B_{n,k} summed over explicit set partitions of
// {1..n}, each partition contributing the product of z_{|block|}.
void enumerate_partitions(int n, std::vector<int>& block_of, int blocks,
                          const std::function<void(const std::vector<int>&, int)>& visit) {
    if (static_cast<int>(block_of.size()) == n) {
        visit(block_of, blocks);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        block_of.push_back(b);
        enumerate_partitions(n, block_of, b == blocks ? blocks + 1 : blocks, visit);
        block_of.pop_back();
    }
}

ParamPoly bell_by_enumeration(int n, int k, const std::vector<ParamPoly>& zs) {
    if (n == 0) return k == 0 ? ParamPoly(1) : ParamPoly();
    ParamPoly sum;
    std::vector<int> block_of;
    enumerate_partitions(n, block_of, 0, [&](const std::vector<int>& assignment, int blocks) {
        if (blocks != k) return;
        std::vector<int> size(static_cast<std::size_t>(blocks), 0);
        for (int b : assignment) size[static_cast<std::size_t>(b)] += 1;
        ParamPoly prod(1);
        for (int s : size) prod *= zs[static_cast<std::size_t>(s - 1)];
        sum += prod;
    });
    return sum;
}

std::vector<ParamPoly> symbols(int n) {
    std::vector<ParamPoly> zs;
    for (int j = 1; j <= n; ++j) zs.push_back(ParamPoly::variable("z" + std::to_string(j)));
    return zs;
}

}  // namespace

TEST_CASE("single-block and all-singleton partitions") {
    auto zs = symbols(8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(bell_partial(n, 1, zs) == zs[static_cast<std::size_t>(n - 1)]);
        CHECK(bell_partial(n, n, zs) == zs[0].pow(static_cast<std::uint32_t>(n)));
    }
}

TEST_CASE("B_{3,2} = 3 z1 z2") {
    auto zs = symbols(3);
    CHECK(bell_partial(3, 2, zs) == parse_param_poly("3*z1*z2"));
}

TEST_CASE("recurrence equals partition enumeration through n = 8") {
    auto zs = symbols(8);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(bell_partial(n, k, zs) == bell_by_enumeration(n, k, zs));
}

TEST_CASE("row sums at all-ones count set partitions") {
    const long expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    std::vector<ParamPoly> ones(8, ParamPoly(1));
    for (int n = 0; n <= 8; ++n) {
        ParamPoly sum;
        for (int k = 0; k <= n; ++k) sum += bell_partial(n, k, ones);
        CHECK(sum == ParamPoly(expected[n]));
    }
}

TEST_CASE("argument count is enforced") {
    std::vector<ParamPoly> two = symbols(2);
    CHECK_THROWS_AS(bell_partial(5, 2, two), std::invalid_argument);  // needs z_1..z_4
    CHECK_NOTHROW(bell_partial(3, 2, two));
}
