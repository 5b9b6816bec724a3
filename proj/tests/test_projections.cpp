#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dqmat/projections.hpp"
#include "support/properties.hpp"

using namespace dqmat;

TEST_CASE("project_unit_dq closed form") {
    // hand-evaluated: st=[2,0,0,0], du=[1,1,0,0] -> st=[1,0,0,0], du=[0,0.5,0,0]
    const DualQuaternion q{{2, 0, 0, 0}, {1, 1, 0, 0}};
    const DualQuaternion u = project_unit_dq(q);
    CHECK(dq_approx_eq(u, {{1, 0, 0, 0}, {0, 0.5, 0, 0}}, 1e-14));
    CHECK(u.is_unit(1e-12));
}

TEST_CASE("project_unit_dq fixes unit inputs") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const DualQuaternion u = random_unit_dq(rng);
        CHECK(dq_norm2R(project_unit_dq(u) - u) < 1e-12);
    }
}

TEST_CASE("project_unit_dq infinitesimal branch") {
    const DualQuaternion q{Quaternion::zero(), {0, 3, 0, 0}};
    const DualQuaternion u = project_unit_dq(q);
    CHECK(dq_approx_eq(u, {{0, 1, 0, 0}, Quaternion::zero()}));
    CHECK_THROWS_AS(project_unit_dq(DualQuaternion::zero()), ZeroInput);
}

TEST_CASE("project_unit_vec agrees with division by the 2-norm") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.uniform_index(5);
        DQVector v = random_vec(rng, n);
        v[0].st.w += 2.0;  // keep appreciable
        const DQVector a = project_unit_vec(v);
        const DualNumber norm = vec_norm2(v);
        double max_diff = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            max_diff = std::max(max_diff, dq_norm2R(dq_div_dn(v[k], norm) - a[k]));
        CHECK(max_diff <= 1e-12 * (1.0 + vec_norm2R(v)));
    }
}

TEST_CASE("project_unit_vec special cases") {
    Rng rng(13);
    const DQVector u = random_unit_vec(rng, 3);
    const DQVector again = project_unit_vec(u);
    CHECK(vec_norm2R(again - u) < 1e-12);

    // orthogonal dual part: projection is plain scaling
    DQVector q(2);
    q[0] = {{2, 0, 0, 0}, {0, 1, 0, 0}};
    q[1] = {Quaternion::zero(), {0, 0, 1, 0}};
    const DQVector p = project_unit_vec(q);
    CHECK(dq_approx_eq(p[0], {{1, 0, 0, 0}, {0, 0.5, 0, 0}}));
    CHECK(dq_approx_eq(p[1], {Quaternion::zero(), {0, 0, 0.5, 0}}));

    CHECK_THROWS_AS(project_unit_vec(DQVector::zero(3)), ZeroInput);
}

TEST_CASE("random generators are deterministic and feasible") {
    Rng a(42), b(42);
    const DualQuaternion qa = random_unit_dq(a), qb = random_unit_dq(b);
    CHECK(qa == qb);
    CHECK(qa.is_unit(1e-10));

    Rng c(43), d(43);
    const DQVector va = random_unit_vec(c, 7), vb = random_unit_vec(d, 7);
    CHECK(vec_norm2R(va - vb) == 0.0);
    CHECK(std::abs(vec_norm2(va).st - 1.0) < 1e-10);
}

TEST_CASE("random unit dual quaternions have near-zero mean") {
    Rng rng(14);
    double mean[4] = {0, 0, 0, 0};
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const DualQuaternion q = random_unit_dq(rng);
        mean[0] += q.st.w;
        mean[1] += q.st.x;
        mean[2] += q.st.y;
        mean[3] += q.st.z;
    }
    for (double m : mean) CHECK(std::abs(m / n) <= 0.05);
}

TEST_CASE("projection optimality and idempotence laws") {
    const auto fails = testing::projection_properties(100, 1000);
    for (const auto& f : fails) MESSAGE(f);
    CHECK(fails.empty());
}
