#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "argus/fixpoint.hpp"
#include "argus/random_system.hpp"
#include "fixtures.hpp"

using namespace argus;
using argus::testing::load_fixture;

namespace {

struct Fixture {
    ArgumentationSystem plain;
    CompiledSystem sys;
    ArgSet set;

    explicit Fixture(const std::string& name)
        : plain(load_fixture(name)), sys(plain), set(enumerate_arguments(sys)) {}
};

int find_arg(const AttackAnalysis& an,
             const std::vector<std::pair<const char*, const char*>>& steps,
             const char* agent = nullptr) {
    const CompiledSystem& sys = an.system();
    std::vector<ArgumentStep> key;
    for (const auto& [rule, lit] : steps) {
        int handle = -1;
        for (int r = 0; r < sys.rule_count(); ++r) {
            const RuleId& id = sys.rule(r).id;
            if (id.local == rule && (agent == nullptr || id.agent == agent))
                handle = r;
        }
        REQUIRE(handle >= 0);
        std::string text = lit;
        Literal l{text[0] == '-' ? text.substr(1) : text, text[0] == '-'};
        int code = sys.lit_of(l);
        REQUIRE(code >= 0);
        key.push_back({handle, code});
    }
    std::sort(key.begin(), key.end());
    int idx = an.find(key);
    REQUIRE(idx >= 0);
    return idx;
}

LitStatus status_of(const AttackAnalysis& an, const StatusReport& rep, const char* text) {
    std::string t = text;
    Literal l{t[0] == '-' ? t.substr(1) : t, t[0] == '-'};
    return literal_status(an, rep, l);
}

} // namespace

TEST_CASE("one application from the empty reference admits the unattacked arguments") {
    Fixture f("sys_legal.akb");
    AttackAnalysis an(f.sys, f.set, View::Credulous);
    Bits none(an.size());
    Bits f0 = apply_pi(an, none);

    // Defeater-free members, checked by hand over the full enumeration.
    CHECK(f0.test(an.empty_index()));
    CHECK(f0.test(find_arg(an, {{"r4", "finger_print"}})));
    CHECK(f0.test(find_arg(an, {{"r9", "criminal_record"}})));
    // The record-carrying murderer chain cannot be attacked at all: every
    // counter-argument needs r8, which it undercuts via criminal_record.
    CHECK(f0.test(find_arg(an, {{"r9", "criminal_record"},
                                {"r4", "finger_print"},
                                {"r7", "-owner"},
                                {"r5", "murderer"},
                                {"r6", "put_into_jail"}})));
    // The bare -owner prefix is rebutted by the owner reading, so it must
    // wait for the record argument to kill the r8 family.
    int prefix = find_arg(an, {{"r4", "finger_print"}, {"r7", "-owner"}});
    CHECK(!f0.test(prefix));
    int owner_reading =
        find_arg(an, {{"r4", "finger_print"}, {"r8", "-murderer"}, {"r5", "owner"}});
    CHECK(an.defeats(owner_reading, prefix));

    Bits f1 = apply_pi(an, f0);
    CHECK(f1.test(prefix));
    CHECK(f1.test(find_arg(an, {{"r4", "finger_print"}, {"r7", "-owner"},
                                {"r5", "murderer"}})));
    CHECK(f1.test(find_arg(an, {{"r4", "finger_print"},
                                {"r7", "-owner"},
                                {"r5", "murderer"},
                                {"r6", "put_into_jail"}})));
    CHECK(!f1.test(find_arg(an, {{"r8", "-murderer"}})));
}

TEST_CASE("least fixpoint on the legal base keeps the jail chain and drops r8") {
    Fixture f("sys_legal.akb");
    AttackAnalysis an(f.sys, f.set, View::Credulous);
    FixpointResult fix = least_fixpoint(an);
    CHECK(fix.members.test(find_arg(an, {{"r4", "finger_print"},
                                         {"r7", "-owner"},
                                         {"r5", "murderer"},
                                         {"r6", "put_into_jail"}})));
    CHECK(fix.members.test(find_arg(an, {{"r9", "criminal_record"}})));
    CHECK(!fix.members.test(find_arg(an, {{"r8", "-murderer"}})));
}

TEST_CASE("the barking dog fixes to exactly the empty argument under every view") {
    Fixture f("sys_dog.akb");
    for (View view : {View::Credulous, View::Skeptical, View::GeneralizedSkeptical}) {
        AttackAnalysis an(f.sys, f.set, view);
        FixpointResult fix = least_fixpoint(an);
        REQUIRE(an.size() == 1);
        CHECK(fix.members.test(an.empty_index()));
    }
}

TEST_CASE("skeptical jail fixpoint restores release and drops the jail chain") {
    Fixture f("sys_jail.akb");
    AttackAnalysis an(f.sys, f.set, View::Skeptical);
    FixpointResult fix = least_fixpoint(an);
    CHECK(fix.members.test(find_arg(an, {{"r3", "release"}})));
    CHECK(!fix.members.test(
        find_arg(an, {{"r1", "finger_print"}, {"r2", "murderer"}, {"r6", "put_into_jail"}},
                 "Agt1")));
    bool some_aux_in = false;
    for (int i = an.real_count(); i < an.size(); ++i)
        some_aux_in = some_aux_in || fix.members.test(i);
    CHECK(some_aux_in);
}

TEST_CASE("argument statuses on the legal base") {
    Fixture f("sys_legal.akb");
    AttackAnalysis an(f.sys, f.set, View::Credulous);
    StatusReport rep = classify(an);
    CHECK(rep.per_argument[find_arg(an, {{"r8", "-murderer"}})] == ArgStatus::Defeated);
    CHECK(rep.per_argument[find_arg(an, {{"r9", "criminal_record"}})] == ArgStatus::Justified);
    CHECK(rep.per_argument[find_arg(an, {{"r4", "finger_print"},
                                         {"r7", "-owner"},
                                         {"r5", "murderer"},
                                         {"r6", "put_into_jail"}})] == ArgStatus::Justified);
}

TEST_CASE("mutual rebut without priorities leaves both sides arguable") {
    Fixture f("mutual_rebut.akb");
    AttackAnalysis an(f.sys, f.set, View::Credulous);
    StatusReport rep = classify(an);
    CHECK(rep.per_argument[find_arg(an, {{"a", "p"}})] == ArgStatus::Arguable);
    CHECK(rep.per_argument[find_arg(an, {{"b", "-p"}})] == ArgStatus::Arguable);
    CHECK(status_of(an, rep, "p") == LitStatus::Arguable);
    CHECK(status_of(an, rep, "-p") == LitStatus::Arguable);
}

TEST_CASE("expert B alone justifies its chain and defeats the production rule") {
    Fixture f("sys_plan_b.akb");
    AttackAnalysis an(f.sys, f.set, View::Credulous);
    StatusReport rep = classify(an);
    int arg3 = find_arg(an, {{"B9", "economic_grow"},
                             {"B4", "-demand_grow"},
                             {"B1", "competition_grow"},
                             {"B2", "-stable_market"}});
    int arg4 = find_arg(an, {{"B3", "new_production_line"}});
    int arg5 = find_arg(an, {{"B6", "interest_raise"}, {"B5", "adversary_financial_factor"}});
    int arg6 = find_arg(an, {{"B7", "stock_index_raise"},
                             {"B8", "-adversary_financial_factor"}});
    CHECK(an.strictly_defeats(arg6, arg5));
    CHECK(rep.per_argument[arg3] == ArgStatus::Justified);
    CHECK(rep.per_argument[arg4] == ArgStatus::Defeated);
    CHECK(rep.per_argument[arg5] == ArgStatus::Defeated);
    CHECK(rep.per_argument[arg6] == ArgStatus::Justified);
}

TEST_CASE("literal lifting on the jail base matches both views") {
    Fixture f("sys_jail.akb");
    AttackAnalysis cred(f.sys, f.set, View::Credulous);
    StatusReport crep = classify(cred);
    CHECK(status_of(cred, crep, "put_into_jail") == LitStatus::Justified);
    CHECK(status_of(cred, crep, "release") == LitStatus::Overruled);

    AttackAnalysis skep(f.sys, f.set, View::Skeptical);
    StatusReport srep = classify(skep);
    CHECK(status_of(skep, srep, "put_into_jail") == LitStatus::Overruled);
    CHECK(status_of(skep, srep, "release") == LitStatus::Justified);
    // The auxiliary owner argument is justified but synthetic, so the owner
    // literal stays unreported.
    CHECK(status_of(skep, srep, "owner") == LitStatus::Unknown);
}

TEST_CASE("unconcluded literals are unknown") {
    Fixture f("sys_dog.akb");
    AttackAnalysis an(f.sys, f.set, View::Credulous);
    StatusReport rep = classify(an);
    CHECK(status_of(an, rep, "stranger") == LitStatus::Unknown);
    CHECK(status_of(an, rep, "arson") == LitStatus::Unknown);
    CHECK(status_of(an, rep, "dog_bark") == LitStatus::Unknown);
    CHECK(status_of(an, rep, "never_mentioned") == LitStatus::Unknown);
}

TEST_CASE("operator is monotone over random reference chains") {
    std::mt19937_64 rng(424242);
    int checked = 0;
    for (uint64_t seed = 1; checked < 300; ++seed) {
        RandomSystemParams params;
        params.atoms = 4 + static_cast<int>(seed % 5);
        params.agents = 1 + static_cast<int>(seed % 2);
        params.inject_subsumption = seed % 3 == 0;
        ArgumentationSystem plain = generate_random_system(seed, params);
        CompiledSystem sys(plain);
        ArgSet set = enumerate_arguments(sys);
        if (set.truncated)
            continue;
        View view = seed % 2 ? View::Skeptical : View::Credulous;
        AttackAnalysis an(sys, set, view);
        const int n = an.size();
        for (int rep = 0; rep < 3; ++rep) {
            Bits small(n), large(n);
            for (int i = 0; i < n; ++i) {
                if (rng() % 4 == 0) {
                    small.set(i);
                    large.set(i);
                } else if (rng() % 4 == 0) {
                    large.set(i);
                }
            }
            CHECK(apply_pi(an, small).is_subset_of(apply_pi(an, large)));
            ++checked;
        }
    }
}

TEST_CASE("iteration ascends and stabilizes within pool size plus one") {
    for (const char* name : {"sys_legal.akb", "sys_jail.akb", "sys_plan_b.akb"}) {
        CAPTURE(name);
        Fixture f(name);
        for (View view : {View::Credulous, View::Skeptical}) {
            AttackAnalysis an(f.sys, f.set, view);
            FixpointResult fix = least_fixpoint(an);
            CHECK(fix.iterations <= an.size() + 1);
            for (size_t i = 1; i < fix.stages.size(); ++i) {
                std::set<int> prev(fix.stages[i - 1].begin(), fix.stages[i - 1].end());
                for (int x : fix.stages[i - 1])
                    CHECK(std::find(fix.stages[i].begin(), fix.stages[i].end(), x) !=
                          fix.stages[i].end());
                (void)prev;
            }
            CHECK(apply_pi(an, fix.members) == fix.members); // fixpoint identity
        }
    }
}

TEST_CASE("no argument is both justified and defeated; unattacked implies justified") {
    for (uint64_t seed = 100; seed < 160; ++seed) {
        RandomSystemParams params;
        params.atoms = 4 + static_cast<int>(seed % 4);
        params.agents = 1 + static_cast<int>(seed % 3);
        params.inject_subsumption = seed % 2 == 0;
        ArgumentationSystem plain = generate_random_system(seed, params);
        CompiledSystem sys(plain);
        ArgSet set = enumerate_arguments(sys);
        if (set.truncated)
            continue;
        View view = seed % 2 ? View::GeneralizedSkeptical : View::Skeptical;
        AttackAnalysis an(sys, set, view);
        FixpointResult fix = least_fixpoint(an);
        StatusReport rep = classify(an);
        CAPTURE(seed);
        for (int i = 0; i < an.size(); ++i) {
            if (rep.per_argument[i] == ArgStatus::Justified) {
                bool strictly_defeated_by_member = false;
                for (int y = 0; y < an.size(); ++y)
                    strictly_defeated_by_member |=
                        fix.members.test(y) && an.strictly_defeats(y, i);
                CHECK(!strictly_defeated_by_member);
            }
            if (an.defeaters_of(i).empty())
                CHECK(rep.per_argument[i] == ArgStatus::Justified);
        }
    }
}

TEST_CASE("single-agent systems report identically under both views") {
    for (uint64_t seed = 300; seed < 340; ++seed) {
        RandomSystemParams params;
        params.agents = 1;
        params.atoms = 5;
        ArgumentationSystem plain = generate_random_system(seed, params);
        CompiledSystem sys(plain);
        ArgSet set = enumerate_arguments(sys);
        if (set.truncated)
            continue;
        AttackAnalysis cred(sys, set, View::Credulous);
        AttackAnalysis skep(sys, set, View::Skeptical);
        StatusReport a = classify(cred);
        StatusReport b = classify(skep);
        CAPTURE(seed);
        CHECK(a.per_argument == b.per_argument);
        CHECK(a.per_literal == b.per_literal);
    }
}
