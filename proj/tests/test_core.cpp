#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "argus/parser.hpp"
#include "argus/random_system.hpp"
#include "fixtures.hpp"

using namespace argus;
using argus::testing::load_fixture;

TEST_CASE("complement flips exactly the negation flag") {
    Literal murderer{"murderer", false};
    CHECK(complement(murderer) == Literal{"murderer", true});
    CHECK(complement(Literal{"owner", true}) == Literal{"owner", false});
    CHECK(complement(complement(Literal{"stable_market", false})) ==
          Literal{"stable_market", false});
}

TEST_CASE("complement is involutive on random literals") {
    for (int i = 0; i < 50; ++i) {
        Literal l{"atom_" + std::to_string(i), i % 2 == 0};
        CHECK(complement(complement(l)) == l);
    }
}

TEST_CASE("identifier syntax") {
    CHECK(is_identifier("dog_bark"));
    CHECK(is_identifier("_x9"));
    CHECK(!is_identifier(""));
    CHECK(!is_identifier("9x"));
    CHECK(!is_identifier("a-b"));
}

TEST_CASE("parsing the one-rule barking-dog base") {
    ArgumentationSystem sys = load_fixture("sys_dog.akb");
    REQUIRE(sys.agents.size() == 1);
    REQUIRE(sys.agents[0].rules.size() == 1);
    const Rule& r1 = sys.agents[0].rules[0];
    CHECK(r1.id == RuleId{"village", "r1"});
    CHECK(r1.strong_premises == std::vector<Literal>{{"dog_bark", false}});
    CHECK(r1.weak_premises.empty());
    CHECK(r1.head.size() == 2);
}

TEST_CASE("parsing the two-agent jail base") {
    ArgumentationSystem sys = load_fixture("sys_jail.akb");
    REQUIRE(sys.agents.size() == 2);
    CHECK(sys.agents[0].id == "Agt1");
    CHECK(sys.agents[0].rules.size() == 4);
    CHECK(sys.agents[1].id == "Agt2");
    CHECK(sys.agents[1].rules.size() == 3);
    CHECK(sys.agent_prefs.empty());
    // r6 exists in both agents; names are agent-qualified.
    CHECK(sys.find_rule(RuleId{"Agt1", "r6"}) != nullptr);
    CHECK(sys.find_rule(RuleId{"Agt2", "r6"}) != nullptr);
}

TEST_CASE("rule parts of the legal base") {
    ArgumentationSystem sys = load_fixture("sys_legal.akb");
    const Rule* r5 = sys.find_rule(RuleId{"legal", "r5"});
    REQUIRE(r5);
    auto p5 = rule_parts(*r5);
    CHECK(p5.strong == std::vector<Literal>{{"finger_print", false}});
    CHECK(p5.weak.empty());
    CHECK(p5.head == std::vector<Literal>{{"murderer", false}, {"owner", false}});

    const Rule* r8 = sys.find_rule(RuleId{"legal", "r8"});
    REQUIRE(r8);
    auto p8 = rule_parts(*r8);
    CHECK(p8.strong.empty());
    CHECK(p8.weak == std::vector<Literal>{{"criminal_record", false}});
    CHECK(p8.head == std::vector<Literal>{{"murderer", true}});
}

TEST_CASE("rule parts of a planning rule with weak negative premises") {
    ArgumentationSystem sys = load_fixture("sys_plan.akb");
    const Rule* b3 = sys.find_rule(RuleId{"B", "B3"});
    REQUIRE(b3);
    auto parts = rule_parts(*b3);
    CHECK(parts.strong.empty());
    CHECK(parts.weak == std::vector<Literal>{{"stable_market", true},
                                             {"adversary_financial_factor", false}});
    CHECK(parts.head == std::vector<Literal>{{"new_production_line", false}});
}

TEST_CASE("preferences close transitively and reject cycles") {
    ArgumentationSystem plan = load_fixture("sys_plan.akb");
    const Agent* a = plan.find_agent("A");
    REQUIRE(a);
    CHECK(a->rule_prefs.prefers(RuleId{"A", "A3"}, RuleId{"A", "A5"}));
    CHECK(!a->rule_prefs.prefers(RuleId{"A", "A5"}, RuleId{"A", "A3"}));
    CHECK(plan.agent_prefs.prefers("A", "B"));
    CHECK(!plan.agent_prefs.prefers("B", "A"));

    PreferenceHierarchy<int> chain;
    chain.add(1, 2);
    chain.add(2, 3);
    CHECK(chain.prefers(1, 3));
    CHECK(!chain.prefers(3, 1));
    CHECK(!chain.validate());

    PreferenceHierarchy<int> cyclic;
    cyclic.add(1, 2);
    cyclic.add(2, 1);
    CHECK(cyclic.validate().has_value());
}

TEST_CASE("reflexive preference is rejected at parse time") {
    ParseResult r = parse_system("bad.akb", "agent A { r1: => p. prefer r1 > r1. }");
    CHECK(!r.ok());
    REQUIRE(!r.diagnostics.empty());
    CHECK(to_string(r.diagnostics[0]).find("cycle") != std::string::npos);
}

TEST_CASE("parse diagnostics carry document, line and column") {
    ParseResult r = parse_system("bad.akb", "agent A {\n  r1: => p |\n}\n");
    REQUIRE(!r.ok());
    CHECK(r.diagnostics[0].document == "bad.akb");
    CHECK(r.diagnostics[0].line == 3);
}

TEST_CASE("validation failures") {
    CHECK(!parse_system("x", "agent A { r1: p => . }").ok());            // empty head
    CHECK(!parse_system("x", "agent A { r1: => p | -p. }").ok());        // complementary head
    CHECK(!parse_system("x", "agent A { r1: => p. r1: => q. }").ok());   // duplicate rule
    CHECK(!parse_system("x", "agent A { r1: => p. prefer r1 > r2. }").ok()); // unknown rule
    CHECK(!parse_system("x", "agent A { r1: => p. } prefer A > C.").ok());   // unknown agent
    CHECK(!parse_system("x", "agent A { r1: => p. } agent A { r2: => q. }").ok());
    CHECK(!parse_system("x", "agent A { r1: => p. r2: => q. prefer r1 > r2. prefer r2 > r1. }")
               .ok());
    CHECK(!parse_system("x", "agent A { r1: => p, q. }").ok()); // comma in head
    CHECK(!parse_system("x", "agent A { r1: => p. ").ok());     // unterminated block
}

TEST_CASE("facts and weak-only rules parse with absent body parts") {
    ParseResult r = parse_system("x", "agent A { f: => p. w: ~q => r. m: p, ~q => r | -s. }");
    REQUIRE(r.ok());
    const Rule* m = r.system->find_rule(RuleId{"A", "m"});
    REQUIRE(m);
    CHECK(m->strong_premises.size() == 1);
    CHECK(m->weak_premises.size() == 1);
    CHECK(m->head.size() == 2);
}

TEST_CASE("print/parse round-trip on the fixtures") {
    for (const char* name :
         {"sys_dog.akb", "sys_legal.akb", "sys_jail.akb", "sys_plan.akb", "mutual_rebut.akb"}) {
        ArgumentationSystem sys = load_fixture(name);
        ParseResult again = parse_system("printed", print_system(sys));
        REQUIRE(again.ok());
        CHECK(*again.system == sys);
    }
}

TEST_CASE("print/parse round-trip on random systems") {
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        RandomSystemParams params;
        params.atoms = 3 + static_cast<int>(seed % 5);
        params.agents = 1 + static_cast<int>(seed % 3);
        params.inject_subsumption = seed % 4 == 0;
        ArgumentationSystem sys = generate_random_system(seed, params);
        ParseResult again = parse_system("printed", print_system(sys));
        REQUIRE(again.ok());
        CHECK(*again.system == sys);
    }
}

TEST_CASE("random systems are deterministic in the seed") {
    RandomSystemParams params;
    ArgumentationSystem a = generate_random_system(7, params);
    ArgumentationSystem b = generate_random_system(7, params);
    CHECK(a == b);
    CHECK(print_system(a) == print_system(b));
}

TEST_CASE("multi-document parsing merges agents and rejects re-declarations") {
    std::vector<NamedDocument> docs{{"a.akb", "agent A { r1: => p. }"},
                                    {"b.akb", "agent B { r1: => -p. }"}};
    ParseResult r = parse_system(docs);
    REQUIRE(r.ok());
    CHECK(r.system->agents.size() == 2);

    docs.push_back({"c.akb", "agent A { r2: => q. }"});
    CHECK(!parse_system(docs).ok());
}
