#include "doctest.h"

#include "afs/framework.hpp"
#include "helpers.hpp"

#include <stdexcept>

using namespace afs;
using test_helpers::fixture;
using test_helpers::mk;

TEST_CASE("build validates and normalizes") {
    Framework chain = mk({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(chain.size() == 3);
    CHECK(chain.attack_count() == 2);
    CHECK(chain.name(0) == "a");

    CHECK(mk({"a"}, {}).size() == 1);

    CHECK_THROWS_AS(mk({"a", "b"}, {{"a", "c"}}), std::invalid_argument);
    CHECK_THROWS_AS(mk({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(mk({""}, {}), std::invalid_argument);

    // duplicate attack pairs collapse
    Framework dup = mk({"a", "b"}, {{"a", "b"}, {"a", "b"}});
    CHECK(dup.attack_count() == 1);
}

TEST_CASE("attackers and targets") {
    Framework chain = fixture("chain3.tgf");
    Framework self = fixture("self_attack_pair.tgf");
    Framework cyc = fixture("three_cycle.tgf");

    CHECK(chain.attacker_names("b") == std::vector<std::string>{"a"});
    CHECK(chain.attacker_names("a").empty());
    CHECK(self.attacker_names("a") == std::vector<std::string>{"a"});
    CHECK(self.target_names("a") == std::vector<std::string>{"a", "b"});
    CHECK(chain.target_names("c").empty());
    CHECK(cyc.target_names("c") == std::vector<std::string>{"a"});
    CHECK_THROWS_AS(chain.index_of("zz"), std::invalid_argument);
}

TEST_CASE("initial arguments") {
    CHECK(fixture("chain3.tgf").initial_argument_names() == std::vector<std::string>{"a"});
    CHECK(fixture("three_cycle.tgf").initial_argument_names().empty());
    CHECK(fixture("self_attack_pair.tgf").initial_argument_names().empty());
    CHECK(fixture("mutual_pair_cycle.tgf").initial_argument_names().empty());
}

TEST_CASE("restriction") {
    Framework chain = fixture("chain3.tgf");
    Framework sub = chain.restrict_to_names({"a", "b"});
    CHECK(sub.size() == 2);
    CHECK(sub.attack_count() == 1);
    CHECK(sub.has_attack(sub.index_of("a"), sub.index_of("b")));

    Framework cyc = fixture("three_cycle.tgf");
    Framework two = cyc.restrict_to_names({"a", "c"});
    CHECK(two.attack_count() == 1);
    CHECK(two.has_attack(two.index_of("c"), two.index_of("a")));

    Framework empty = chain.restrict_to({});
    CHECK(empty.empty());

    // identity
    Framework same = chain.restrict_to({0, 1, 2});
    CHECK(same.attack_pairs() == chain.attack_pairs());
    CHECK(same.names() == chain.names());

    CHECK_THROWS_AS(chain.restrict_to({7}), std::invalid_argument);
}

TEST_CASE("scc decomposition on the named fixtures") {
    Framework chain = fixture("chain3.tgf");
    SccDecomposition d1 = scc_decomposition(chain);
    REQUIRE(d1.components.size() == 3);
    CHECK(chain.name(d1.components[0][0]) == "a");
    CHECK(chain.name(d1.components[1][0]) == "b");
    CHECK(chain.name(d1.components[2][0]) == "c");

    Framework tail = fixture("scc_tail.tgf");
    SccDecomposition d2 = scc_decomposition(tail);
    REQUIRE(d2.components.size() == 3);
    CHECK(d2.components[0].size() == 3);
    CHECK(tail.name(d2.components[1][0]) == "d");
    CHECK(tail.name(d2.components[2][0]) == "e");

    Framework fl = mk({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"a", "c"}, {"b", "c"}});
    SccDecomposition d3 = scc_decomposition(fl);
    REQUIRE(d3.components.size() == 2);
    CHECK(d3.components[0].size() == 2);
    CHECK(fl.name(d3.components[1][0]) == "c");
}

TEST_CASE("topological order property of the decomposition") {
    Framework tail = fixture("scc_tail.tgf");
    SccDecomposition dec = scc_decomposition(tail);
    for (const auto& [from, to] : tail.attack_pairs()) {
        int cf = dec.component_of[tail.index_of(from)];
        int ct = dec.component_of[tail.index_of(to)];
        CHECK(cf <= ct);
    }
}

TEST_CASE("acyclic arguments") {
    Framework self = fixture("self_attack_pair.tgf");
    CHECK_FALSE(is_acyclic_argument(self, std::string("a")));
    CHECK(is_acyclic_argument(self, std::string("b")));

    Framework tail = fixture("scc_tail.tgf");
    CHECK(is_acyclic_argument(tail, std::string("d")));
    CHECK_FALSE(is_acyclic_argument(tail, std::string("b")));

    Framework cyc = fixture("three_cycle.tgf");
    CHECK_FALSE(is_acyclic_argument(cyc, std::string("b")));
}

TEST_CASE("shipped variants of the motivating shapes") {
    Framework tgt = fixture("floating_target.tgf");
    CHECK(scc_decomposition(tgt).components.size() == 2);

    Framework c = fixture("cycle_attack_target.tgf");
    Framework d = fixture("cycle_double_target.tgf");
    CHECK(c.size() == 4);
    CHECK(d.attack_count() == c.attack_count() + 1);
}
