#include "pdw/words.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pdw;

TEST_CASE("symbol interning is identity on the token name") {
    Symbol a1 = Symbol::intern("a");
    Symbol a2 = Symbol::intern("a");
    Symbol b = Symbol::intern("b");
    REQUIRE(a1 == a2);
    REQUIRE(a1.id() == a2.id());
    REQUIRE(a1 != b);
    REQUIRE(a1.name() == "a");
    REQUIRE(Symbol::intern("⊥₁").name() == "⊥₁");
}

TEST_CASE("token validity") {
    REQUIRE(Symbol::valid_token("a"));
    REQUIRE(Symbol::valid_token("⊥"));
    REQUIRE(Symbol::valid_token("q~sim"));
    REQUIRE_FALSE(Symbol::valid_token(""));
    REQUIRE_FALSE(Symbol::valid_token("a b"));
    REQUIRE_FALSE(Symbol::valid_token("a,b"));
    REQUIRE_FALSE(Symbol::valid_token("("));
    REQUIRE_FALSE(Symbol::valid_token("x\ty"));
}

TEST_CASE("make_word and word_to_string") {
    FiniteWord w = make_word({"a", "b", "a"});
    REQUIRE(w.size() == 3);
    REQUIRE(w[0] == sym("a"));
    REQUIRE(word_to_string(w) == "a b a");
    REQUIRE(word_to_string({}) == "λ");
}

TEST_CASE("lasso letter_at walks spoke then cycle") {
    LassoWord w{make_word({"a", "b"}), make_word({"c", "d"})};
    REQUIRE(w.letter_at(0) == sym("a"));
    REQUIRE(w.letter_at(1) == sym("b"));
    REQUIRE(w.letter_at(2) == sym("c"));
    REQUIRE(w.letter_at(3) == sym("d"));
    REQUIRE(w.letter_at(4) == sym("c"));
    REQUIRE(w.letter_at(101) == sym("d"));
}

TEST_CASE("lasso construction rejects an empty cycle") {
    REQUIRE_THROWS_AS(LassoWord(make_word({"a"}), {}), std::invalid_argument);
}

TEST_CASE("lasso normalization finds the primitive cycle and shortest spoke") {
    LassoWord doubled{make_word({"a"}), make_word({"b", "a", "b", "a"})};
    LassoWord norm = lasso_normalize(doubled);
    REQUIRE(norm.cycle.size() == 2);
    REQUIRE(lasso_equal(doubled, norm));

    // a.(ba)^ω and (ab)^ω are the same word
    LassoWord rotated{make_word({"a"}), make_word({"b", "a"})};
    LassoWord plain{{}, make_word({"a", "b"})};
    REQUIRE(lasso_equal(rotated, plain));
    REQUIRE(lasso_normalize(rotated).spoke.empty());
    REQUIRE(rotated == plain);
}

TEST_CASE("lasso equality is semantic, not structural") {
    LassoWord a{make_word({"a", "a"}), make_word({"a"})};
    LassoWord b{{}, make_word({"a", "a"})};
    REQUIRE(lasso_equal(a, b));

    LassoWord c{{}, make_word({"a", "b"})};
    LassoWord d{{}, make_word({"a", "b", "b"})};
    REQUIRE_FALSE(lasso_equal(c, d));

    // differs only deep in the tail
    LassoWord e{make_word({"a", "a", "a", "a", "a", "a", "a", "b"}), make_word({"a"})};
    LassoWord f{{}, make_word({"a"})};
    REQUIRE_FALSE(lasso_equal(e, f));
}

TEST_CASE("lasso equality survives cycle pumping and spoke rotation") {
    std::vector<LassoWord> samples = {
        LassoWord{{}, make_word({"a"})},
        LassoWord{make_word({"b"}), make_word({"a", "b"})},
        LassoWord{make_word({"a", "b", "a"}), make_word({"b", "a"})},
    };
    for (const LassoWord& w : samples) {
        FiniteWord pumped_cycle = w.cycle;
        pumped_cycle.insert(pumped_cycle.end(), w.cycle.begin(), w.cycle.end());
        REQUIRE(lasso_equal(w, LassoWord{w.spoke, pumped_cycle}));

        FiniteWord longer_spoke = w.spoke;
        longer_spoke.push_back(w.cycle.front());
        FiniteWord rotated(w.cycle.begin() + 1, w.cycle.end());
        rotated.push_back(w.cycle.front());
        REQUIRE(lasso_equal(w, LassoWord{longer_spoke, rotated}));
    }
}

TEST_CASE("word limits") {
    WordLimit fin = WordLimit::finite(make_word({"a"}));
    WordLimit inf = WordLimit::infinite(LassoWord{{}, make_word({"a"})});
    REQUIRE_FALSE(fin.is_infinite());
    REQUIRE(inf.is_infinite());
    REQUIRE_FALSE(fin == inf);
    REQUIRE(fin == WordLimit::finite(make_word({"a"})));
    // semantic equality on the infinite side
    REQUIRE(inf == WordLimit::infinite(LassoWord{make_word({"a"}), make_word({"a", "a"})}));
}

TEST_CASE("prefix_of") {
    REQUIRE(prefix_of({}, make_word({"a"})));
    REQUIRE(prefix_of(make_word({"a", "b"}), make_word({"a", "b", "c"})));
    REQUIRE_FALSE(prefix_of(make_word({"b"}), make_word({"a", "b"})));
    LassoWord w{make_word({"a"}), make_word({"b", "c"})};
    REQUIRE(prefix_of(make_word({"a", "b", "c", "b"}), w));
    REQUIRE_FALSE(prefix_of(make_word({"a", "c"}), w));
}

TEST_CASE("backspace evaluation") {
    Symbol back = sym("←");
    REQUIRE(eraser_evaluate(make_word({"a", "b", "←", "a"}), back) == make_word({"a", "a"}));
    REQUIRE(eraser_evaluate(make_word({"←", "←", "a"}), back) == make_word({"a"}));
    REQUIRE(eraser_evaluate(make_word({"a", "←", "←"}), back) == FiniteWord{});
    REQUIRE(eraser_evaluate({}, back) == FiniteWord{});
    REQUIRE(eraser_evaluate(make_word({"a", "b"}), back) == make_word({"a", "b"}));
}

TEST_CASE("tilde membership through an oracle") {
    auto is_ab = [](const FiniteWord& w) { return w == make_word({"a", "b"}); };
    Symbol back = sym("←");
    REQUIRE(tilde_member(is_ab, make_word({"a", "b"}), back));
    REQUIRE(tilde_member(is_ab, make_word({"a", "a", "←", "b"}), back));
    REQUIRE_FALSE(tilde_member(is_ab, make_word({"a", "a", "b"}), back));
}

TEST_CASE("projection drops a symbol set") {
    SymbolSet drop = {sym("x"), sym("y")};
    REQUIRE(project_erase(make_word({"a", "x", "b", "y"}), drop) == make_word({"a", "b"}));

    // cycle survives
    WordLimit alive = project_erase(LassoWord{make_word({"x", "a"}), make_word({"b", "x"})}, drop);
    REQUIRE(alive.is_infinite());
    REQUIRE(lasso_equal(alive.lasso(), LassoWord{make_word({"a"}), make_word({"b"})}));

    // cycle erased entirely: the limit collapses to a finite word
    WordLimit dead = project_erase(LassoWord{make_word({"a", "x"}), make_word({"x", "y"})}, drop);
    REQUIRE_FALSE(dead.is_infinite());
    REQUIRE(dead.finite_word() == make_word({"a"}));

    WordLimit through = project_erase(WordLimit::finite(make_word({"x", "a"})), drop);
    REQUIRE(through == WordLimit::finite(make_word({"a"})));
}

TEST_CASE("primed copies") {
    Symbol a = sym("a");
    Symbol pa = primed_copy(a);
    REQUIRE(pa != a);
    REQUIRE(is_primed(pa));
    REQUIRE_FALSE(is_primed(a));

    SymbolSet primes = primed_set({sym("a"), sym("b")});
    REQUIRE(primes.size() == 2);
    REQUIRE(primes.count(primed_copy(sym("a"))) == 1);
    REQUIRE(primes.count(primed_copy(sym("b"))) == 1);
    for (Symbol s : primes) REQUIRE(is_primed(s));
}
