#include <gtest/gtest.h>

#include "sessionpi/syntax.hpp"
#include "support/generators.hpp"

namespace sessionpi {
namespace {

const char* kServiceProcess =
    "!x?(w).new p: <lin ?(un end).lin ?(un end).rec a. un ?(un end).a, "
    "lin !(un end).lin !(un end).rec b. un !(un end).b>. w!p.p?(title).p?(date).!p?(d).0";

TEST(Parser, Inaction) {
  Process p = parse_process("0");
  EXPECT_EQ(p.kind(), Process::Kind::inaction);
  EXPECT_EQ(to_string(p), "0");
}

TEST(Parser, ParallelOfPrefixes) {
  Process p = parse_process("x!y.0 | x?(z).0");
  Process expected = Process::par(Process::output("x", "y", Process::zero()),
                                  Process::input("x", "z", Process::zero()));
  EXPECT_EQ(p, expected);
}

TEST(Parser, RestrictionWithChannelType) {
  Process p = parse_process("new p: <lin ?(un end).un end, lin !(un end).un end>. 0");
  EndPoint e = EndPoint::end(Qualifier::un);
  Type t = Type::channel(EndPoint::qualified(Qualifier::lin, Polarity::receive, Type::end_point(e), e),
                         EndPoint::qualified(Qualifier::lin, Polarity::send, Type::end_point(e), e));
  EXPECT_EQ(p, Process::restrict("p", t, Process::zero()));
}

TEST(Parser, ParallelIsLeftAssociativeAndLoosest) {
  Process p = parse_process("!a?(x).0 | b!c.0 | 0");
  ASSERT_EQ(p.kind(), Process::Kind::parallel);
  EXPECT_EQ(p.left().kind(), Process::Kind::parallel);
  EXPECT_EQ(p.left().left().kind(), Process::Kind::replication);
  EXPECT_EQ(p.right().kind(), Process::Kind::inaction);
}

TEST(Parser, ParenthesesGroup) {
  Process p = parse_process("a!b.(0 | 0)");
  ASSERT_EQ(p.kind(), Process::Kind::output);
  EXPECT_EQ(p.continuation().kind(), Process::Kind::parallel);
}

TEST(Parser, CommentsAndLinePositions) {
  try {
    parse_process("# header\nx!y.\n  ?");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_EQ(e.pos().column, 3);
  }
}

TEST(Parser, RejectsEmptyProcess) {
  EXPECT_THROW(parse_process(""), ParseError);
  EXPECT_THROW(parse_process("  # only a comment\n"), ParseError);
}

TEST(Parser, RejectsTrailingInput) { EXPECT_THROW(parse_process("0 0"), ParseError); }

TEST(TypeParser, UnEnd) {
  Type t = parse_type("un end");
  ASSERT_FALSE(t.is_channel());
  EXPECT_EQ(t.first.qualifier(), Qualifier::un);
  EXPECT_EQ(t.first.polarity(), Polarity::end);
}

TEST(TypeParser, Recursive) {
  EndPoint s = parse_end_point("rec a. un ?(un end).a");
  ASSERT_EQ(s.kind(), EndPoint::Kind::recursive);
  EXPECT_EQ(s.name(), "a");
  EXPECT_EQ(s.body().continuation().kind(), EndPoint::Kind::variable);
}

TEST(TypeParser, RejectsNonContractive) {
  EXPECT_THROW(parse_type("rec a. a"), ParseError);
  EXPECT_THROW(parse_type("rec a. rec b. a"), ParseError);
  EXPECT_THROW(parse_type("rec a. rec b. b"), ParseError);
  EXPECT_NO_THROW(parse_type("rec a. rec b. lin !(un end).a"));
}

TEST(TypeParser, RejectsUnboundVariable) {
  EXPECT_THROW(parse_type("lin !(un end).a"), ParseError);
  EXPECT_THROW(parse_process("new x: rec a. lin ?(b).a. 0"), ParseError);
}

TEST(TypeParser, PayloadMayMentionEnclosingBinder) {
  Type t = parse_type("rec a. lin ?(a).un end");
  EXPECT_EQ(to_string(t), "rec a. lin ?(a).un end");
}

TEST(Printer, RoundTripsServiceProcess) {
  Process p = parse_process(kServiceProcess);
  Process q = parse_process(to_string(p));
  EXPECT_EQ(p, q);
  EXPECT_EQ(to_string(p), to_string(q));
}

TEST(Printer, ParenthesisesNestedParallel) {
  Process p = Process::par(Process::zero(), Process::par(Process::zero(), Process::zero()));
  EXPECT_EQ(to_string(p), "0 | (0 | 0)");
  EXPECT_EQ(parse_process(to_string(p)), p);
}

TEST(Printer, RoundTripsRandomProcesses) {
  testing::Rng rng(7);
  std::vector<Type> annotations;
  for (int i = 0; i < 8; ++i) annotations.push_back(testing::random_type(rng, 3));
  for (int i = 0; i < 100; ++i) {
    Process p = testing::random_process(rng, testing::uniform(rng, 1, 14), {"a", "b"}, annotations);
    Process q = parse_process(to_string(p));
    EXPECT_EQ(p, q) << to_string(p);
  }
}

TEST(Printer, RoundTripsRandomTypes) {
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    Type t = testing::random_type(rng, 4);
    EXPECT_EQ(parse_type(to_string(t)), t) << to_string(t);
  }
}

TEST(FreeVars, Basics) {
  EXPECT_TRUE(free_vars(parse_process("0")).empty());
  EXPECT_EQ(free_vars(parse_process("x!y.0")), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(free_vars(parse_process("new x: un end. x!y.0")), (std::set<std::string>{"y"}));
  EXPECT_EQ(free_vars(parse_process("x?(y).y!x.0 | y!z.0")),
            (std::set<std::string>{"x", "y", "z"}));
}

TEST(Substitute, ReplacesFreeOccurrences) {
  EXPECT_EQ(substitute(parse_process("x!y.0"), "z", "y"), parse_process("x!z.0"));
}

TEST(Substitute, StopsAtBinder) {
  Process p = parse_process("x?(y).y!w.0");
  EXPECT_EQ(substitute(p, "z", "y"), p);
}

TEST(Substitute, CommunicationInstance) {
  EXPECT_EQ(substitute(parse_process("y?(w).0"), "z", "y"), parse_process("z?(w).0"));
}

TEST(Substitute, DetectsCapture) {
  EXPECT_THROW(substitute(parse_process("x?(z).y!z.0"), "z", "y"), std::logic_error);
}

TEST(Substitute, FreeVariablesMoveFromTargetToReplacement) {
  testing::Rng rng(11);
  std::vector<Type> annotations{parse_type("un end")};
  for (int i = 0; i < 100; ++i) {
    Process p = barendregt_rename(testing::random_process(rng, 10, {"a", "b"}, annotations), {"c"});
    std::set<std::string> expected = free_vars(p);
    if (expected.erase("a")) expected.insert("c");
    EXPECT_EQ(free_vars(substitute(p, "c", "a")), expected);
  }
}

TEST(Barendregt, RenamesClashingBinders) {
  Process p = barendregt_rename(parse_process("x?(y).0 | x?(y).0"));
  EXPECT_EQ(to_string(p), "x?(y).0 | x?(y1).0");
}

TEST(Barendregt, AvoidsFreeNames) {
  Process p = barendregt_rename(parse_process("y!y.0 | x?(y).y!y.0"));
  EXPECT_EQ(to_string(p), "y!y.0 | x?(y1).y1!y1.0");
  EXPECT_TRUE(satisfies_variable_convention(p));
}

TEST(Barendregt, LeavesBinderFreeTermsUnchanged) {
  Process p = parse_process("a!b.0 | !b!a.0");
  EXPECT_EQ(barendregt_rename(p), p);
}

TEST(Barendregt, IdempotentAndAlphaEquivalent) {
  testing::Rng rng(3);
  std::vector<Type> annotations{parse_type("un end"), parse_type("lin ?(un end).un end")};
  for (int i = 0; i < 100; ++i) {
    Process p = testing::random_process(rng, testing::uniform(rng, 1, 16), {"a", "x"}, annotations);
    Process once = barendregt_rename(p);
    EXPECT_TRUE(satisfies_variable_convention(once)) << to_string(once);
    EXPECT_EQ(barendregt_rename(once), once) << to_string(p);
    EXPECT_TRUE(alpha_equal(p, once)) << to_string(p);
    EXPECT_EQ(free_vars(once), free_vars(p));
  }
}

TEST(AlphaEqual, DistinguishesBinding) {
  EXPECT_TRUE(alpha_equal(parse_process("x?(y).y!y.0"), parse_process("x?(z).z!z.0")));
  EXPECT_FALSE(alpha_equal(parse_process("x?(y).y!y.0"), parse_process("x?(z).y!z.0")));
  EXPECT_FALSE(alpha_equal(parse_process("x!y.0"), parse_process("x!z.0")));
}

TEST(FreshCopy, RenamesEveryBinder) {
  Process p = parse_process("x?(y).new z: un end. y!z.0");
  Process q = fresh_copy(p, {});
  EXPECT_TRUE(alpha_equal(p, q));
  EXPECT_EQ(to_string(q), "x?(y1).new z1: un end. y1!z1.0");
}

}  // namespace
}  // namespace sessionpi
