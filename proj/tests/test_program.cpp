#include <doctest.h>

#include <numbers>
#include <random>

#include "random_programs.hpp"
#include "spinchain/builders.hpp"
#include "spinchain/error.hpp"
#include "spinchain/program.hpp"

using namespace spinchain;

namespace {

int error_line(std::string_view text, std::optional<int> n = std::nullopt) {
  try {
    parse_sequence(text, n);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse basic program") {
  const auto seq = parse_sequence(
      "# encode\n"
      "pulse 1 x 90\n"
      "pulse all y -90\n"
      "\n"
      "delay 0.5 only=1,2\n"
      "effpair 2 3 z 90 dur=0.25\n");
  CHECK(seq.n == 3);
  REQUIRE(seq.events.size() == 4);
  const auto& p = std::get<HardPulse>(seq.events[0]);
  CHECK(p.targets.spins == std::vector<int>{1});
  CHECK(p.angle == std::numbers::pi / 2);
  CHECK(std::get<HardPulse>(seq.events[1]).targets.all);
  CHECK(*std::get<CouplingDelay>(seq.events[2]).active == std::vector<int>{1, 2});
  CHECK(std::get<EffectivePair>(seq.events[3]).duration == 0.25);
  CHECK(seq.total_duration() == 0.75);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("pulse 1 x 90\nwobble 3\n") == 2);
  CHECK(error_line("pulse 1 q 90\n") == 1);
  CHECK(error_line("pulse 1 x ninety\n") == 1);
  CHECK(error_line("\n\ndelay -1\n") == 3);
  CHECK(error_line("pulse 1,1 x 90\n") == 1);
  CHECK(error_line("pulse 0 x 90\n") == 1);
  CHECK(error_line("pulse 4 x 90\n", 3) == 1);
  CHECK(error_line("delay 1 only=3\n", 3) == 1);
  CHECK(error_line("effpair 1 1 x 90\n") == 1);
  CHECK(error_line("pulse 1 x\n") == 1);
  CHECK(error_line("pulse 1 x 90\n") == 0);
}

TEST_CASE("format is canonical") {
  PulseSequence seq{"", 3, {}};
  seq.pulse(Targets::of({1, 3}), Axis::Y, std::numbers::pi / 2)
      .delay(0.5)
      .delay(0.25, {2})
      .pair(1, 2, Axis::X, std::numbers::pi / 2, 0.5);
  CHECK(format_sequence(seq) ==
        "pulse 1,3 y 90\n"
        "delay 0.5\n"
        "delay 0.25 only=2\n"
        "effpair 1 2 x 90 dur=0.5\n");
}

TEST_CASE("random programs round-trip") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const auto text = format_sequence(testgen::random_sequence(rng, n, 20));
    CHECK(format_sequence(parse_sequence(text, n)) == text);
  }
}

TEST_CASE("builder outputs round-trip") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& named : {build_soliton(n, 1.0), build_isotropic_chain(n, 1.5), build_inept(n, 0.7)}) {
      const auto text = format_sequence(*named.sequence);
      CHECK(format_sequence(parse_sequence(text, n)) == text);
    }
  }
}
