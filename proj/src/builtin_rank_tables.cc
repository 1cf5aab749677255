#include "vpoker/strategy.h"

namespace vpoker {

namespace {

constexpr std::string_view kOptimal = R"table(# Strategy for full-pay (9/6) Jacks or Better. Rows are tried in order; the
# first row with a matching held subset decides the hold.
#
# rank | kind | params | exceptions
#   kind    n-RF royal draw, n-SF straight-flush draw, n-F flush draw,
#           n-S straight draw, 5-4K, 5-FH, 3-3K, 4-2P, 2-HP, 2-LP, none
#   s, h    straights through the held cards, held J/Q/K/A
#   held=   held denominations, ';' between alternatives
#   hand=   whole-hand pattern; {..} cards share a suit
#   sp=no   no discarded card could fill a straight with the held cards
#   if=P:f  the hand has a subset matching P whose discards carry penalties f
#           (fp: a discard of the same suit, 9sp: a discarded nine)
name = job-optimal
1 | 5-RF |  |
2 | 5-SF |  |
3 | 5-4K |  |
4 | 4-RF |  |
5 | 5-FH |  |
6 | 5-F |  |
7 | 3-3K |  |
8 | 5-S |  |
9 | 4-SF |  |
10 | 4-2P |  |
11 | 2-HP |  |
12 | 4-F | hand={(2-9)T(J-K)A}(T-K) |
13 | 3-RF |  |
14 | 4-F |  |
15 | 4-S | s=2 h=3 |
16 | 2-LP |  |
17 | 4-S | s=2 |
18 | 3-SF | s+h>=3 |
19 | 4-S | held=JQKA hand={(2-7)JQ}KA;9{JQ}KA |
20 | 2-RF | held=JQ |
21 | 4-S | s=1 h=4 |
22 | 2-RF | held=(J,Q)K;(J-K)A |
23 | 3-SF | s+h=2 sp=no |
24 | 4-S | held=9JQK;TJQA;TJKA;TQKA |
25 | 3-SF | s+h=2 |
26 | 3-S | held=JQK |
27 | 2-S | held=JQ |
28 | 2-S | held=JK if={TJ}:fp |
29 | 2-RF | held=TJ |
30 | 2-S | held=(J,Q)K |
31 | 2-S | held=QA if={TQ}:fp |
32 | 2-RF | held=TQ |
33 | 2-S | held=(J-K)A |
34 | 1-RF | held=K if={TK}:fp+9sp |
35 | 2-RF | held=TK |
36 | 1-RF | held=(J-A) |
37 | 3-SF | s+h=1 |
38 | none |  |
)table";

constexpr std::string_view kPreliminary = R"table(# Hold categories for full-pay (9/6) Jacks or Better, ordered by the smallest
# CE number at which each category is the optimal hold. Same format as
# job-optimal.txt.
name = job-preliminary
1 | 5-RF |  |
2 | 5-SF |  |
3 | 5-4K |  |
4 | 4-RF |  |
5 | 5-FH |  |
6 | 5-F |  |
7 | 3-3K |  |
8 | 5-S |  |
9 | 4-SF | s=2 |
10 | 4-2P |  |
11 | 4-SF | s=1 |
12 | 2-HP |  |
13 | 3-RF |  |
14 | 4-F |  |
15 | 4-S | s=2 h=3 |
16 | 2-LP |  |
17 | 4-S | s=2 h>=1 h<=2 |
18 | 3-SF | s+h=4 |
19 | 4-S | s=2 h=0 |
20 | 3-SF | s+h=3 |
21 | 2-RF | held=JQ |
22 | 2-RF | held=(J,Q)K |
23 | 4-S | s=1 h=4 |
24 | 2-RF | held=(J-K)A |
25 | 3-SF | s+h=2 |
26 | 4-S | s=1 h=3 |
27 | 2-RF | held=TJ |
28 | 3-S | held=JQK |
29 | 2-S | held=JQ |
30 | 2-RF | held=TQ |
31 | 2-S | held=(J,Q)K |
32 | 1-RF | held=(J-A) |
33 | 2-RF | held=TK |
34 | 2-S | held=(J-K)A |
35 | 3-SF | s+h=1 |
36 | none |  |
)table";

}  // namespace

RankTable optimal_rank_table() {
  static const RankTable table = parse_rank_table(kOptimal);
  return table;
}

RankTable preliminary_rank_table() {
  static const RankTable table = parse_rank_table(kPreliminary);
  return table;
}

}  // namespace vpoker
