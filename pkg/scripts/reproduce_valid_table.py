"""Rebuild the valid-mood table from scratch and cross-check both deciders.

Walks all 256 standard-form moods, keeps the ones the piece calculus accepts,
and confirms the finite-model oracle agrees on every verdict.
"""

from __future__ import annotations

import sys

from dasasap import decide, enumerate_all, mnemonic_of_syllogism, mood_of_syllogism, oracle_decide


def main() -> int:
    valid = []
    disagreements = 0
    for s in enumerate_all():
        by_pieces = decide(s).valid
        by_models = oracle_decide(s).valid
        if by_pieces != by_models:
            disagreements += 1
            print(f"disagreement on {s}", file=sys.stderr)
        if by_pieces:
            valid.append(s)

    print(f"{'mnemonic':<10} {'mood':<6} syllogism")
    for s in valid:
        print(f"{mnemonic_of_syllogism(s):<10} {mood_of_syllogism(s).code:<6} {s}")
    print(f"\n{len(valid)} valid of 256, {disagreements} oracle disagreements")
    return 0 if len(valid) == 15 and disagreements == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
