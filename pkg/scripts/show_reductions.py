"""Print a figure-1 derivation for every valid mood outside figure 1."""

from __future__ import annotations

import sys

from dasasap import (
    decide,
    enumerate_all,
    figure1_mnemonic,
    mnemonic_of_syllogism,
    mood_of_syllogism,
    reduce_to_figure1,
)


def main() -> int:
    for s in enumerate_all():
        if not decide(s).valid:
            continue
        name = mnemonic_of_syllogism(s)
        mood = mood_of_syllogism(s)
        steps = reduce_to_figure1(s)
        print(f"{name} ({mood.code})  {s}")
        if not steps:
            print("  already figure 1")
        for k, step in enumerate(steps, start=1):
            t = step.transformation
            print(f"  step {k}: {t.kind.value}({t.applied_to.value}) ⊢ {step.result}")
        if steps:
            print(f"  figure 1 mood: {figure1_mnemonic(steps[-1].result)}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
