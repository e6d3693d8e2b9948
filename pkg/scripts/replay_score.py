"""Recompute a session score from its seed and answer log.

Reads [challengeId, answer, elapsedMs] triples as JSON (file or stdin) and
prints the score a fresh deal yields for them, so stored scores can be
audited from any process.
"""

from __future__ import annotations

import argparse
import json
import sys

from dasasap import SessionMode, recompute_score


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mode", choices=[m.value for m in SessionMode], required=True)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--count", type=int, required=True)
    parser.add_argument(
        "--answers",
        default="-",
        help="path to a JSON list of [challengeId, answer, elapsedMs], or - for stdin",
    )
    args = parser.parse_args(argv)

    if args.answers == "-":
        raw = json.load(sys.stdin)
    else:
        with open(args.answers, encoding="utf-8") as fh:
            raw = json.load(fh)
    answers = [(cid, answer, int(ms)) for cid, answer, ms in raw]

    score = recompute_score(SessionMode(args.mode), args.seed, args.count, answers)
    print(score)
    return 0


if __name__ == "__main__":
    sys.exit(main())
