"""Terminal front door: decide, enumerate, reduce, quiz, serve.

Exit codes follow the shell convention 0 = valid / success, 1 = invalid,
2 = usage or input error, so scripts can branch on a verdict directly.
Diagnostics go to stderr; machine-readable output to stdout.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import socket
import sys
import time

from .diagram import decide
from .engine import (
    SessionMode,
    finish_session,
    new_session,
    submit_answer,
)
from .errors import (
    BadCount,
    DasasapError,
    NotValid,
    ParseError,
    UnknownName,
)
from .model import (
    Syllogism,
    enumerate_all,
    mnemonic_of_syllogism,
    mood_of,
    mood_of_syllogism,
    syllogism_of_mood,
)
from .notation import parse_syllogism
from .semantics import figure1_mnemonic, oracle_decide, reduce_to_figure1

EXIT_VALID = 0
EXIT_INVALID = 1
EXIT_ERROR = 2


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _paint(text: str, code: str) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _color_enabled() else text


def _resolve(arg: str) -> Syllogism:
    """A mnemonic name (case-insensitive) or a canonical string."""
    try:
        return syllogism_of_mood(mood_of(arg))
    except UnknownName:
        return parse_syllogism(arg)


def _cmd_decide(args: argparse.Namespace) -> int:
    s = _resolve(args.syllogism)
    decision = decide(s)
    print("valid" if decision.valid else "invalid")
    if args.trace:
        t = decision.trace
        a, b = t.middle_edges
        print(f"middle edges: {a.term}:{a.polarity.value} | {b.term}:{b.polarity.value}")
        print(f"identity junction formed: {'yes' if t.ip_formed else 'no'}")
        print(f"conclusion fits: {'yes' if t.conclusion_fit else 'no'}")
        if t.failure_reason is not None:
            print(f"failure: {t.failure_reason.value}")
    if args.countermodel and not decision.valid:
        verdict = oracle_decide(s)
        print(json.dumps(verdict.countermodel.to_json()))
    return EXIT_VALID if decision.valid else EXIT_INVALID


def _rows(figure: int | None, want_valid: bool | None) -> list[dict]:
    rows = []
    for s in enumerate_all():
        mood = mood_of_syllogism(s)
        if figure is not None and mood.figure != figure:
            continue
        is_valid = decide(s).valid
        if want_valid is not None and is_valid != want_valid:
            continue
        rows.append(
            {
                "syllogism": str(s),
                "mood": mood.code,
                "figure": mood.figure,
                "verdict": "valid" if is_valid else "invalid",
                "mnemonic": mnemonic_of_syllogism(s) or "",
            }
        )
    return rows


def _cmd_enumerate(args: argparse.Namespace) -> int:
    want_valid = True if args.valid else False if args.invalid else None
    rows = _rows(args.figure, want_valid)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        writer = csv.DictWriter(
            sys.stdout, fieldnames=["syllogism", "mood", "figure", "verdict", "mnemonic"]
        )
        writer.writeheader()
        writer.writerows(rows)
    else:
        for r in rows:
            name = f"  {r['mnemonic']}" if r["mnemonic"] else ""
            print(f"{r['mood']}  {r['syllogism']}  {r['verdict']}{name}")
    return EXIT_VALID


def _cmd_reduce(args: argparse.Namespace) -> int:
    s = _resolve(args.syllogism)
    try:
        steps = reduce_to_figure1(s)
    except NotValid as exc:
        print(f"not valid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not steps:
        print(f"already figure 1 ({figure1_mnemonic(s)})")
        return EXIT_VALID
    for k, step in enumerate(steps, start=1):
        t = step.transformation
        print(f"step {k}: {t.kind.value}({t.applied_to.value}) ⊢ {step.result}")
    print(f"figure 1 mood: {figure1_mnemonic(steps[-1].result)}")
    return EXIT_VALID


def _cmd_quiz(args: argparse.Namespace) -> int:
    session = new_session(SessionMode.LEARNING_QUIZ, args.seed, args.count)
    total = len(session.challenges)
    print(f"{total} syllogisms. Answer v(alid) or i(nvalid); empty line abandons.")
    answered = 0
    for challenge in session.challenges:
        print(f"\n[{challenge.issued_at + 1}/{total}] {challenge.syllogism}")
        started = time.monotonic()
        answer = None
        while answer is None:
            try:
                raw = input("valid or invalid? ").strip().lower()
            except EOFError:
                raw = ""
            if raw in ("v", "valid"):
                answer = "valid"
            elif raw in ("i", "invalid"):
                answer = "invalid"
            elif raw == "":
                break
            else:
                print("please answer v/valid or i/invalid", file=sys.stderr)
        if answer is None:
            break
        elapsed_ms = int((time.monotonic() - started) * 1000)
        record = submit_answer(session, challenge.id, answer, elapsed_ms)
        answered += 1
        verdict = _paint("correct", "32") if record.correct else _paint("wrong", "31")
        print(f"{verdict}  +{record.delta}  score {session.score}  streak {session.streak}")
    entry = finish_session(session, args.player, abandon=answered < total)
    print(f"\nfinal score: {entry.score} ({answered}/{total} answered, seed {args.seed})")
    return EXIT_VALID


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import DEFAULT_RANKINGS, create_app

    rankings = args.rankings or os.environ.get("DASASAP_RANKINGS", DEFAULT_RANKINGS)
    app = create_app(rankings_path=rankings)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    host, port = sock.getsockname()[:2]
    print(f"listening on http://{host}:{port}  (rankings: {rankings})", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return EXIT_VALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dasasap",
        description="Syllogistic validity as jigsaw-piece interlocking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide one syllogism (string or mnemonic name)")
    p.add_argument("syllogism", help='e.g. "MAP,SAM=>SAP" or Barbara')
    p.add_argument("--trace", action="store_true", help="show the interlock derivation")
    p.add_argument(
        "--countermodel", action="store_true", help="print a countermodel when invalid"
    )
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("enumerate", help="list the 256 moods with verdicts")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--valid", action="store_true", help="only the 15 valid moods")
    group.add_argument("--invalid", action="store_true", help="only the invalid moods")
    p.add_argument("--figure", type=int, choices=(1, 2, 3, 4), help="restrict to a figure")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("reduce", help="derive a figure-1 equivalent of a valid syllogism")
    p.add_argument("syllogism", help='e.g. Camestres or "PAM,SEM=>SEP"')
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("quiz", help="interactive valid/invalid quiz")
    p.add_argument("-n", "--count", type=int, default=10, help="number of questions")
    p.add_argument("--seed", type=int, default=0, help="deal seed")
    p.add_argument("--player", default="terminal", help="name on the final line")
    p.set_defaults(func=_cmd_quiz)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("DASASAP_PORT", "8787")),
        help="listen port; 0 picks a free one",
    )
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--rankings", help="ranking file path")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BadCount as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DasasapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
