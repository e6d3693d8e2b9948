import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dasasap import (
    VALID_SYLLOGISMS,
    BadCount,
    Challenge,
    ChallengeKind,
    DuplicateAnswer,
    SessionFinished,
    SessionMode,
    SessionNotComplete,
    UnknownChallenge,
    UnknownTopic,
    decide,
    finish_session,
    grade,
    learning_content,
    new_session,
    random_syllogism,
    recompute_score,
    score_delta,
    submit_answer,
)
from dasasap.engine import TOPICS


def _answer_all_correctly(session, elapsed_ms=0):
    for c in session.challenges:
        want = "valid" if decide(c.syllogism).valid else "invalid"
        submit_answer(session, c.id, want, elapsed_ms)


def test_same_seed_deals_identical_sessions():
    a = new_session(SessionMode.LEARNING_QUIZ, 42, 10)
    b = new_session(SessionMode.LEARNING_QUIZ, 42, 10)
    assert [str(c.syllogism) for c in a.challenges] == [
        str(c.syllogism) for c in b.challenges
    ]
    assert [c.id for c in a.challenges] == [f"q{i}" for i in range(1, 11)]
    assert [c.issued_at for c in a.challenges] == list(range(10))


def test_different_seeds_differ():
    a = new_session(SessionMode.LEARNING_QUIZ, 1, 20)
    b = new_session(SessionMode.LEARNING_QUIZ, 2, 20)
    assert [str(c.syllogism) for c in a.challenges] != [
        str(c.syllogism) for c in b.challenges
    ]


@pytest.mark.parametrize("count", [0, -1, 101, 10**6])
def test_count_bounds(count):
    with pytest.raises(BadCount):
        new_session(SessionMode.LEARNING_QUIZ, 0, count)


def test_judge_mix_is_roughly_even():
    valid = 0
    for seed in range(10):
        s = new_session(SessionMode.LEARNING_QUIZ, seed, 100)
        valid += sum(1 for c in s.challenges if decide(c.syllogism).valid)
    assert 0.45 <= valid / 1000 <= 0.55


def test_arcade_deals_only_valid_shapes():
    s = new_session(SessionMode.ARCADE, 5, 5)
    for c in s.challenges:
        assert c.kind is ChallengeKind.ASSEMBLE
        assert decide(c.syllogism).valid
        assert sorted(map(str, c.pieces)) == sorted(
            map(str, (c.syllogism.major, c.syllogism.minor))
        )


def test_arcade_shuffles_pieces():
    seen_swapped = False
    for seed in range(30):
        s = new_session(SessionMode.ARCADE, seed, 5)
        for c in s.challenges:
            if c.pieces != (c.syllogism.major, c.syllogism.minor):
                seen_swapped = True
    assert seen_swapped


def test_score_delta_formula():
    assert score_delta(True, 2300, 1) == 140
    assert score_delta(True, 20_000, 1) == 100
    assert score_delta(True, 0, 1) == 150
    assert score_delta(True, 9_999, 1) == 105
    assert score_delta(True, 10_000, 1) == 100
    assert score_delta(True, 0, 5) == 750
    assert score_delta(True, 0, 7) == 750  # streak multiplier caps at 5
    assert score_delta(False, 0, 3) == 0


def test_streak_grows_and_resets():
    session = new_session(SessionMode.LEARNING_QUIZ, 3, 4)
    c = session.challenges
    right = ["valid" if decide(ch.syllogism).valid else "invalid" for ch in c]
    wrong = ["invalid" if r == "valid" else "valid" for r in right]

    r1 = submit_answer(session, c[0].id, right[0], 0)
    r2 = submit_answer(session, c[1].id, right[1], 0)
    assert (r1.delta, r2.delta) == (150, 300)
    r3 = submit_answer(session, c[2].id, wrong[2], 0)
    assert r3.delta == 0 and session.streak == 0
    r4 = submit_answer(session, c[3].id, right[3], 0)
    assert r4.delta == 150  # streak restarted at 1


def test_judge_answers_are_normalized_but_constrained():
    session = new_session(SessionMode.LEARNING_QUIZ, 3, 2)
    c0 = session.challenges[0]
    with pytest.raises(ValueError):
        submit_answer(session, c0.id, "maybe", 0)
    record = submit_answer(session, c0.id, "  VALID ", 0)
    assert record.answer == "valid"


def test_negative_elapsed_rejected():
    session = new_session(SessionMode.LEARNING_QUIZ, 3, 1)
    with pytest.raises(ValueError):
        submit_answer(session, "q1", "valid", -5)


def test_submit_errors():
    session = new_session(SessionMode.LEARNING_QUIZ, 3, 2)
    with pytest.raises(UnknownChallenge):
        submit_answer(session, "zz", "valid", 0)
    submit_answer(session, "q1", "valid", 0)
    with pytest.raises(DuplicateAnswer):
        submit_answer(session, "q1", "valid", 0)
    finish_session(session, "x", abandon=True)
    with pytest.raises(SessionFinished):
        submit_answer(session, "q2", "valid", 0)


def test_finish_requires_completion_or_abandonment():
    session = new_session(SessionMode.LEARNING_QUIZ, 3, 2)
    with pytest.raises(SessionNotComplete):
        finish_session(session, "x")
    submit_answer(session, "q1", "valid", 0)
    entry = finish_session(session, "x", abandon=True)
    assert entry.score == session.score
    with pytest.raises(SessionFinished):
        finish_session(session, "x", abandon=True)


def test_perfect_session_scores_at_least_count_times_base():
    session = new_session(SessionMode.LEARNING_QUIZ, 11, 10)
    _answer_all_correctly(session, elapsed_ms=500)
    entry = finish_session(session, "x")
    assert entry.score >= 1000


def test_all_wrong_scores_zero():
    session = new_session(SessionMode.LEARNING_QUIZ, 11, 10)
    for c in session.challenges:
        want = "valid" if decide(c.syllogism).valid else "invalid"
        other = "invalid" if want == "valid" else "valid"
        submit_answer(session, c.id, other, 0)
    assert finish_session(session, "x").score == 0


def test_assemble_accepts_any_valid_completion():
    session = new_session(SessionMode.ARCADE, 7, 10)
    for c in session.challenges:
        assert grade(c, str(c.syllogism.conclusion))


def test_assemble_accepts_converted_particular_conclusions():
    # an I conclusion converts, so PIS completes wherever SIP does
    checked = 0
    for s in VALID_SYLLOGISMS:
        if s.conclusion.form.value != "I":
            continue
        challenge = Challenge("t", s, ChallengeKind.ASSEMBLE, 0, (s.major, s.minor))
        flipped = f"{s.conclusion.predicate}I{s.conclusion.subject}"
        assert grade(challenge, flipped)
        checked += 1
    assert checked == 4  # Darii, Datisi, Disamis, Dimaris


def test_assemble_rejects_junk_without_raising():
    c = new_session(SessionMode.ARCADE, 9, 1).challenges[0]
    for junk in ("", "not a proposition", "XAY", "SAP extra", "~S.A.P"):
        assert grade(c, junk) is False


def test_assemble_rejects_invalid_completions():
    session = new_session(SessionMode.ARCADE, 13, 20)
    rejected = 0
    for c in session.challenges:
        concl = c.syllogism.conclusion
        if concl.form.value == "A":
            # A conclusions never survive subject/predicate swap
            flipped = f"{concl.predicate}A{concl.subject}"
            assert grade(c, flipped) is False
            rejected += 1
    assert rejected > 0


@settings(max_examples=25)
@given(
    st.integers(min_value=0, max_value=2**32),
    st.lists(st.tuples(st.booleans(), st.integers(min_value=0, max_value=30_000)), min_size=1, max_size=10),
)
def test_recompute_matches_live_score(seed, plan):
    count = len(plan)
    session = new_session(SessionMode.LEARNING_QUIZ, seed, count)
    for challenge, (answer_valid, elapsed) in zip(session.challenges, plan):
        submit_answer(
            session, challenge.id, "valid" if answer_valid else "invalid", elapsed
        )
    log = [(a.challenge_id, a.answer, a.elapsed_ms) for a in session.answers]
    assert recompute_score(SessionMode.LEARNING_QUIZ, seed, count, log) == session.score


def test_out_of_order_answers_replay_in_submission_order():
    session = new_session(SessionMode.LEARNING_QUIZ, 21, 3)
    order = [session.challenges[2], session.challenges[0], session.challenges[1]]
    for c in order:
        want = "valid" if decide(c.syllogism).valid else "invalid"
        submit_answer(session, c.id, want, 1000)
    log = [(a.challenge_id, a.answer, a.elapsed_ms) for a in session.answers]
    assert recompute_score(SessionMode.LEARNING_QUIZ, 21, 3, log) == session.score


def test_random_syllogism_is_seeded_and_filtered():
    a, valid_a = random_syllogism(7, True)
    b, valid_b = random_syllogism(7, True)
    assert str(a) == str(b) and valid_a and valid_b
    c, valid_c = random_syllogism(7, False)
    assert not valid_c
    assert str(random_syllogism(123)[0]) == str(random_syllogism(123)[0])


def test_learning_topics():
    assert set(TOPICS) == {
        "what-is-logic",
        "what-is-a-syllogism",
        "what-is-dasasap",
        "so-you-think-you-are-logical",
    }
    page = learning_content("what-is-logic")
    headings = [s.heading.lower() for s in page.sections]
    assert any("proposition" in h for h in headings)
    assert any("argument" in h for h in headings)
    assert any("form" in h and "content" in h for h in headings)
    assert any("truth" in h and "validity" in h for h in headings)


def test_quiz_topic_carries_a_session_descriptor():
    page = learning_content("so-you-think-you-are-logical")
    assert page.quiz is not None
    assert page.quiz.mode is SessionMode.LEARNING_QUIZ
    assert page.quiz.default_count >= 1
    for other in TOPICS[:3]:
        assert learning_content(other).quiz is None


def test_unknown_topic():
    with pytest.raises(UnknownTopic):
        learning_content("bogus-topic")
