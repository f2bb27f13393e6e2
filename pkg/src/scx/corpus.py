"""Built-in example profiles and the golden replay of their stated outcomes."""

from __future__ import annotations

from dataclasses import dataclass

from scx import axioms
from scx.profile import (
    Domain,
    Profile,
    in_domain,
    strict_condorcet_loser,
    strict_condorcet_winner,
    weak_condorcet_winners,
)
from scx.rules import borda_scores, get_rule
from scx.theorems import prop2_profiles, verify_prop2_violation

XYZ = ("x", "y", "z")
XYZW = ("x", "y", "z", "w")
X123 = ("x1", "x2", "x3")

# Matrix rows: row r holds the rank-(r+1) alternative of each state.
EXAMPLE2_R1 = [["x1", "x1", "x2", "x3", "x3"], ["x2", "x2", "x3", "x2", "x2"], ["x3", "x3", "x1", "x1", "x1"]]
EXAMPLE2_R2 = [["x1", "x1", "x2", "x2", "x2"], ["x2", "x2", "x3", "x3", "x3"], ["x3", "x3", "x1", "x1", "x1"]]
NOTE_PAIRS = [["x", "x", "y"], ["y", "y", "x"], ["z", "z", "z"]]
NOTE_R = [["x", "x", "y"], ["y", "y", "z"], ["z", "z", "x"]]
NOTE_R_PRIME = [["x", "x", "z"], ["y", "y", "y"], ["z", "z", "x"]]
EXAMPLE3_R = [["x", "x", "y", "z"], ["y", "y", "w", "w"], ["z", "z", "x", "x"], ["w", "w", "z", "y"]]
EXAMPLE3_R_PRIME = [["x", "x", "w", "w"], ["y", "y", "y", "z"], ["z", "z", "x", "x"], ["w", "w", "z", "y"]]
EXAMPLE4_R = [["x", "x", "x", "y", "y", "z", "z"], ["y", "y", "y", "z", "z", "y", "y"], ["z", "z", "z", "x", "x", "x", "x"]]
EXAMPLE4_R_PRIME = [["x", "x", "x", "y", "y", "y", "y"], ["y", "y", "y", "z", "z", "z", "z"], ["z", "z", "z", "x", "x", "x", "x"]]
EXAMPLE5 = [["x", "x", "y", "z", "w"], ["y", "y", "z", "w", "z"], ["w", "z", "w", "y", "y"], ["z", "w", "x", "x", "x"]]
EXAMPLE6 = [["x", "x", "x", "z", "w"], ["y", "y", "y", "y", "y"], ["w", "w", "w", "w", "z"], ["z", "z", "z", "x", "x"]]


def example2() -> tuple[Profile, Profile]:
    return Profile.from_rows(EXAMPLE2_R1, X123), Profile.from_rows(EXAMPLE2_R2, X123)


def note_profiles() -> tuple[Profile, Profile, Profile]:
    """The Resolute-for-Pairs witness, then the GIIA pair R, R'."""
    return tuple(Profile.from_rows(rows, XYZ) for rows in (NOTE_PAIRS, NOTE_R, NOTE_R_PRIME))


def example3() -> tuple[Profile, Profile]:
    return Profile.from_rows(EXAMPLE3_R, XYZW), Profile.from_rows(EXAMPLE3_R_PRIME, XYZW)


def example4() -> tuple[Profile, Profile]:
    return Profile.from_rows(EXAMPLE4_R, XYZ), Profile.from_rows(EXAMPLE4_R_PRIME, XYZ)


def example5() -> Profile:
    return Profile.from_rows(EXAMPLE5, XYZW)


def example6() -> Profile:
    return Profile.from_rows(EXAMPLE6, XYZW)


NAMED_PROFILES = {
    "example2-r1": lambda: example2()[0],
    "example2-r2": lambda: example2()[1],
    "note-pairs": lambda: note_profiles()[0],
    "note-r": lambda: note_profiles()[1],
    "note-r-prime": lambda: note_profiles()[2],
    "example3-r": lambda: example3()[0],
    "example3-r-prime": lambda: example3()[1],
    "prop2-r1": lambda: prop2_profiles()[0],
    "prop2-r2": lambda: prop2_profiles()[1],
    "example4-r": lambda: example4()[0],
    "example4-r-prime": lambda: example4()[1],
    "example5": example5,
    "example6": example6,
}


@dataclass
class CorpusCheck:
    block: str
    what: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        text = f"{status} {self.block}: {self.what} = {_fmt(self.actual)}"
        if not self.ok:
            text += f" (expected {_fmt(self.expected)})"
        return text


def _fmt(v) -> str:
    if isinstance(v, frozenset):
        return "{" + ", ".join(sorted(v)) + "}"
    if isinstance(v, dict):
        return " ".join(f"{k}:{v[k]}" for k in v)
    return str(v)


def _verdict(report) -> str:
    return report.verdict


def _pair(report):
    return report.witness.pair if report.witness else None


def run_corpus() -> list[CorpusCheck]:
    out: list[CorpusCheck] = []

    def expect(block, what, actual, expected):
        out.append(CorpusCheck(block, what, expected, actual))

    last = get_rule("last-of-state-one")
    for n in (2, 3):
        expect("Example 1", f"GIIA, exhaustive m=3 n={n}", _verdict(axioms.check_giia(last, 3, n)), "pass")
        expect("Example 1", f"WDC, exhaustive m=3 n={n}", _verdict(axioms.check_wdc(last, 3, n)), "fail")

    r1, r2 = example2()
    pli = get_rule("plurality-least-index")
    expect("Example 2", "f(R1)", pli(r1), frozenset({"x1"}))
    expect("Example 2", "f(R2)", pli(r2), frozenset({"x2"}))
    expect("Example 2", "strict winner at R1", strict_condorcet_winner(r1), "x2")
    expect("Example 2", "strict winner at R2", strict_condorcet_winner(r2), "x2")
    rep = axioms.check_giia(pli, profiles=[r1, r2])
    expect("Example 2", "GIIA on {R1, R2}", _verdict(rep), "fail")
    expect("Example 2", "GIIA witness pair", _pair(rep), ("x1", "x2"))

    pairs, nr, nr2 = note_profiles()
    fs = get_rule("first-somewhere")
    expect("Note", "f on the top-pair profile", fs(pairs), frozenset({"x", "y"}))
    expect("Note", "Resolute for Pairs on it", _verdict(axioms.check_resolute_for_pairs(fs, profiles=[pairs])), "fail")
    expect("Note", "f(R)", fs(nr), frozenset({"x", "y"}))
    expect("Note", "f(R')", fs(nr2), frozenset({"x", "z"}))
    rep = axioms.check_giia(fs, profiles=[nr, nr2])
    expect("Note", "GIIA on {R, R'}", _verdict(rep), "fail")
    expect("Note", "GIIA witness pair", _pair(rep), ("x", "z"))
    expect("Note", "Weak Monotonicity, exhaustive m=3 n=3", _verdict(axioms.check_weak_monotonicity(fs, 3, 3)), "pass")

    e3, e3p = example3()
    wc = get_rule("weak-condorcet")
    expect("Example 3", "C(R)", wc(e3), frozenset({"x"}))
    expect("Example 3", "C(R')", wc(e3p), frozenset({"x", "w"}))
    rep = axioms.check_giia(wc, profiles=[e3, e3p])
    expect("Example 3", "GIIA on {R, R'}", _verdict(rep), "fail")
    expect("Example 3", "GIIA witness pair", _pair(rep), ("x", "w"))

    p1, p2 = prop2_profiles()
    expect("Proposition 2", "weak winners at R(1)", weak_condorcet_winners(p1), frozenset({"x"}))
    expect("Proposition 2", "weak winners at R(2)", weak_condorcet_winners(p2), frozenset({"y"}))
    expect("Proposition 2", "R(1) in unique-weak-condorcet domain", in_domain(p1, Domain.UNIQUE_WEAK_CONDORCET), True)
    expect("Proposition 2", "GIIA witness pair", verify_prop2_violation().pair, ("x", "y"))

    e4, e4p = example4()
    plu = get_rule("plurality")
    expect("Example 4", "plurality at R", plu(e4), frozenset({"x"}))
    expect("Example 4", "plurality at R'", plu(e4p), frozenset({"y"}))
    rep = axioms.check_giia(plu, profiles=[e4, e4p])
    expect("Example 4", "GIIA on {R, R'}", _verdict(rep), "fail")
    expect("Example 4", "GIIA witness pair", _pair(rep), ("x", "y"))

    e5 = example5()
    borda = get_rule("borda")
    expect("Example 5", "plurality", plu(e5), frozenset({"x"}))
    expect("Example 5", "strict Condorcet loser", strict_condorcet_loser(e5), "x")
    expect("Example 5", "strict Condorcet winner", strict_condorcet_winner(e5), "y")
    expect("Example 5", "Borda scores", borda_scores(e5).scores, {"x": 11, "y": 14, "z": 13, "w": 12})
    expect("Example 5", "Borda winners", borda(e5), frozenset({"y"}))
    expect("Example 5", "plurality Condorcet-winner property",
           _verdict(axioms.check_condorcet_winner_property(plu, profiles=[e5])), "fail")
    rep = axioms.check_anti_condorcet_loser(plu, profiles=[e5])
    expect("Example 5", "plurality anti-Condorcet-loser property", _verdict(rep), "fail")
    expect("Example 5", "chosen loser", rep.witness.alternative if rep.witness else None, "x")

    e6 = example6()
    expect("Example 6", "strict Condorcet winner", strict_condorcet_winner(e6), "x")
    expect("Example 6", "Borda scores", borda_scores(e6).scores, {"x": 14, "y": 15, "z": 9, "w": 12})
    expect("Example 6", "Borda winners", borda(e6), frozenset({"y"}))
    expect("Example 6", "Borda Condorcet-winner property",
           _verdict(axioms.check_condorcet_winner_property(borda, profiles=[e6])), "fail")
    return out
