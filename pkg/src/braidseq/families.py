"""Named braid families: the skew-palindromic sequences, the spin-group
sequences, and the seeded small-normalized-entropy sequences.

Family outputs are literal words (not conjugacy-normalized), matching the
displayed closed forms; golden tests compare letter-for-letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log, sqrt

from . import dynnikov
from .standard import StandardForm, TwistProgram, apply_program
from .words import BraidWord

SEEDED = ("z", "beta", "b_p")
CLOSED_FORM = ("xi", "eta", "o", "v")

#: default seed for the z family: the standard form of sigma_1^2 sigma_2^-1
DEFAULT_Z_SEED = StandardForm(3, ((-1,),))


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its parameter and optional seed data."""

    name: str
    p: int
    seed: StandardForm | None = None
    pre_twist: int = 0

    def __post_init__(self):
        if self.name not in SEEDED + CLOSED_FORM:
            raise ValueError(f"unknown family {self.name!r}")
        if self.p < 1:
            raise ValueError("family parameter must be >= 1")
        if self.pre_twist < 0:
            raise ValueError("pre-twist must be >= 0")


@dataclass(frozen=True)
class FamilyMember:
    """A generated braid with its optional spherical companion."""

    word: BraidWord
    companion: BraidWord | None = None


def generate(spec: FamilySpec) -> FamilyMember:
    """The family member at parameter p, as a literal word."""
    p = spec.p
    if spec.name == "xi":
        letters = tuple(range(1, 2 + 2 * p)) + tuple(range(3, 4 + 2 * p))
        return FamilyMember(BraidWord(4 + 2 * p, letters))
    if spec.name == "eta":
        letters = tuple(range(1, 5 + 2 * p)) + tuple(range(3, 7 + 2 * p))
        return FamilyMember(BraidWord(7 + 2 * p, letters))
    if spec.name == "o":
        run = tuple(range(3, 5 + 2 * p))
        letters = (1, 2) + run + run + (4 + 2 * p,)
        word = BraidWord(5 + 2 * p, letters)
        return FamilyMember(word, word.shift().to_spherical())
    if spec.name == "v":
        run = tuple(range(1, 5 + 2 * p))
        letters = run + run + (4 + 2 * p,) * 3
        word = BraidWord(5 + 2 * p, letters)
        return FamilyMember(word, word.shift().to_spherical())
    seed = spec.seed if spec.seed is not None else DEFAULT_Z_SEED
    if spec.name == "z":
        prog = TwistProgram((0, spec.pre_twist + p, 1))
    elif spec.name == "beta":
        prog = TwistProgram((0, 1, p))
    else:                                # b_p
        prog = TwistProgram((p,))
    return FamilyMember(apply_program(seed, prog).to_braid_word())


def is_palindromic(b: BraidWord, braid_level: bool = False):
    """Fixed by letter reversal; at braid level via the word-problem oracle.

    A palindromic braid has involutive permutation, which is asserted.
    """
    word_level = b.rev().letters == b.letters
    if word_level and not (b.permutation() * b.permutation()).is_identity():
        raise AssertionError("palindromic braid with non-involutive permutation")
    if not braid_level:
        return word_level
    return word_level or bool(dynnikov.braids_equal(b.rev(), b))


def is_skew_palindromic(b: BraidWord, braid_level: bool = False):
    """Fixed by reversal composed with the index flip j -> n - j."""
    word_level = b.skew().letters == b.letters
    if not braid_level:
        return word_level
    return word_level or bool(dynnikov.braids_equal(b.skew(), b))


PALINDROMIC_FLOOR = sqrt(2 + sqrt(5))


def palindromic_bound_check(b: BraidWord, tol: float = 1e-7,
                            max_iter: int = 2048) -> bool:
    """Check log(lambda) >= log sqrt(2 + sqrt(5)) for a palindromic pA braid.

    Also checks the route through the pure square: the square of a
    palindromic braid is pure, so ent(b^2) >= log(2 + sqrt(5)).
    """
    if not is_palindromic(b, braid_level=True):
        raise ValueError("input is not palindromic")
    est = dynnikov.entropy_estimate(b, tol=tol, max_iter=max_iter)
    est.require_converged()
    direct = est.value >= log(PALINDROMIC_FLOOR) - tol
    est_sq = dynnikov.entropy_estimate(b * b, tol=tol, max_iter=max_iter)
    est_sq.require_converged()
    squared = est_sq.value >= log(2 + sqrt(5)) - tol
    return direct and squared
