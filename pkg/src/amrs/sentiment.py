"""Lexicon sentiment scoring and the two-scorer combination rule.

The lexicon scorer is deterministic: it averages the valences of matched
terms (after a one-token negation window and intensity boosters) and squashes
the mean through x / (1 + |x|) so any text lands in [-1, 1]. An auxiliary
per-post score in [-1, 1] (e.g. from a transformer model) can be blended in
via ``combined_sentiment``; without one the lexicon score is used as-is.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional

from .errors import OutOfRangeInput
from .text import tokenize

# Modifier applied when the preceding token negates or boosts a lexicon term.
NEGATORS = frozenset({
    "not", "no", "never", "none", "nor", "neither", "cannot", "without",
    "aint", "ain", "dont", "don", "isnt", "isn", "wasnt", "wasn", "doesnt",
    "doesn", "didnt", "didn", "shouldnt", "shouldn", "wouldnt", "wouldn",
    "couldnt", "couldn", "arent", "aren", "wont",
})
BOOSTER_INCREMENT = 0.293
BOOSTERS = {
    "very": BOOSTER_INCREMENT, "extremely": BOOSTER_INCREMENT,
    "absolutely": BOOSTER_INCREMENT, "totally": BOOSTER_INCREMENT,
    "super": BOOSTER_INCREMENT, "really": BOOSTER_INCREMENT,
    "incredibly": BOOSTER_INCREMENT, "insanely": BOOSTER_INCREMENT,
    "mega": BOOSTER_INCREMENT, "ultra": BOOSTER_INCREMENT,
    "so": BOOSTER_INCREMENT,
    "slightly": -BOOSTER_INCREMENT, "somewhat": -BOOSTER_INCREMENT,
    "barely": -BOOSTER_INCREMENT, "kinda": -BOOSTER_INCREMENT,
    "sorta": -BOOSTER_INCREMENT, "mildly": -BOOSTER_INCREMENT,
    "little": -BOOSTER_INCREMENT,
}


def load_lexicon(path: Optional[Path] = None) -> dict[str, float]:
    """Load a ``term<TAB>valence`` file; defaults to the bundled lexicon."""
    if path is None:
        source = resources.files("amrs.data").joinpath("lexicon.tsv")
        content = source.read_text(encoding="utf-8")
    else:
        content = Path(path).read_text(encoding="utf-8")
    lexicon: dict[str, float] = {}
    for line in content.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        term, valence = line.split("\t")
        lexicon[term] = float(valence)
    return lexicon


class LexiconScorer:
    """Valence-lexicon sentiment with negation flip and intensity boosters."""

    def __init__(self, lexicon: Optional[Mapping[str, float]] = None):
        self.lexicon = dict(lexicon) if lexicon is not None else load_lexicon()

    def score(self, text: str) -> float:
        tokens = tokenize(text)
        valences: list[float] = []
        for i, token in enumerate(tokens):
            valence = self.lexicon.get(token)
            if valence is None:
                continue
            prev = tokens[i - 1] if i > 0 else ""
            if prev in NEGATORS:
                valence = -valence
            elif prev in BOOSTERS:
                increment = BOOSTERS[prev]
                valence = valence + increment if valence > 0 else valence - increment
            valences.append(valence)
        if not valences:
            return 0.0
        mean = sum(valences) / len(valences)
        return mean / (1.0 + abs(mean))


_default_scorer: Optional[LexiconScorer] = None


def lexicon_sentiment(text: str) -> float:
    """Score ``text`` with the bundled lexicon. Total and deterministic."""
    global _default_scorer
    if _default_scorer is None:
        _default_scorer = LexiconScorer()
    return _default_scorer.score(text)


@dataclass(frozen=True, slots=True)
class SentimentWeights:
    w_lexicon: float = 0.4
    w_aux: float = 0.6

    def __post_init__(self) -> None:
        if abs(self.w_lexicon + self.w_aux - 1.0) > 1e-9:
            raise ValueError("sentiment weights must sum to 1")


def combined_sentiment(lexicon: float, aux: Optional[float] = None,
                       weights: SentimentWeights = SentimentWeights()) -> float:
    """Blend lexicon and auxiliary scores; fall back to lexicon when aux is absent."""
    if not -1.0 <= lexicon <= 1.0:
        raise OutOfRangeInput(f"lexicon sentiment {lexicon} outside [-1, 1]")
    if aux is None:
        return lexicon
    if not -1.0 <= aux <= 1.0:
        raise OutOfRangeInput(f"aux sentiment {aux} outside [-1, 1]")
    return weights.w_lexicon * lexicon + weights.w_aux * aux
